#include "zdbkit/fhs.hpp"

#include <algorithm>

#include "zdbkit/errors.hpp"
#include "zdbkit/kernels.hpp"
#include "zdbkit/cyclotomy.hpp"

namespace zdbkit {

namespace {

std::int64_t ceil_div_128(__int128 num, __int128 den) {
    if (den <= 0) throw PreconditionError("ceil_div: nonpositive denominator");
    __int128 q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return static_cast<std::int64_t>(q);
}

} // namespace

std::int64_t hamming_correlation(const FhSequence& x, const FhSequence& y, std::int64_t t) {
    if (x.n != y.n || !x.alphabet.same_alphabet(y.alphabet))
        throw PreconditionError("hamming_correlation: length/alphabet mismatch");
    std::int64_t shift = t % x.n;
    if (shift < 0) shift += x.n;
    return kernels::match_count_cyclic(x.symbols.data(), y.symbols.data(),
                                       static_cast<std::size_t>(x.n),
                                       static_cast<std::size_t>(shift));
}

std::int64_t h_max(const FhSequence& x) {
    std::int64_t best = 0;
    for (std::int64_t t = 1; t < x.n; ++t) best = std::max(best, hamming_correlation(x, x, t));
    return best;
}

std::int64_t m_max(const FhSet& set) {
    std::int64_t best = 0;
    const std::size_t count = set.seqs.size();
    for (std::size_t i = 0; i < count; ++i) {
        best = std::max(best, h_max(set.seqs[i]));
        for (std::size_t j = i + 1; j < count; ++j)
            for (std::int64_t t = 0; t < set.seqs[i].n; ++t)
                best = std::max(best, hamming_correlation(set.seqs[i], set.seqs[j], t));
    }
    return best;
}

std::int64_t lempel_greenberger_bound(std::int64_t n, std::int64_t ell) {
    if (ell < 1) throw PreconditionError("lempel_greenberger_bound: ell must be positive");
    if (n <= 1) return 0;
    const std::int64_t eps = n % ell;
    return ceil_div_128(static_cast<__int128>(n - eps) * (n + eps - ell),
                        static_cast<__int128>(ell) * (n - 1));
}

PengFan peng_fan_bounds(std::int64_t n, std::int64_t N, std::int64_t ell) {
    if (n < 1 || N < 1 || ell < 1) throw PreconditionError("peng_fan_bounds: all inputs must be positive");
    PengFan out;
    const __int128 nN = static_cast<__int128>(n) * N;
    out.I = static_cast<std::int64_t>(nN / ell);
    if (nN <= 1) return out;
    out.bound1 = ceil_div_128((nN - ell) * n, (nN - 1) * ell);
    out.bound2 = ceil_div_128(2 * static_cast<__int128>(out.I) * nN -
                                  static_cast<__int128>(out.I + 1) * out.I * ell,
                              (nN - 1) * N);
    return out;
}

FhsReport zdb_set_to_fhs(const std::vector<ZdbFunction>& set, int threads) {
    if (set.empty()) throw PreconditionError("zdb_set_to_fhs: empty set");
    const std::int64_t n = set.front().n;
    for (const auto& f : set)
        if (f.n != n || !f.codomain.same_alphabet(set.front().codomain))
            throw PreconditionError("zdb_set_to_fhs: non-uniform input set (length/alphabet)");

    std::int64_t lambda = -1;
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto chk = is_zdb(set[i], threads);
        if (!chk.ok())
            throw PreconditionError("zdb_set_to_fhs: member " + std::to_string(i) +
                                    " is not ZDB (shift " + std::to_string(chk.witness_shift) +
                                    " count " + std::to_string(chk.witness_count) + ")");
        if (lambda < 0) lambda = *chk.lambda;
        if (*chk.lambda != lambda)
            throw PreconditionError("zdb_set_to_fhs: non-uniform input set (lambda differs)");
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (i == j) continue;
            auto counts = cross_zero_counts(set[i], set[j], threads);
            for (std::int64_t a = 0; a < n; ++a)
                if (counts[static_cast<std::size_t>(a)] != lambda)
                    throw PreconditionError(
                        "zdb_set_to_fhs: non-uniform input set (cross count at shift " +
                        std::to_string(a) + " is " +
                        std::to_string(counts[static_cast<std::size_t>(a)]) + ", not " +
                        std::to_string(lambda) + ")");
        }
    }

    FhsReport report;
    report.lambda = lambda;
    for (const auto& f : set)
        report.set.seqs.push_back(FhSequence{f.n, f.codomain, f.values});

    report.M = m_max(report.set);
    if (report.M != lambda)
        throw VerificationError("zdb_set_to_fhs: M(F) = " + std::to_string(report.M) +
                                " != lambda = " + std::to_string(lambda));
    const std::int64_t ell = set.front().ell();
    report.lg_bound = lempel_greenberger_bound(n, ell);
    report.per_seq_optimal = true;
    for (const auto& s : report.set.seqs) {
        report.per_seq_h.push_back(h_max(s));
        report.per_seq_optimal = report.per_seq_optimal && report.per_seq_h.back() == report.lg_bound;
    }
    report.pf = peng_fan_bounds(n, static_cast<std::int64_t>(set.size()), ell);
    report.set_optimal = report.M == std::max(report.pf.bound1, report.pf.bound2);
    return report;
}

LcReport berlekamp_massey(const FieldTable& field, const std::vector<Fe>& seq) {
    if (seq.empty()) throw PreconditionError("berlekamp_massey: empty sequence");
    for (const Fe& x : seq)
        if (!field.in_base(x))
            throw PreconditionError("berlekamp_massey: symbol outside the base field");

    // Two periods give the synthesis enough terms for any L <= period.
    std::vector<Fe> s(seq);
    s.insert(s.end(), seq.begin(), seq.end());

    std::vector<Fe> C{field.one()}, B{field.one()};
    std::int64_t L = 0, gap = 1;
    Fe b = field.one();
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
        Fe d = s[pos];
        for (std::int64_t i = 1; i <= L; ++i)
            d = field.add(d, field.mul(C[static_cast<std::size_t>(i)], s[pos - static_cast<std::size_t>(i)]));
        if (d.is_zero()) {
            ++gap;
            continue;
        }
        Fe coef = field.mul(d, field.inv(b));
        if (2 * L <= static_cast<std::int64_t>(pos)) {
            std::vector<Fe> T = C;
            if (C.size() < B.size() + static_cast<std::size_t>(gap))
                C.resize(B.size() + static_cast<std::size_t>(gap), field.zero());
            for (std::size_t i = 0; i < B.size(); ++i)
                C[i + static_cast<std::size_t>(gap)] =
                    field.sub(C[i + static_cast<std::size_t>(gap)], field.mul(coef, B[i]));
            L = static_cast<std::int64_t>(pos) + 1 - L;
            B = std::move(T);
            b = d;
            gap = 1;
        } else {
            if (C.size() < B.size() + static_cast<std::size_t>(gap))
                C.resize(B.size() + static_cast<std::size_t>(gap), field.zero());
            for (std::size_t i = 0; i < B.size(); ++i)
                C[i + static_cast<std::size_t>(gap)] =
                    field.sub(C[i + static_cast<std::size_t>(gap)], field.mul(coef, B[i]));
            ++gap;
        }
    }
    C.resize(static_cast<std::size_t>(L) + 1, field.zero());

    // Replay the recurrence over both periods.
    for (std::size_t pos = static_cast<std::size_t>(L); pos < s.size(); ++pos) {
        Fe acc = field.zero();
        for (std::int64_t i = 0; i <= L; ++i)
            acc = field.add(acc, field.mul(C[static_cast<std::size_t>(i)], s[pos - static_cast<std::size_t>(i)]));
        if (!acc.is_zero()) throw std::logic_error("berlekamp_massey: synthesized LFSR fails replay");
    }

    LcReport report;
    report.lc = L;
    report.minimal_poly = std::move(C);
    report.index_set_size = L;
    return report;
}

LcReport expansion_lc(const FieldTable& field, const std::vector<Fe>& seq) {
    const std::int64_t N = field.order();
    if (static_cast<std::int64_t>(seq.size()) != N)
        throw PreconditionError("expansion_lc: period mismatch, expected q^m - 1 = " +
                                std::to_string(N) + " symbols");

    // c_i = -sum_t s_t theta^(-i t): the full-period geometric sums collapse
    // to the group order, which is -1 in the prime field.
    std::vector<Fe> coef(static_cast<std::size_t>(N), Fe{});
    std::vector<std::int64_t> index_set;
    for (std::int64_t i = 0; i < N; ++i) {
        Fe acc = field.zero();
        for (std::int64_t t = 0; t < N; ++t) {
            const Fe& s = seq[static_cast<std::size_t>(t)];
            if (s.is_zero()) continue;
            acc = field.add(acc, field.mul(s, field.from_log(-(i * t) % N)));
        }
        Fe c = field.neg(acc);
        coef[static_cast<std::size_t>(i)] = c;
        if (!c.is_zero()) index_set.push_back(i);
    }

    // Re-synthesize the sequence from the nonzero coefficients.
    for (std::int64_t t = 0; t < N; ++t) {
        Fe acc = field.zero();
        for (std::int64_t i : index_set)
            acc = field.add(acc, field.mul(coef[static_cast<std::size_t>(i)],
                                           field.from_log(i * t % N)));
        if (!(acc == seq[static_cast<std::size_t>(t)]))
            throw VerificationError("expansion_lc: re-synthesis mismatch at t = " + std::to_string(t));
    }

    // Minimal polynomial prod_{i in I} (x - theta^i), re-expressed in the
    // recurrence convention (reversed; the constant term of the reversal is
    // the monic leading 1).
    std::vector<Fe> prod{field.one()};
    for (std::int64_t i : index_set) {
        std::vector<Fe> next(prod.size() + 1, Fe{});
        Fe root = field.from_log(i);
        for (std::size_t d = 0; d < prod.size(); ++d) {
            next[d + 1] = field.add(next[d + 1], prod[d]);
            next[d] = field.sub(next[d], field.mul(prod[d], root));
        }
        prod = std::move(next);
    }
    std::vector<Fe> rec(prod.rbegin(), prod.rend());
    for (const Fe& c : rec)
        if (!field.in_base(c))
            throw std::logic_error("expansion_lc: minimal polynomial escapes the base field");

    LcReport report;
    report.lc = static_cast<std::int64_t>(index_set.size());
    report.minimal_poly = std::move(rec);
    report.index_set_size = static_cast<std::int64_t>(index_set.size());
    return report;
}

std::vector<Fe> weights_by_residue(const CosetSystem& cosets, const std::vector<Fe>& d) {
    const std::int64_t l = cosets.l();
    if (static_cast<std::int64_t>(d.size()) != l)
        throw PreconditionError("weights_by_residue: expected l weights");
    const std::int64_t N = cosets.field().order();
    std::vector<Fe> values(static_cast<std::size_t>(l));
    for (std::int64_t j = 0; j < l; ++j) {
        int c = cosets.c_index((cosets.r() * j) % N);
        values[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(c)];
    }
    return values;
}

std::vector<Fe> cyclotomic_mapping_poly(const FieldTable& field, std::int64_t e,
                                        const std::vector<Fe>& values) {
    const std::int64_t N = field.order();
    if (e < 1 || N % e != 0)
        throw PreconditionError("cyclotomic_mapping_poly: e does not divide the group order");
    if (e % field.p() == 0)
        throw PreconditionError("cyclotomic_mapping_poly: e is divisible by the characteristic");
    if (static_cast<std::int64_t>(values.size()) != e)
        throw PreconditionError("cyclotomic_mapping_poly: expected e residue values");

    // e^{-1} in the prime field.
    std::int64_t e_mod = e % field.p();
    std::int64_t inv = 1, base = e_mod, exp = field.p() - 2;
    while (exp > 0) {
        if (exp & 1) inv = inv * base % field.p();
        base = base * base % field.p();
        exp >>= 1;
    }
    const Fe einv = field.from_encoding(inv);

    const std::int64_t step = N / e;
    std::vector<Fe> a(static_cast<std::size_t>(e), Fe{});
    for (std::int64_t i = 0; i < e; ++i) {
        Fe acc = field.zero();
        for (std::int64_t j = 0; j < e; ++j) {
            if (values[static_cast<std::size_t>(j)].is_zero()) continue;
            acc = field.add(acc, field.mul(values[static_cast<std::size_t>(j)],
                                           field.from_log(-(i * j % N) * step % N)));
        }
        a[static_cast<std::size_t>(i)] = field.mul(einv, acc);
    }

    // Replay the defining identity on every residue class.
    for (std::int64_t j = 0; j < e; ++j) {
        Fe acc = field.zero();
        for (std::int64_t i = 0; i < e; ++i)
            acc = field.add(acc, field.mul(a[static_cast<std::size_t>(i)],
                                           field.from_log(i * j % N * step % N)));
        if (!(acc == values[static_cast<std::size_t>(j)]))
            throw VerificationError("cyclotomic_mapping_poly: replay mismatch on residue " +
                                    std::to_string(j));
    }
    return a;
}

LcBoundsReport lc_bounds_check(const FieldTable& field, const std::vector<ZdbFunction>& set,
                               std::int64_t l) {
    if (set.empty()) throw PreconditionError("lc_bounds_check: empty set");
    const std::int64_t N = field.order();
    const std::int64_t m = field.m();
    LcBoundsReport report;
    report.all_in_range = true;
    for (const auto& f : set) {
        if (f.codomain.kind() != Codomain::Kind::BaseField)
            throw PreconditionError("lc_bounds_check: sequences must be scalar-valued (v = 1)");
        if (N % f.n != 0)
            throw PreconditionError("lc_bounds_check: sequence length does not divide q^m - 1");
        std::vector<Fe> seq;
        seq.reserve(static_cast<std::size_t>(f.n));
        for (std::int32_t idx : f.values) seq.push_back(f.codomain.element(idx));
        LcReport bm = berlekamp_massey(field, seq);

        std::vector<Fe> tiled;
        tiled.reserve(static_cast<std::size_t>(N));
        for (std::int64_t rep = 0; rep < N / f.n; ++rep)
            tiled.insert(tiled.end(), seq.begin(), seq.end());
        LcReport ex = expansion_lc(field, tiled);

        if (bm.lc != ex.lc)
            throw VerificationError("lc_bounds_check: LC engines disagree (" +
                                    std::to_string(bm.lc) + " vs " + std::to_string(ex.lc) + ")");
        report.lcs.push_back(bm.lc);
        if (bm.lc < m || bm.lc > l * m) report.all_in_range = false;
        if (bm.lc == m) report.lower_attained = true;
        if (bm.lc == l * m) report.upper_attained = true;
    }
    return report;
}

} // namespace zdbkit
