#include "zdbkit/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zdbkit/recipe.hpp"

namespace zdbkit {

namespace {

void validate_core(const ConstructionParams& p) {
    if (p.field == nullptr || p.cosets == nullptr)
        throw PreconditionError("construct: field and cosets are required");
    if (&p.cosets->field() != p.field)
        throw PreconditionError("construct: coset system belongs to a different field");
    if (p.u < 1 || (p.field->q() - 1) % p.u != 0)
        throw PreconditionError("construct: u does not divide q - 1");
    if (std::gcd(p.u, static_cast<std::int64_t>(p.field->m())) != 1)
        throw PreconditionError("construct: gcd(u, m) != 1");
    if (static_cast<std::int64_t>(p.d.size()) != p.cosets->l())
        throw PreconditionError("construct: expected l = " + std::to_string(p.cosets->l()) +
                                " weights, got " + std::to_string(p.d.size()));
    for (const Fe& d : p.d)
        if (d.is_zero()) throw PreconditionError("construct: some d_i = 0");
}

void enforce_conditions(const ConstructionParams& p) {
    if (p.force) return;
    if (auto ci = check_condition_i(p); !ci.ok)
        throw PreconditionError("construct: condition (i) fails at j = " +
                                std::to_string(ci.witness_j));
    if (auto cii = check_condition_ii(p); !cii.ok)
        throw PreconditionError("construct: condition (ii) fails at k = " +
                                std::to_string(cii.witness_k) + ", j = " +
                                std::to_string(cii.witness_j));
}

// f(t) = trace(g * a_j * d_{c(t)} * theta^(r*u*t)) per tuple component j.
ZdbFunction build_function(const ConstructionParams& p, std::int64_t g_log,
                           const std::vector<Fe>& a_vec) {
    const FieldTable& F = *p.field;
    const CosetSystem& cs = *p.cosets;
    const std::int64_t N = F.order();
    const std::int64_t r = cs.r();
    const std::int64_t n = N / r;
    const std::int64_t ru = (r % N) * (p.u % N) % N;
    const int v = static_cast<int>(a_vec.size());

    ZdbFunction f;
    f.n = n;
    f.codomain = v == 1 ? Codomain::base_field(F) : Codomain::tuple(F, v);
    f.values.resize(static_cast<std::size_t>(n));
    const std::int64_t q = F.base_size();
    for (std::int64_t t = 0; t < n; ++t) {
        const int c = cs.c_index((r * t) % N);
        const std::int64_t lg0 =
            ((p.d[static_cast<std::size_t>(c)].lg + ru * t % N) % N + g_log) % N;
        std::int64_t idx = 0, mult = 1;
        for (int j = 0; j < v; ++j) {
            Fe arg = F.mul(a_vec[static_cast<std::size_t>(j)], F.from_log(lg0));
            idx += F.base_index(F.trace(arg)) * mult;
            mult *= q;
        }
        f.values[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(idx);
    }
    std::set<std::int32_t> distinct(f.values.begin(), f.values.end());
    f.onto = static_cast<std::int64_t>(distinct.size()) == f.ell();
    f.provenance = recipe_to_json(recipe_from_params(p));
    return f;
}

std::vector<Fe> default_transversal(const FieldTable& F, std::int64_t r) {
    std::vector<Fe> g;
    g.reserve(static_cast<std::size_t>(r));
    for (std::int64_t i = 0; i < r; ++i) g.push_back(F.from_log(i * F.alpha_log()));
    return g;
}

void validate_set_inputs(const ConstructionParams& p, std::vector<Fe>& g_out) {
    const CosetSystem& cs = *p.cosets;
    for (const Fe& d : p.d)
        if (cs.d_index(d) != 0)
            throw PreconditionError("construct_zdb_set: d_i = " + p.field->to_string(d) +
                                    " is not in D_0");
    g_out = p.g ? *p.g : default_transversal(*p.field, cs.r());
    if (static_cast<std::int64_t>(g_out.size()) != cs.r())
        throw PreconditionError("construct_zdb_set: g must have r entries");
    std::vector<char> hit(static_cast<std::size_t>(cs.r()), 0);
    for (const Fe& gi : g_out) {
        if (gi.is_zero()) throw PreconditionError("construct_zdb_set: g entries must be nonzero");
        int d = cs.d_index(gi);
        if (hit[static_cast<std::size_t>(d)])
            throw PreconditionError("construct_zdb_set: g is not a transversal (class " +
                                    std::to_string(d) + " hit twice)");
        hit[static_cast<std::size_t>(d)] = 1;
    }
}

} // namespace

ConditionResult check_condition_i(const ConstructionParams& p) {
    validate_core(p);
    const std::int64_t N = p.field->order();
    const std::int64_t e = p.cosets->e();
    const std::int64_t eu = (e % N) * (p.u % N) % N;
    for (std::int64_t j = 1; j < N / e; ++j) {
        if (j * eu % N == 0) return {false, j, -1};
    }
    return {true, -1, -1};
}

ConditionResult check_condition_ii(const ConstructionParams& p) {
    validate_core(p);
    const FieldTable& F = *p.field;
    const CosetSystem& cs = *p.cosets;
    const std::int64_t l = cs.l();

    ConditionResult result{true, -1, -1};
    for (std::int64_t k = 1; k < l && result.ok; ++k) {
        for (std::int64_t j = 0; j < l; ++j) {
            Fe ratio = F.mul(p.d[static_cast<std::size_t>(j)],
                             F.inv(p.d[static_cast<std::size_t>((k + j) % l)]));
            if (cs.d_index(ratio) == 0 &&
                cs.c_index(ratio) == static_cast<int>(p.u % l * k % l)) {
                result = {false, j, k};
                break;
            }
        }
    }

    // When every d_i lies in D_0 the condition is equivalent to
    // {c_i + i*u mod l} being a full residue system; cross-check.
    bool all_d0 = true;
    for (const Fe& d : p.d) all_d0 = all_d0 && cs.d_index(d) == 0;
    if (all_d0) {
        std::vector<char> used(static_cast<std::size_t>(l), 0);
        bool distinct = true;
        for (std::int64_t i = 0; i < l; ++i) {
            auto res = static_cast<std::size_t>(
                (cs.c_index(p.d[static_cast<std::size_t>(i)]) + i % l * (p.u % l)) % l);
            if (used[res]) distinct = false;
            used[res] = 1;
        }
        if (distinct != result.ok)
            throw std::logic_error("check_condition_ii: membership scan and permutation "
                                   "criterion disagree");
    }
    return result;
}

ZdbFunction construct_zdb(const ConstructionParams& p) {
    validate_core(p);
    enforce_conditions(p);
    return build_function(p, 0, {p.field->one()});
}

Sc1Result construct_sc1(const FieldTable& field, Fe d0, Fe d1) {
    if (field.q() % 2 == 0) throw PreconditionError("construct_sc1: q must be odd");
    if (field.m() % 2 == 0) throw PreconditionError("construct_sc1: m must be odd");
    if (d0.is_zero() || d1.is_zero()) throw PreconditionError("construct_sc1: weights must be nonzero");
    if ((static_cast<std::int64_t>(d0.lg) + d1.lg) % 2 != 0)
        throw PreconditionError("construct_sc1: d0*d1 is not a square");

    Sc1Result out;
    // e = 2, r = u = 1: C_0 is the squares, C_1 the nonsquares.
    CosetSystem cs = build_cosets(field, 2, 1);
    ConstructionParams p;
    p.field = &field;
    p.cosets = &cs;
    p.u = 1;
    p.d = {d0, d1};
    if (!check_condition_ii(p).ok)
        throw std::logic_error("construct_sc1: square pair fails condition (ii)");
    out.f = build_function(p, 0, {field.one()});
    out.additive = difference_spectrum(out.f);
    out.multiplicative = multiplicative_spectrum(out.f, /*include_zero_point=*/true);

    std::int64_t qm1 = 1;
    for (int i = 0; i + 1 < field.m(); ++i) qm1 *= field.q();
    out.difference_balanced = true;
    for (std::int64_t a = 1; a < out.additive.n && out.difference_balanced; ++a)
        for (std::int64_t b = 0; b < out.additive.ell; ++b)
            if (b != out.additive.zero_index && out.additive.at(a, b) != qm1) {
                out.difference_balanced = false;
                break;
            }
    return out;
}

ZdbFunction construct_sc2(const FieldTable& field, const CosetSystem& cosets,
                          const std::vector<Fe>& d, bool force) {
    ConstructionParams p;
    p.field = &field;
    p.cosets = &cosets;
    p.u = 1;
    p.d = d;
    p.force = force;
    return construct_zdb(p);
}

std::vector<ZdbFunction> construct_zdb_set(const ConstructionParams& p) {
    validate_core(p);
    std::vector<Fe> g;
    validate_set_inputs(p, g);
    enforce_conditions(p);
    std::vector<ZdbFunction> set;
    set.reserve(g.size());
    for (const Fe& gi : g) set.push_back(build_function(p, gi.lg, {p.field->one()}));
    return set;
}

bool check_linear_independence(const FieldTable& field, const std::vector<Fe>& a_vec) {
    const int v = static_cast<int>(a_vec.size());
    if (v == 0) return true;
    for (const Fe& a : a_vec)
        if (a.is_zero()) return false;

    const std::int64_t q = field.base_size();
    std::int64_t combos = 1;
    bool small = true;
    for (int i = 0; i < v && small; ++i) {
        combos *= q;
        if (combos > 10'000) small = false;
    }

    if (small) {
        // Every nontrivial GF(q)-combination must be nonzero.
        std::vector<int> idx(static_cast<std::size_t>(v), 0);
        while (true) {
            int pos = v - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == q - 1) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            Fe sum = field.zero();
            for (int i = 0; i < v; ++i)
                sum = field.add(sum, field.mul(field.base_element(idx[static_cast<std::size_t>(i)]),
                                               a_vec[static_cast<std::size_t>(i)]));
            if (sum.is_zero()) return false;
        }
        return true;
    }

    // Rank over GF(q): coordinates w.r.t. the basis {theta^i} come from the
    // trace form, c = G^{-1} t with G[i][j] = trace(theta^(i+j)) and
    // t_i = trace(theta^i x).
    const int m = field.m();
    if (v > m) return false;
    std::vector<std::vector<Fe>> aug(static_cast<std::size_t>(m),
                                     std::vector<Fe>(static_cast<std::size_t>(2 * m)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                field.trace(field.from_log(i + j));
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + i)] = field.one();
    }
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int row = col; row < m; ++row)
            if (!aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::logic_error("check_linear_independence: trace form degenerate");
        std::swap(aug[static_cast<std::size_t>(col)], aug[static_cast<std::size_t>(pivot)]);
        Fe inv = field.inv(aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]);
        for (int j = 0; j < 2 * m; ++j)
            aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] =
                field.mul(aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)], inv);
        for (int row = 0; row < m; ++row) {
            if (row == col) continue;
            Fe factor = aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            for (int j = 0; j < 2 * m; ++j)
                aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                    field.sub(aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)],
                              field.mul(factor,
                                        aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]));
        }
    }

    std::vector<std::vector<Fe>> rows;
    for (const Fe& a : a_vec) {
        std::vector<Fe> t(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) t[static_cast<std::size_t>(i)] = field.trace(field.mul(field.from_log(i), a));
        std::vector<Fe> coords(static_cast<std::size_t>(m), field.zero());
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                coords[static_cast<std::size_t>(i)] = field.add(
                    coords[static_cast<std::size_t>(i)],
                    field.mul(aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + j)],
                              t[static_cast<std::size_t>(j)]));
        rows.push_back(std::move(coords));
    }

    int rank = 0;
    for (int col = 0; col < m && rank < v; ++col) {
        int pivot = -1;
        for (int row = rank; row < v; ++row)
            if (!rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        Fe inv = field.inv(rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)]);
        for (int j = 0; j < m; ++j)
            rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
                field.mul(rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)], inv);
        for (int row = 0; row < v; ++row) {
            if (row == rank) continue;
            Fe factor = rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (factor.is_zero()) continue;
            for (int j = 0; j < m; ++j)
                rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                    field.sub(rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)],
                              field.mul(factor,
                                        rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]));
        }
        ++rank;
    }
    return rank == v;
}

ZdbFunction construct_vector_zdb(const ConstructionParams& p) {
    validate_core(p);
    if (!p.a_vec || p.a_vec->empty())
        throw PreconditionError("construct_vector_zdb: a-vector is required");
    const int v = static_cast<int>(p.a_vec->size());
    if (v > p.field->m())
        throw PreconditionError("construct_vector_zdb: v = " + std::to_string(v) +
                                " exceeds m = " + std::to_string(p.field->m()));
    if (!check_linear_independence(*p.field, *p.a_vec))
        throw PreconditionError("construct_vector_zdb: a-vector is linearly dependent over GF(q)");
    enforce_conditions(p);
    return build_function(p, 0, *p.a_vec);
}

std::vector<ZdbFunction> construct_vector_zdb_set(const ConstructionParams& p) {
    validate_core(p);
    if (!p.a_vec || p.a_vec->empty())
        throw PreconditionError("construct_vector_zdb_set: a-vector is required");
    if (static_cast<int>(p.a_vec->size()) > p.field->m())
        throw PreconditionError("construct_vector_zdb_set: v exceeds m");
    if (!check_linear_independence(*p.field, *p.a_vec))
        throw PreconditionError("construct_vector_zdb_set: a-vector is linearly dependent over GF(q)");
    std::vector<Fe> g;
    validate_set_inputs(p, g);
    enforce_conditions(p);
    std::vector<ZdbFunction> set;
    set.reserve(g.size());
    for (const Fe& gi : g) {
        std::vector<Fe> scaled;
        scaled.reserve(p.a_vec->size());
        for (const Fe& a : *p.a_vec) scaled.push_back(p.field->mul(a, gi));
        set.push_back(build_function(p, 0, scaled));
    }
    return set;
}

ZdbFunction interleave(const std::vector<ZdbFunction>& set, std::int64_t k) {
    if (k < 1) throw PreconditionError("interleave: k must be positive");
    if (static_cast<std::int64_t>(set.size()) != k)
        throw PreconditionError("interleave: expected exactly k = " + std::to_string(k) +
                                " functions, got " + std::to_string(set.size()));
    const std::int64_t n = set.front().n;
    for (const auto& f : set)
        if (f.n != n || !f.codomain.same_alphabet(set.front().codomain))
            throw PreconditionError("interleave: set members differ in length or alphabet");
    if (std::gcd(k, n) != 1)
        throw PreconditionError("interleave: gcd(k, n) = " + std::to_string(std::gcd(k, n)) +
                                " != 1");

    ZdbFunction out;
    out.n = k * n;
    out.codomain = set.front().codomain;
    out.values.resize(static_cast<std::size_t>(out.n));
    for (std::int64_t t = 0; t < out.n; ++t)
        out.values[static_cast<std::size_t>(t)] =
            set[static_cast<std::size_t>(t % k)].values[static_cast<std::size_t>(t / k)];
    std::set<std::int32_t> distinct(out.values.begin(), out.values.end());
    out.onto = static_cast<std::int64_t>(distinct.size()) == out.ell();
    out.provenance = set.front().provenance;
    return out;
}

void enumerate_valid_weight_vectors(const FieldTable& field, const CosetSystem& cosets,
                                    std::int64_t u, WeightStrategy strategy, std::uint64_t limit,
                                    const std::function<bool(const std::vector<Fe>&)>& sink) {
    const std::int64_t l = cosets.l();
    const std::int64_t r = cosets.r();
    const std::int64_t e = cosets.e();
    const std::int64_t N = field.order();
    const std::int64_t A = field.alpha_log();
    const std::int64_t c0 = cosets.c0_size();
    const std::int64_t d0 = cosets.d0_size();

    std::uint64_t emitted = 0;
    bool stop = false;
    auto deliver = [&](const std::vector<Fe>& d) {
        ConstructionParams p;
        p.field = &field;
        p.cosets = &cosets;
        p.u = u;
        p.d = d;
        if (!check_condition_ii(p).ok)
            throw std::logic_error("enumerate_valid_weight_vectors: emitted vector fails (ii)");
        ++emitted;
        if (!sink(d) || emitted >= limit) stop = true;
    };

    auto run_all_in_d0 = [&] {
        std::vector<std::int64_t> perm(static_cast<std::size_t>(l));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            // target residues: s_i = perm_i + i*u, weight class c_i = -s_i (mod l)
            std::vector<std::int64_t> cls(static_cast<std::size_t>(l));
            for (std::int64_t i = 0; i < l; ++i) {
                std::int64_t s = (perm[static_cast<std::size_t>(i)] + i % l * (u % l)) % l;
                cls[static_cast<std::size_t>(i)] = (l - s) % l;
            }
            std::vector<std::int64_t> member(static_cast<std::size_t>(l), 0);
            while (!stop) {
                std::vector<Fe> d(static_cast<std::size_t>(l));
                for (std::int64_t i = 0; i < l; ++i) {
                    std::int64_t lg = (cls[static_cast<std::size_t>(i)] * r % N * (A % N) +
                                       member[static_cast<std::size_t>(i)] * e) % N;
                    d[static_cast<std::size_t>(i)] = field.from_log(lg);
                }
                deliver(d);
                std::int64_t pos = l - 1;
                while (pos >= 0 && member[static_cast<std::size_t>(pos)] == c0 - 1) {
                    member[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++member[static_cast<std::size_t>(pos)];
            }
        } while (!stop && std::next_permutation(perm.begin(), perm.end()));
    };

    if (strategy == WeightStrategy::AllInD0 || r == 1) {
        run_all_in_d0();
        return;
    }

    // Mixed placement: positions in S get the distinct classes D_1..D_{r-1}
    // (ascending), the rest stay in D_0 with pairwise distinct residues
    // c_i + i*u mod l.
    if (r - 1 > l)
        throw PreconditionError("enumerate_valid_weight_vectors: r - 1 exceeds l");
    std::vector<std::int64_t> comb(static_cast<std::size_t>(r - 1));
    std::iota(comb.begin(), comb.end(), 0);
    auto next_combination = [&]() -> bool {
        std::int64_t i = r - 2;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == l - (r - 1) + i) --i;
        if (i < 0) return false;
        ++comb[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < r - 1; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    };

    do {
        std::vector<char> in_s(static_cast<std::size_t>(l), 0);
        for (std::int64_t pos : comb) in_s[static_cast<std::size_t>(pos)] = 1;
        std::vector<std::int64_t> rest;
        for (std::int64_t i = 0; i < l; ++i)
            if (!in_s[static_cast<std::size_t>(i)]) rest.push_back(i);

        // residue assignment for the D_0 positions, then member odometers
        std::vector<std::int64_t> cvals(rest.size(), 0);
        std::vector<char> used(static_cast<std::size_t>(l), 0);
        std::function<void(std::size_t)> assign = [&](std::size_t depth) {
            if (stop) return;
            if (depth == rest.size()) {
                // odometer over members: S positions range over |D_0|, the
                // rest over |C_0|
                std::vector<std::int64_t> member(static_cast<std::size_t>(l), 0);
                std::vector<std::int64_t> span(static_cast<std::size_t>(l), c0);
                for (std::int64_t pos : comb) span[static_cast<std::size_t>(pos)] = d0;
                while (!stop) {
                    std::vector<Fe> d(static_cast<std::size_t>(l));
                    for (std::int64_t cidx = 0; cidx < r - 1; ++cidx) {
                        std::int64_t pos = comb[static_cast<std::size_t>(cidx)];
                        std::int64_t lg = ((cidx + 1) % N * (A % N) +
                                           member[static_cast<std::size_t>(pos)] * r) % N;
                        d[static_cast<std::size_t>(pos)] = field.from_log(lg);
                    }
                    for (std::size_t ri = 0; ri < rest.size(); ++ri) {
                        std::int64_t pos = rest[ri];
                        std::int64_t lg = (cvals[ri] * r % N * (A % N) +
                                           member[static_cast<std::size_t>(pos)] * e) % N;
                        d[static_cast<std::size_t>(pos)] = field.from_log(lg);
                    }
                    deliver(d);
                    std::int64_t pos = l - 1;
                    while (pos >= 0 &&
                           member[static_cast<std::size_t>(pos)] == span[static_cast<std::size_t>(pos)] - 1) {
                        member[static_cast<std::size_t>(pos)] = 0;
                        --pos;
                    }
                    if (pos < 0) break;
                    ++member[static_cast<std::size_t>(pos)];
                }
                return;
            }
            const std::int64_t i = rest[depth];
            for (std::int64_t c = 0; c < l && !stop; ++c) {
                auto res = static_cast<std::size_t>((c + i % l * (u % l)) % l);
                if (used[res]) continue;
                used[res] = 1;
                cvals[depth] = c;
                assign(depth + 1);
                used[res] = 0;
            }
        };
        assign(0);
    } while (!stop && next_combination());
}

} // namespace zdbkit
