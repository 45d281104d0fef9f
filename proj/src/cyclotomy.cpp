#include "zdbkit/cyclotomy.hpp"

#include <numeric>
#include <random>

#include "zdbkit/errors.hpp"

namespace zdbkit {

int CosetSystem::d_index(Fe x) const {
    if (x.is_zero()) throw PreconditionError("d_index: zero has no cyclotomic class");
    return d_idx_[static_cast<std::size_t>(x.lg)];
}

int CosetSystem::c_index(Fe x) const {
    if (x.is_zero()) throw PreconditionError("c_index: zero has no cyclotomic class");
    return c_idx_[static_cast<std::size_t>(x.lg)];
}

CosetSystem build_cosets(const FieldTable& field, std::int64_t e, std::int64_t r, bool force) {
    if (e < 1 || r < 1) throw PreconditionError("build_cosets: e and r must be positive");
    if (e % r != 0)
        throw PreconditionError("build_cosets: r = " + std::to_string(r) +
                                " does not divide e = " + std::to_string(e));
    if ((field.q() - 1) % e != 0)
        throw PreconditionError("build_cosets: e = " + std::to_string(e) +
                                " does not divide q - 1 = " + std::to_string(field.q() - 1));
    const std::int64_t g = std::gcd(e, static_cast<std::int64_t>(field.m()));
    const bool gcd_ok = (g == 1);
    if (!gcd_ok && !force)
        throw PreconditionError("build_cosets: gcd(e, m) = " + std::to_string(g) + " != 1");

    CosetSystem cs;
    cs.field_ = &field;
    cs.e_ = e;
    cs.r_ = r;
    cs.l_ = e / r;
    cs.alpha_log_ = field.alpha_log();
    const std::int64_t N = field.order();
    cs.d0_size_ = N / r;
    cs.c0_size_ = N / e;
    cs.d_idx_.assign(static_cast<std::size_t>(N), -1);
    cs.c_idx_.assign(static_cast<std::size_t>(N), -1);

    if (gcd_ok) {
        // Walk each coset alpha^(d + c*r) * <theta^e> explicitly.
        const std::int64_t A = cs.alpha_log_;
        for (std::int64_t d = 0; d < r; ++d) {
            for (std::int64_t c = 0; c < cs.l_; ++c) {
                std::int64_t lg = ((d + c * r) % N * (A % N)) % N;
                for (std::int64_t j = 0; j < cs.c0_size_; ++j) {
                    auto idx = static_cast<std::size_t>(lg);
                    if (cs.d_idx_[idx] != -1)
                        throw std::logic_error("build_cosets: coset enumeration collision");
                    cs.d_idx_[idx] = static_cast<std::int32_t>(d);
                    cs.c_idx_[idx] = static_cast<std::int32_t>(c);
                    lg = (lg + e) % N;
                }
            }
        }
    } else {
        // Degenerate fallback: plain residue classes of the discrete log.
        cs.residue_labeled_ = true;
        for (std::int64_t lg = 0; lg < N; ++lg) {
            cs.d_idx_[static_cast<std::size_t>(lg)] = static_cast<std::int32_t>(lg % r);
            cs.c_idx_[static_cast<std::size_t>(lg)] = static_cast<std::int32_t>((lg % e) / r);
        }
    }
    return cs;
}

HomogeneousRootCount homogeneous_root_count(const FieldTable& field, const CosetSystem& cosets,
                                            const std::function<Fe(Fe)>& h, std::int64_t degree,
                                            std::uint64_t seed) {
    const std::int64_t N = field.order();
    const std::int64_t q = field.q();
    const std::int64_t A = field.alpha_log();

    // h(a*x) = a^degree * h(x) for a in GF(q)^*, x in D_0. Full sweep when
    // cheap, otherwise a seeded sample.
    const std::int64_t d0 = cosets.d0_size();
    auto check_pair = [&](std::int64_t j, std::int64_t t) {
        Fe a = field.from_log(j * A);
        Fe x = field.from_log(t * cosets.r());
        Fe lhs = h(field.mul(a, x));
        Fe rhs = field.mul(field.pow(a, degree), h(x));
        if (!(lhs == rhs))
            throw PreconditionError("homogeneous_root_count: homogeneity fails at a = " +
                                    field.to_string(a) + ", x = " + field.to_string(x));
    };
    if (q * d0 <= 1'000'000) {
        for (std::int64_t j = 0; j < q - 1; ++j)
            for (std::int64_t t = 0; t < d0; ++t) check_pair(j, t);
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < 1000; ++i)
            check_pair(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q - 1)),
                       static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d0)));
    }

    HomogeneousRootCount out;
    out.per_coset.assign(static_cast<std::size_t>(cosets.l()), 0);
    for (std::int64_t lg = 0; lg < N; ++lg) {
        if (cosets.d_index(lg) != 0) continue;
        if (h(field.from_log(lg)).is_zero()) {
            ++out.d0_count;
            ++out.per_coset[static_cast<std::size_t>(cosets.c_index(lg))];
        }
    }
    for (std::int64_t c : out.per_coset) {
        if (c * cosets.l() != out.d0_count)
            throw VerificationError("homogeneous_root_count: roots are not equidistributed (" +
                                    std::to_string(c) + " * l != " + std::to_string(out.d0_count) + ")");
    }
    return out;
}

std::vector<std::int64_t> trace_root_counts(const FieldTable& field, const CosetSystem& cosets,
                                            Fe a, std::int64_t u) {
    if (a.is_zero()) throw PreconditionError("trace_root_counts: a must be nonzero");
    if (u < 1 || (field.q() - 1) % u != 0)
        throw PreconditionError("trace_root_counts: u does not divide q - 1");
    if (std::gcd(u, static_cast<std::int64_t>(field.m())) != 1)
        throw PreconditionError("trace_root_counts: gcd(u, m) != 1");

    const std::int64_t N = field.order();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(cosets.l()), 0);
    for (std::int64_t lg = 0; lg < N; ++lg) {
        if (cosets.d_index(lg) != 0) continue;
        Fe x = field.from_log(lg);
        if (field.trace(field.mul(a, field.pow(x, u))).is_zero())
            ++counts[static_cast<std::size_t>(cosets.c_index(lg))];
    }
    std::int64_t qm1 = 1;
    for (int i = 0; i + 1 < field.m(); ++i) qm1 *= field.q();
    const std::int64_t expect = (qm1 - 1) / (cosets.l() * cosets.r());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] != expect)
            throw VerificationError("trace_root_counts: N_{a," + std::to_string(i) + "} = " +
                                    std::to_string(counts[i]) + " != " + std::to_string(expect) +
                                    " for a = " + field.to_string(a));
    }
    return counts;
}

void verify_trace_root_counts(const FieldTable& field, const CosetSystem& cosets, std::int64_t u,
                              std::uint64_t seed, std::int64_t exhaustive_cap, int samples) {
    const std::int64_t N = field.order();
    if (field.size() <= exhaustive_cap) {
        for (std::int64_t lg = 0; lg < N; ++lg)
            trace_root_counts(field, cosets, field.from_log(lg), u);
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < samples; ++i) {
            auto lg = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(N));
            trace_root_counts(field, cosets, field.from_log(lg), u);
        }
    }
}

} // namespace zdbkit
