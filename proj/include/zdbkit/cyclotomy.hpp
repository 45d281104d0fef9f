#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "zdbkit/field.hpp"

namespace zdbkit {

/// Index-e cyclotomic structure of GF(q^m)^*: the partition into classes
/// D_i = alpha^i * <theta^r> for 0 <= i < r, each refined into cosets
/// C_j = alpha^(jr) * <theta^e> for 0 <= j < l, where e = l*r divides q-1,
/// gcd(e, m) = 1 and alpha = theta^((q^m-1)/(q-1)).
///
/// Every nonzero element gets a (d_index, c_index) pair, assigned by explicit
/// coset enumeration (the labels are alpha-power cosets, not plain residue
/// classes of the discrete log). d_index == 0 selects D_0 = <theta^r>, and
/// there c_index agrees with the C_j labelling of D_0.
class CosetSystem {
public:
    std::int64_t e() const { return e_; }
    std::int64_t l() const { return l_; }
    std::int64_t r() const { return r_; }
    std::int64_t alpha_log() const { return alpha_log_; }
    std::int64_t d0_size() const { return d0_size_; }
    std::int64_t c0_size() const { return c0_size_; }
    const FieldTable& field() const { return *field_; }
    /// true when built with force over a gcd(e,m) violation; labels then fall
    /// back to residue classes of the discrete log (alpha-cosets collide).
    bool residue_labeled() const { return residue_labeled_; }

    int d_index(std::int64_t lg) const { return d_idx_[static_cast<std::size_t>(lg)]; }
    int c_index(std::int64_t lg) const { return c_idx_[static_cast<std::size_t>(lg)]; }
    int d_index(Fe x) const;
    int c_index(Fe x) const;
    bool in_d0(Fe x) const { return d_index(x) == 0; }

private:
    CosetSystem() = default;
    friend CosetSystem build_cosets(const FieldTable&, std::int64_t, std::int64_t, bool);

    const FieldTable* field_ = nullptr;
    std::int64_t e_ = 1, l_ = 1, r_ = 1, alpha_log_ = 0, d0_size_ = 0, c0_size_ = 0;
    bool residue_labeled_ = false;
    std::vector<std::int32_t> d_idx_, c_idx_; // by discrete log
};

/// Preconditions (each reported distinctly): r | e, e | q-1, gcd(e, m) = 1.
/// force = true tolerates a gcd violation for negative tests; the resulting
/// labels are residue classes and the partition invariants of the alpha-coset
/// form no longer hold.
CosetSystem build_cosets(const FieldTable& field, std::int64_t e, std::int64_t r,
                         bool force = false);

struct HomogeneousRootCount {
    std::vector<std::int64_t> per_coset; ///< |{x in C_i : h(x) = 0}|
    std::int64_t d0_count = 0;           ///< |{x in D_0 : h(x) = 0}|
};

/// Verifies h(a*x) = a^degree * h(x) (full sweep when (q-1)*|D_0| <= 1e6, else
/// 1000 seeded samples), then counts roots of h per coset and checks the
/// counts are all d0_count / l. Throws PreconditionError on a homogeneity
/// violation, VerificationError if the counts are unbalanced.
HomogeneousRootCount homogeneous_root_count(const FieldTable& field, const CosetSystem& cosets,
                                            const std::function<Fe(Fe)>& h, std::int64_t degree,
                                            std::uint64_t seed = 0);

/// N_{a,i} = |{x in C_i : trace(a * x^u) = 0}| for all i; requires u | q-1 and
/// gcd(u, m) = 1, and checks every entry equals (q^(m-1) - 1)/(l*r).
std::vector<std::int64_t> trace_root_counts(const FieldTable& field, const CosetSystem& cosets,
                                            Fe a, std::int64_t u);

/// Sweeps trace_root_counts over a: exhaustively when the field has at most
/// `exhaustive_cap` elements, otherwise over `samples` seeded random a != 0.
void verify_trace_root_counts(const FieldTable& field, const CosetSystem& cosets, std::int64_t u,
                              std::uint64_t seed = 0, std::int64_t exhaustive_cap = 729,
                              int samples = 50);

} // namespace zdbkit
