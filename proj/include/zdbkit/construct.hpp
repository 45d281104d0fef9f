#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zdbkit/cyclotomy.hpp"
#include "zdbkit/zdb.hpp"

namespace zdbkit {

/// Inputs of the coset-weighted trace construction
///   f(t) = trace(d_{c(t)} * theta^(r*u*t)),  t in Z_n,  n = (q^m-1)/r,
/// where c(t) is the C-coset index of theta^(r*t). Optional pieces select the
/// derived forms: g (one representative per D-class) builds a set of r
/// functions, a_vec lifts values to GF(q)^v tuples, interleave_k splices k
/// set members into one function on Z_{k*n}.
struct ConstructionParams {
    const FieldTable* field = nullptr;
    const CosetSystem* cosets = nullptr;
    std::int64_t u = 1;
    std::vector<Fe> d;
    std::optional<std::vector<Fe>> g;
    std::optional<std::vector<Fe>> a_vec;
    std::optional<std::int64_t> interleave_k;
    bool force = false; ///< build even when a sufficient condition fails (negative tests)
};

struct ConditionResult {
    bool ok = false;
    std::int64_t witness_j = -1;
    std::int64_t witness_k = -1;
};

/// Condition (i): no x != 1 in C_0 with x^u = 1; equivalently
/// j*e*u != 0 mod q^m-1 for all 1 <= j < (q^m-1)/e. Returns the violating j.
ConditionResult check_condition_i(const ConstructionParams& p);

/// Condition (ii): d_j / d_{k+j} is not in C_{u*k} for every k in [1, l) and
/// j in [0, l) (indices mod l). When all d_i lie in D_0 the equivalent
/// permutation criterion is cross-checked internally.
ConditionResult check_condition_ii(const ConstructionParams& p);

/// The single-function construction. Preconditions: u | q-1, gcd(u, m) = 1,
/// l weights, all nonzero, and both conditions above unless force is set.
ZdbFunction construct_zdb(const ConstructionParams& p);

struct Sc1Result {
    ZdbFunction f;                      ///< on Z_{q^m-1} via discrete logs
    DifferenceSpectrum additive;        ///< shifts over Z_{q^m-1}
    DifferenceSpectrum multiplicative;  ///< x over GF(q^m), delta = theta^a
    bool difference_balanced = false;   ///< N_b(delta) = q^(m-1) for all b != 0
};

/// Square/nonsquare special case: f(x) = trace(rho(x) * x) with rho = d0 on
/// squares and d1 on nonsquares. Requires q odd, m odd, d0*d1 a square.
Sc1Result construct_sc1(const FieldTable& field, Fe d0, Fe d1);

/// u = 1 special case of construct_zdb.
ZdbFunction construct_sc2(const FieldTable& field, const CosetSystem& cosets,
                          const std::vector<Fe>& d, bool force = false);

/// Set {f_i(t) = trace(g_i * d_{c(t)} * theta^(r*u*t)) : 0 <= i < r} with the
/// default transversal g_i = alpha^i. Requires every d_i in D_0 and, when g
/// is supplied, that it hits each D-class exactly once.
std::vector<ZdbFunction> construct_zdb_set(const ConstructionParams& p);

/// Linear independence of a_vec over GF(q): exhaustive combination scan when
/// q^v <= 10^4, otherwise Gaussian rank over trace-dual coordinates.
bool check_linear_independence(const FieldTable& field, const std::vector<Fe>& a_vec);

/// Vector-valued lift: component j is trace(a_j * d_{c(t)} * theta^(r*u*t)).
ZdbFunction construct_vector_zdb(const ConstructionParams& p);

/// Vector-valued set (g and a_vec combined).
std::vector<ZdbFunction> construct_vector_zdb_set(const ConstructionParams& p);

/// f(t) = set[i](j) for t = j*k + i on Z_{k*n}; requires set.size() == k >= 1,
/// uniform members and gcd(k, n) = 1.
ZdbFunction interleave(const std::vector<ZdbFunction>& set, std::int64_t k);

enum class WeightStrategy {
    AllInD0,        ///< every d_i in D_0, C-indices chosen by the permutation rule
    TransversalMix, ///< r-1 entries in distinct nonzero D-classes, the rest in D_0
};

/// Streams weight vectors that pass condition (ii) in a deterministic order,
/// stopping after `limit` emissions or when the sink returns false. Every
/// emitted vector is re-validated before delivery.
void enumerate_valid_weight_vectors(const FieldTable& field, const CosetSystem& cosets,
                                    std::int64_t u, WeightStrategy strategy, std::uint64_t limit,
                                    const std::function<bool(const std::vector<Fe>&)>& sink);

} // namespace zdbkit
