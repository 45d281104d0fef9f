#pragma once

#include <cstdint>
#include <vector>

#include "zdbkit/rational.hpp"
#include "zdbkit/zdb.hpp"

namespace zdbkit {

/// Code over an abelian alphabet where every codeword has the same Hamming
/// weight (number of non-zero-symbol coordinates).
struct ConstantWeightCode {
    std::int64_t n = 0;    ///< length
    std::int64_t N = 0;    ///< size
    std::int64_t ell = 0;  ///< alphabet size
    std::int64_t w = 0;    ///< common weight
    std::int64_t d = 0;    ///< minimum distance (exact, full pairwise scan)
    int zero_index = 0;
    std::vector<std::vector<std::int32_t>> codewords;
};

/// All cyclic shifts of every member of a uniform ZDB set (coordinate
/// enumeration t_k = k). Verifies weight constancy and codeword distinctness
/// (a duplicate signals a set violating the cross property) and fills d by a
/// full pairwise scan.
ConstantWeightCode build_cwc(const std::vector<ZdbFunction>& set, int threads = 0,
                             std::int64_t pair_cap = 10'000'000);

/// Exact minimum over all unordered pairs. Throws PreconditionError when the
/// pair count exceeds pair_cap, unless allow_sampling is set (then a seeded
/// sample of pair_cap pairs yields an upper estimate).
std::int64_t min_distance(const std::vector<std::vector<std::int32_t>>& codewords,
                          std::int64_t pair_cap = 10'000'000, int threads = 0,
                          bool allow_sampling = false, std::uint64_t seed = 0);

struct FvsResult {
    bool applicable = false; ///< positivity guard n*d - 2*n*w + ell*w^2/(ell-1) > 0
    Rational bound;          ///< n*d / (n*d - 2*n*w + ell*w^2/(ell-1)), exact
    bool optimal = false;    ///< code_size >= floor(bound)
};

/// Size bound for constant-weight codes, in exact rational arithmetic.
FvsResult fvs_bound(std::int64_t n, std::int64_t d, std::int64_t w, std::int64_t ell,
                    std::int64_t code_size);

} // namespace zdbkit
