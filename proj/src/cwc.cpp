#include "zdbkit/cwc.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>

#include "zdbkit/errors.hpp"
#include "zdbkit/kernels.hpp"
#include "zdbkit/parallel.hpp"

namespace zdbkit {

ConstantWeightCode build_cwc(const std::vector<ZdbFunction>& set, int threads,
                             std::int64_t pair_cap) {
    if (set.empty()) throw PreconditionError("build_cwc: empty set");
    const std::int64_t n = set.front().n;
    for (const auto& f : set)
        if (f.n != n || !f.codomain.same_alphabet(set.front().codomain))
            throw PreconditionError("build_cwc: set members differ in length or alphabet");

    ConstantWeightCode code;
    code.n = n;
    code.ell = set.front().ell();
    code.zero_index = set.front().codomain.zero_index();
    code.codewords.reserve(set.size() * static_cast<std::size_t>(n));
    for (const auto& f : set) {
        for (std::int64_t shift = 0; shift < n; ++shift) {
            std::vector<std::int32_t> row(static_cast<std::size_t>(n));
            for (std::int64_t t = 0; t < n; ++t)
                row[static_cast<std::size_t>(t)] =
                    f.values[static_cast<std::size_t>((t + shift) % n)];
            code.codewords.push_back(std::move(row));
        }
    }
    code.N = static_cast<std::int64_t>(code.codewords.size());

    std::set<std::vector<std::int32_t>> seen;
    for (const auto& row : code.codewords)
        if (!seen.insert(row).second)
            throw VerificationError("build_cwc: duplicate codewords (cross property violated)");

    std::int64_t w = -1;
    for (const auto& row : code.codewords) {
        std::int64_t weight = 0;
        for (std::int32_t sym : row) weight += (sym != code.zero_index);
        if (w < 0) w = weight;
        if (weight != w)
            throw VerificationError("build_cwc: codeword weight varies (" + std::to_string(weight) +
                                    " vs " + std::to_string(w) + ")");
    }
    code.w = w;
    code.d = min_distance(code.codewords, pair_cap, threads);
    return code;
}

std::int64_t min_distance(const std::vector<std::vector<std::int32_t>>& codewords,
                          std::int64_t pair_cap, int threads, bool allow_sampling,
                          std::uint64_t seed) {
    const auto N = static_cast<std::int64_t>(codewords.size());
    if (N < 2) throw PreconditionError("min_distance: need at least two codewords");
    const auto n = static_cast<std::int64_t>(codewords.front().size());
    const std::int64_t pairs = N * (N - 1) / 2;

    if (pairs > pair_cap) {
        if (!allow_sampling)
            throw PreconditionError("min_distance: pair count " + std::to_string(pairs) +
                                    " exceeds cap " + std::to_string(pair_cap));
        std::mt19937_64 rng(seed);
        std::int64_t max_co = 0;
        for (std::int64_t it = 0; it < pair_cap; ++it) {
            auto i = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(N));
            auto j = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(N));
            if (i == j) continue;
            max_co = std::max(max_co, kernels::match_count(
                                          codewords[static_cast<std::size_t>(i)].data(),
                                          codewords[static_cast<std::size_t>(j)].data(),
                                          static_cast<std::size_t>(n)));
        }
        return n - max_co;
    }

    std::atomic<std::int64_t> max_co{0};
    parallel_for(0, N - 1, threads, [&](std::int64_t lo, std::int64_t hi) {
        std::int64_t local = 0;
        for (std::int64_t i = lo; i < hi; ++i) {
            const std::int32_t* a = codewords[static_cast<std::size_t>(i)].data();
            for (std::int64_t j = i + 1; j < N; ++j)
                local = std::max(local, kernels::match_count(
                                            a, codewords[static_cast<std::size_t>(j)].data(),
                                            static_cast<std::size_t>(n)));
        }
        std::int64_t prev = max_co.load();
        while (local > prev && !max_co.compare_exchange_weak(prev, local)) {
        }
    });
    return n - max_co.load();
}

FvsResult fvs_bound(std::int64_t n, std::int64_t d, std::int64_t w, std::int64_t ell,
                    std::int64_t code_size) {
    if (n < 1 || d < 0 || w < 0 || ell < 2)
        throw PreconditionError("fvs_bound: need n >= 1, d, w >= 0, ell >= 2");
    FvsResult out;
    // Clear the (ell-1) denominator: bound = n d (ell-1) / (n d (ell-1) - 2 n w (ell-1) + ell w^2).
    const __int128 num = static_cast<__int128>(n) * d * (ell - 1);
    const __int128 den = num - 2 * static_cast<__int128>(n) * w * (ell - 1) +
                         static_cast<__int128>(ell) * w * w;
    out.applicable = den > 0;
    if (!out.applicable) return out;
    out.bound = Rational::from128(num, den);
    out.optimal = code_size >= out.bound.floor();
    return out;
}

} // namespace zdbkit
