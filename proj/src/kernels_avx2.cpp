#include "zdbkit/kernels.hpp"

#if defined(ZDBKIT_HAVE_AVX2)

#include <immintrin.h>

namespace zdbkit::kernels {

std::int64_t match_count_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
    std::int64_t count = 0;
    std::size_t i = 0;
    // Accumulate per-lane 0/-1 compare masks; each lane saturates after 2^31
    // rounds, so drain every 2^30 vectors (never reached at desk scale, but
    // draining is cheap).
    const std::size_t step = 8;
    while (i + step <= n) {
        __m256i acc = _mm256_setzero_si256();
        std::size_t block_end = i + ((n - i) / step) * step;
        std::size_t drain = i + (std::size_t(1) << 30) * step;
        if (block_end > drain) block_end = drain;
        for (; i + step <= block_end; i += step) {
            __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
            __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
            acc = _mm256_sub_epi32(acc, _mm256_cmpeq_epi32(va, vb));
        }
        alignas(32) std::int32_t lanes[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        for (int l = 0; l < 8; ++l) count += lanes[l];
    }
    for (; i < n; ++i) count += (a[i] == b[i]);
    return count;
}

} // namespace zdbkit::kernels

#endif
