#include "zdbkit/kernels.hpp"

namespace zdbkit::kernels {

namespace {

std::int64_t (*select_match_count())(const std::int32_t*, const std::int32_t*, std::size_t) {
#if defined(ZDBKIT_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return match_count_avx2;
#endif
    return match_count_scalar;
}

} // namespace

std::int64_t (*match_count)(const std::int32_t*, const std::int32_t*, std::size_t) =
    select_match_count();

const char* active_impl() {
#if defined(ZDBKIT_HAVE_AVX2)
    if (match_count == match_count_avx2) return "avx2";
#endif
    return "scalar";
}

std::int64_t match_count_cyclic(const std::int32_t* x, const std::int32_t* y,
                                std::size_t n, std::size_t shift) {
    if (n == 0) return 0;
    // x[i] vs y[i+shift]: contiguous up to the wrap point, then the tail.
    return match_count(x, y + shift, n - shift) + match_count(x + (n - shift), y, shift);
}

} // namespace zdbkit::kernels
