#include "zdbkit/kernels.hpp"

namespace zdbkit::kernels {

std::int64_t match_count_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += (a[i] == b[i]);
    return count;
}

} // namespace zdbkit::kernels
