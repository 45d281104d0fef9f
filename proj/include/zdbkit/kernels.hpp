#pragma once

#include <cstddef>
#include <cstdint>

// Counting kernels for the hot verification loops (coincidence counts over
// symbol tables). A scalar reference implementation always exists; an AVX2
// variant is selected at runtime when the CPU supports it. Both are
// equivalence-tested against each other.

namespace zdbkit::kernels {

/// Reference: |{i < n : a[i] == b[i]}|.
std::int64_t match_count_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n);

#if defined(ZDBKIT_HAVE_AVX2)
std::int64_t match_count_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n);
#endif

/// Dispatched variant (function pointer bound at startup).
extern std::int64_t (*match_count)(const std::int32_t*, const std::int32_t*, std::size_t);

/// Name of the implementation match_count currently points to.
const char* active_impl();

/// |{i < n : x[i] == y[(i + shift) mod n]}| with 0 <= shift < n.
std::int64_t match_count_cyclic(const std::int32_t* x, const std::int32_t* y,
                                std::size_t n, std::size_t shift);

} // namespace zdbkit::kernels
