#pragma once

#include <cstdint>
#include <functional>

namespace zdbkit {

/// Process-wide default worker count (0 = hardware concurrency, capped at 8).
void set_default_threads(int threads);
int default_threads();

/// Runs chunk(lo, hi) over [begin, end) split across workers. threads == 0
/// uses the process default; single-threaded when the range is small.
/// Chunks are disjoint, so workers never touch shared mutable state.
void parallel_for(std::int64_t begin, std::int64_t end, int threads,
                  const std::function<void(std::int64_t, std::int64_t)>& chunk);

} // namespace zdbkit
