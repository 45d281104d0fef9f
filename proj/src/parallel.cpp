#include "zdbkit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace zdbkit {

namespace {
std::atomic<int> g_default_threads{0};

int resolve(int threads) {
    if (threads <= 0) threads = g_default_threads.load();
    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = static_cast<int>(hw ? std::min(hw, 8u) : 1u);
    }
    return threads;
}
} // namespace

void set_default_threads(int threads) { g_default_threads.store(threads); }
int default_threads() { return resolve(0); }

void parallel_for(std::int64_t begin, std::int64_t end, int threads,
                  const std::function<void(std::int64_t, std::int64_t)>& chunk) {
    const std::int64_t count = end - begin;
    if (count <= 0) return;
    int workers = resolve(threads);
    // Not worth spawning below a few thousand iterations.
    if (workers <= 1 || count < 4096) {
        chunk(begin, end);
        return;
    }
    workers = static_cast<int>(std::min<std::int64_t>(workers, count));
    const std::int64_t per = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = begin + w * per;
        const std::int64_t hi = std::min(end, lo + per);
        if (lo >= hi) break;
        pool.emplace_back([&chunk, lo, hi] { chunk(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace zdbkit
