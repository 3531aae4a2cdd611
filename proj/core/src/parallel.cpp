#include "sphframe/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace sphframe {

namespace {
std::atomic<int> g_max_threads{
    std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 8)};
}

int max_threads() { return g_max_threads.load(); }

void set_max_threads(int n) { g_max_threads.store(std::max(1, n)); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    const int nt = std::min<std::size_t>(static_cast<std::size_t>(max_threads()), n);
    if (nt <= 1 || n < 2) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nt));
    const std::size_t chunk = (n + static_cast<std::size_t>(nt) - 1) / static_cast<std::size_t>(nt);
    for (int t = 0; t < nt; ++t) {
        const std::size_t b = static_cast<std::size_t>(t) * chunk;
        const std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace sphframe
