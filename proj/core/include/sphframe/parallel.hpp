#pragma once

#include <cstddef>
#include <functional>

namespace sphframe {

/// Process-wide cap on worker threads (>= 1). Defaults to the hardware
/// concurrency, capped at 8.
int max_threads();
void set_max_threads(int n);

/// Run fn(begin, end) over a static block partition of [0, n).
/// Blocks are disjoint, so results are identical for any thread count
/// as long as fn writes only to its own index range.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace sphframe
