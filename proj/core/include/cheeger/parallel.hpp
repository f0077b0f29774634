#pragma once

#include <cstddef>
#include <functional>

namespace cheeger {

// Worker count: CHEEGER_FORGE_THREADS if set (>= 1), else hardware concurrency.
int thread_count();

// Runs fn(begin, end) over static contiguous chunks of [0, n). Each index is
// visited exactly once, so writes to per-index slots are schedule independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                  std::size_t min_chunk = 256);

}  // namespace cheeger
