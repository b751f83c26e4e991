#pragma once

#include <cstddef>
#include <functional>

namespace pluricalc {

// Worker count: PLURICALC_THREADS when set to a positive integer, otherwise
// std::thread::hardware_concurrency() (at least 1).
std::size_t default_thread_count();

// Runs body(i) for every i in [0, count) on up to `threads` workers. Indices
// are handed out dynamically; callers write into per-index slots so the merged
// result does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, std::size_t threads = 0);

}  // namespace pluricalc
