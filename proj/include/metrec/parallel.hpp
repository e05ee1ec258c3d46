#pragma once

#include <cstddef>
#include <functional>

namespace metrec {

/// Worker cap for the row-parallel kernels. Reads METRIC_RECOGNIZER_THREADS
/// (0 or 1 = sequential); unset means std::thread::hardware_concurrency().
std::size_t worker_count();

/// Calls body(lo, hi) on contiguous chunks covering [begin, end). Chunks are
/// disjoint, so bodies writing only to their own rows need no locking.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace metrec
