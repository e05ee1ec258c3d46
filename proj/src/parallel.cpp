#include "metrec/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

namespace metrec {

std::size_t worker_count() {
  if (const char* env = std::getenv("METRIC_RECOGNIZER_THREADS")) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), n);
    if (ec == std::errc()) return std::max<std::size_t>(n, 1);
  }
  return std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (begin >= end) return;
  const std::size_t total = end - begin;
  // Small ranges are not worth a thread spawn.
  const std::size_t workers = std::min(worker_count(), total / 16 + 1);
  if (workers <= 1) {
    body(begin, end);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t lo = begin; lo < end; lo += chunk)
    pool.emplace_back([&body, lo, hi = std::min(end, lo + chunk)] { body(lo, hi); });
}

}  // namespace metrec
