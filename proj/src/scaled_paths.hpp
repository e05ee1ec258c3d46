#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "metrec/graph.hpp"

namespace metrec::detail {

// Shortest paths with every weight multiplied by `denominator`.
struct ScaledPaths {
  static constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;
  std::size_t order = 0;
  std::int64_t denominator = 1;
  std::vector<std::int64_t> distance;
};

// Empty when the scaled weights would not fit in 61 bits.
std::optional<ScaledPaths> scaled_shortest_paths(const WeightedGraph& w);

}  // namespace metrec::detail
