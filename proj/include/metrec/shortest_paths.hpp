#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "metrec/graph.hpp"
#include "metrec/matrix.hpp"

namespace metrec {

/// Raw all-pairs result; `reachable[i*m+j]` is false for disconnected pairs,
/// in which case the distance entry is meaningless.
struct ShortestPaths {
  std::size_t order = 0;
  std::vector<Rational> distance;
  std::vector<std::uint8_t> reachable;

  const Rational& at(std::size_t i, std::size_t j) const { return distance[i * order + j]; }
  bool connected(std::size_t i, std::size_t j) const { return reachable[i * order + j] != 0; }
};

/// Floyd-Warshall in exact arithmetic (int64 after common-denominator scaling
/// when the weights allow it).
ShortestPaths all_pairs_shortest_paths(const WeightedGraph& w);

/// Distance matrix of a connected weighted graph. Throws DisconnectedError.
DistanceMatrix apsp(const WeightedGraph& w);

/// Edges whose removal strictly increases some pairwise distance.
std::vector<Edge> useful_edges_by_deletion(const WeightedGraph& w);
/// Edges whose endpoints' distance entry is indecomposable.
std::vector<Edge> useful_edges_by_indecomposability(const WeightedGraph& w);
/// Computes both; throws std::logic_error if they disagree.
std::vector<Edge> useful_edges(const WeightedGraph& w);

}  // namespace metrec
