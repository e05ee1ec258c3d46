#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metrec/rational.hpp"

namespace metrec {

/// Unordered vertex pair, stored with first < second. Vertices are 0-based.
using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on {0, ..., order-1}.
class Graph {
 public:
  explicit Graph(std::size_t order = 0);
  Graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Throws std::invalid_argument on loops, duplicates or out-of-range ends.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return matrix_[u * order() + v] != 0; }
  /// Sorted ascending.
  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  /// Lexicographic, each edge once with first < second.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::uint8_t> matrix_;
  std::size_t edge_count_ = 0;
};

struct WeightedEdge {
  std::size_t u;
  std::size_t v;
  Rational weight;
};

/// Graph with a positive rational weight on every edge.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t order = 0) : graph_(order) {}

  /// Throws std::invalid_argument if weight <= 0 or the edge is invalid.
  void add_edge(std::size_t u, std::size_t v, Rational weight);
  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  /// Sorted by (u, v) with u < v.
  std::span<const WeightedEdge> edges() const { return edges_; }
  const Rational& weight(std::size_t u, std::size_t v) const;
  /// Returns a copy without the given edge.
  WeightedGraph without_edge(std::size_t u, std::size_t v) const;

 private:
  Graph graph_;
  std::vector<WeightedEdge> edges_;
};

/// Bijection from source vertices onto target-graph vertices.
struct Embedding {
  std::vector<std::size_t> image;

  /// True iff `image` is a bijection onto target's vertices and every edge of
  /// `source` lands on an edge of `target`.
  bool maps_edges(const Graph& source, const Graph& target) const;
};

/// Breadth-first layers X_0(x), X_1(x), ... of `base`.
struct LayerPartition {
  std::size_t base = 0;
  std::vector<std::vector<std::size_t>> layers;
  /// depth[v] = t iff v in X_t; SIZE_MAX if unreachable.
  std::vector<std::size_t> depth;
};

/// Throws DisconnectedError if some vertex is unreachable from `base`.
LayerPartition layer_partition(const Graph& g, std::size_t base);

bool is_connected(const Graph& g);

// ---- fixed graphs ---------------------------------------------------------

/// Q_n for 1 <= n <= 20; vertex i is the n-bit string of i. Throws RangeError.
Graph hypercube(unsigned n);

/// Outer cycle 0..4, spokes j -- j+5, inner pentagram j+5 -- k+5 for |j-k| in {2,3}.
Graph petersen();

/// The 16-vertex connected bipartite 4-regular graph that is not Q_4.
/// y1..y8 are vertices 0..7, z1..z8 are 8..15.
Graph counterexample_graph();

/// Bit-string label of hypercube vertex `v` ("010").
std::string hypercube_label(std::size_t v, unsigned n);
/// "v1".."v5" for outer vertices, "vbar1".."vbar5" for inner.
std::string petersen_label(std::size_t v);

// ---- structural predicates -----------------------------------------------

struct ZeroTwoViolation {
  std::size_t u;
  std::size_t v;
  std::size_t common;
};

/// First pair (lexicographic) whose common-neighbor count is not 0 or 2.
std::optional<ZeroTwoViolation> zero_two_violation(const Graph& g);
inline bool is_zero_two_graph(const Graph& g) { return !zero_two_violation(g); }

struct Bipartition {
  bool bipartite = true;
  /// 0/1 colour per vertex when bipartite.
  std::vector<std::uint8_t> colour;
  /// Closed odd cycle (first vertex not repeated) when not bipartite.
  std::vector<std::size_t> odd_cycle;
};

Bipartition bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).bipartite; }

/// Number of minimum-edge paths from `source` to every vertex. Throws
/// RangeError on 64-bit overflow.
std::vector<std::uint64_t> geodesic_counts(const Graph& g, std::size_t source);
std::uint64_t count_geodesics(const Graph& g, std::size_t x, std::size_t y);

/// Mulder: connected (0,2)-graph, regular of degree d, order 2^d.
bool is_hypercube(const Graph& g);

/// Explicit isomorphism onto Q_n (n = log2 order), built from breadth-first
/// layers and checked edge by edge. nullopt if g is not a hypercube.
std::optional<Embedding> hypercube_embedding(const Graph& g);

/// Backtracking search for an edge-preserving bijection of an 8-vertex graph
/// onto Q_3. Throws std::invalid_argument if order != 8.
std::optional<Embedding> embed_into_q3(const Graph& s);

/// Length of a shortest cycle; 0 for forests.
std::size_t girth(const Graph& g);

// ---- trees -----------------------------------------------------------------

struct TreePathAnalysis {
  /// Lengths (in edges) of the leaf-to-leaf paths, one per unordered leaf pair, sorted.
  std::vector<std::size_t> maximal_lengths;
  bool has_odd = false;
  std::vector<std::size_t> degree3;
  /// First pair of degree-3 vertices that are not adjacent, if any.
  std::optional<Edge> nonadjacent_degree3;
  /// First pair of degree-3 vertices at even distance, if any. Inside Q_3 such
  /// a pair would share two neighbours, both of which the tree needs.
  std::optional<Edge> even_degree3;
};

/// Throws NotATreeError unless g is a tree.
TreePathAnalysis analyze_tree_paths(const Graph& g);

}  // namespace metrec
