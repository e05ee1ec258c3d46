#include "metrec/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "metrec/errors.hpp"

namespace metrec {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_depths(const Graph& g, std::size_t source,
                                    std::vector<std::size_t>* parent = nullptr) {
  std::vector<std::size_t> depth(g.order(), kUnreached);
  if (parent) parent->assign(g.order(), kUnreached);
  std::queue<std::size_t> queue;
  depth[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop();
    for (auto v : g.neighbors(u)) {
      if (depth[v] != kUnreached) continue;
      depth[v] = depth[u] + 1;
      if (parent) (*parent)[v] = u;
      queue.push(v);
    }
  }
  return depth;
}

}  // namespace

// ---- Graph -----------------------------------------------------------------

Graph::Graph(std::size_t order) : adjacency_(order), matrix_(order * order, 0) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  const auto n = order();
  if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adjacent(u, v)) throw std::invalid_argument("duplicate edge");
  matrix_[u * n + v] = matrix_[v * n + u] = 1;
  auto insert = [](std::vector<std::size_t>& list, std::size_t x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert(adjacency_[u], v);
  insert(adjacency_[v], u);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < order(); ++u)
    for (auto v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

// ---- WeightedGraph ---------------------------------------------------------

void WeightedGraph::add_edge(std::size_t u, std::size_t v, Rational weight) {
  weight.canonicalize();
  if (weight <= 0) throw std::invalid_argument("edge weights must be positive");
  graph_.add_edge(u, v);
  if (u > v) std::swap(u, v);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v},
                              [](const WeightedEdge& e, const Edge& key) {
                                return std::pair(e.u, e.v) < key;
                              });
  edges_.insert(pos, WeightedEdge{u, v, std::move(weight)});
}

const Rational& WeightedGraph::weight(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v},
                              [](const WeightedEdge& e, const Edge& key) {
                                return std::pair(e.u, e.v) < key;
                              });
  if (pos == edges_.end() || pos->u != u || pos->v != v)
    throw std::out_of_range("no such edge");
  return pos->weight;
}

WeightedGraph WeightedGraph::without_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  WeightedGraph out(order());
  for (const auto& e : edges_)
    if (e.u != u || e.v != v) out.add_edge(e.u, e.v, e.weight);
  return out;
}

bool Embedding::maps_edges(const Graph& source, const Graph& target) const {
  if (image.size() != source.order() || source.order() != target.order()) return false;
  std::vector<bool> hit(target.order(), false);
  for (auto t : image) {
    if (t >= target.order() || hit[t]) return false;
    hit[t] = true;
  }
  for (auto [u, v] : source.edges())
    if (!target.adjacent(image[u], image[v])) return false;
  return true;
}

LayerPartition layer_partition(const Graph& g, std::size_t base) {
  LayerPartition out;
  out.base = base;
  out.depth = bfs_depths(g, base);
  for (std::size_t v = 0; v < g.order(); ++v) {
    auto d = out.depth[v];
    if (d == kUnreached)
      throw DisconnectedError("vertex " + std::to_string(v + 1) + " is unreachable from " +
                              std::to_string(base + 1));
    if (out.layers.size() <= d) out.layers.resize(d + 1);
    out.layers[d].push_back(v);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto depth = bfs_depths(g, 0);
  return std::none_of(depth.begin(), depth.end(),
                      [](std::size_t d) { return d == kUnreached; });
}

// ---- fixed graphs ----------------------------------------------------------

Graph hypercube(unsigned n) {
  if (n < 1 || n > 20) throw RangeError("hypercube dimension must be in [1, 20]");
  const std::size_t order = std::size_t{1} << n;
  Graph g(order);
  for (std::size_t v = 0; v < order; ++v)
    for (unsigned b = 0; b < n; ++b) {
      auto w = v ^ (std::size_t{1} << b);
      if (v < w) g.add_edge(v, w);
    }
  return g;
}

Graph petersen() {
  Graph g(10);
  for (std::size_t j = 0; j < 5; ++j) {
    g.add_edge(j, (j + 1) % 5);
    g.add_edge(j, j + 5);
    g.add_edge(j + 5, (j + 2) % 5 + 5);
  }
  return g;
}

Graph counterexample_graph() {
  // y_i -> i-1, z_i -> i+7
  auto y = [](std::size_t i) { return i - 1; };
  auto z = [](std::size_t i) { return i + 7; };
  Graph g(16);
  for (std::size_t a : {1, 2})
    for (std::size_t b : {1, 2, 3, 4}) g.add_edge(y(a), z(b));
  for (std::size_t b : {7, 8})
    for (std::size_t a : {5, 6, 7, 8}) g.add_edge(y(a), z(b));
  for (std::size_t b : {1, 2, 5, 6}) g.add_edge(y(3), z(b));
  for (std::size_t b : {3, 4, 5, 6}) g.add_edge(y(4), z(b));
  g.add_edge(z(5), y(5));
  g.add_edge(z(5), y(6));
  g.add_edge(z(6), y(7));
  g.add_edge(z(6), y(8));
  for (std::size_t i = 1; i <= 4; ++i) g.add_edge(z(i), y(i + 4));
  return g;
}

std::string hypercube_label(std::size_t v, unsigned n) {
  std::string s(n, '0');
  for (unsigned b = 0; b < n; ++b)
    if (v >> b & 1) s[n - 1 - b] = '1';
  return s;
}

std::string petersen_label(std::size_t v) {
  return v < 5 ? "v" + std::to_string(v + 1) : "vbar" + std::to_string(v - 4);
}

// ---- structural predicates -------------------------------------------------

std::optional<ZeroTwoViolation> zero_two_violation(const Graph& g) {
  const auto n = g.order();
  std::vector<std::size_t> common(n);
  for (std::size_t u = 0; u < n; ++u) {
    // Count, for every v > u, the length-2 paths u - w - v.
    std::fill(common.begin(), common.end(), 0);
    for (auto w : g.neighbors(u))
      for (auto v : g.neighbors(w))
        if (v > u) ++common[v];
    for (std::size_t v = u + 1; v < n; ++v)
      if (common[v] != 0 && common[v] != 2) return ZeroTwoViolation{u, v, common[v]};
  }
  return std::nullopt;
}

Bipartition bipartition(const Graph& g) {
  const auto n = g.order();
  Bipartition out;
  out.colour.assign(n, 0);
  std::vector<std::size_t> depth(n, kUnreached), parent(n, kUnreached);
  for (std::size_t root = 0; root < n; ++root) {
    if (depth[root] != kUnreached) continue;
    depth[root] = 0;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop();
      for (auto v : g.neighbors(u)) {
        if (depth[v] == kUnreached) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          out.colour[v] = static_cast<std::uint8_t>(depth[v] & 1);
          queue.push(v);
        } else if ((depth[v] & 1) == (depth[u] & 1)) {
          // Walk both ends up to their common ancestor.
          std::vector<std::size_t> left{u}, right{v};
          auto a = u, b = v;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          out.bipartite = false;
          out.colour.clear();
          out.odd_cycle = std::move(left);
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          return out;
        }
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> geodesic_counts(const Graph& g, std::size_t source) {
  const auto n = g.order();
  std::vector<std::size_t> depth(n, kUnreached);
  std::vector<std::uint64_t> count(n, 0);
  std::queue<std::size_t> queue;
  depth[source] = 0;
  count[source] = 1;
  queue.push(source);
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop();
    for (auto v : g.neighbors(u)) {
      if (depth[v] == kUnreached) {
        depth[v] = depth[u] + 1;
        queue.push(v);
      }
      if (depth[v] == depth[u] + 1 && __builtin_add_overflow(count[v], count[u], &count[v]))
        throw RangeError("geodesic count overflows 64 bits");
    }
  }
  return count;
}

std::uint64_t count_geodesics(const Graph& g, std::size_t x, std::size_t y) {
  return geodesic_counts(g, x)[y];
}

bool is_hypercube(const Graph& g) {
  const auto n = g.order();
  if (n == 0 || !is_connected(g)) return false;
  const auto d = g.degree(0);
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) != d) return false;
  if (d >= 8 * sizeof(std::size_t) || n != std::size_t{1} << d) return false;
  return is_zero_two_graph(g);
}

std::optional<Embedding> hypercube_embedding(const Graph& g) {
  const auto m = g.order();
  if (m < 2 || !std::has_single_bit(m)) return std::nullopt;
  const auto n = static_cast<unsigned>(std::countr_zero(m));
  for (std::size_t v = 0; v < m; ++v)
    if (g.degree(v) != n) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;

  auto layers = layer_partition(g, 0);
  std::vector<std::size_t> label(m, 0);
  auto first = g.neighbors(0);
  for (std::size_t k = 0; k < first.size(); ++k) label[first[k]] = std::size_t{1} << k;
  for (std::size_t t = 2; t < layers.layers.size(); ++t)
    for (auto y : layers.layers[t]) {
      std::size_t bits = 0;
      for (auto w : g.neighbors(y))
        if (layers.depth[w] == t - 1) bits |= label[w];
      if (static_cast<std::size_t>(std::popcount(bits)) != t) return std::nullopt;
      label[y] = bits;
    }
  Embedding e{std::move(label)};
  if (g.edge_count() != (m / 2) * n || !e.maps_edges(g, hypercube(n))) return std::nullopt;
  return e;
}

std::optional<Embedding> embed_into_q3(const Graph& s) {
  if (s.order() != 8) throw std::invalid_argument("embed_into_q3 needs an 8-vertex graph");
  for (std::size_t v = 0; v < 8; ++v)
    if (s.degree(v) > 3) return std::nullopt;

  std::array<std::size_t, 8> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return s.degree(a) > s.degree(b); });

  std::vector<std::size_t> image(8, kUnreached);
  std::array<bool, 8> used{};
  auto place = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == 8) return true;
    auto v = order[depth];
    for (std::size_t c = 0; c < 8; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (auto u : s.neighbors(v))
        if (image[u] != kUnreached && std::popcount(image[u] ^ c) != 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[v] = c;
      used[c] = true;
      if (self(self, depth + 1)) return true;
      used[c] = false;
      image[v] = kUnreached;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  Embedding e{std::move(image)};
  if (!e.maps_edges(s, hypercube(3)))
    throw std::logic_error("embed_into_q3 produced a non-edge-preserving map");
  return e;
}

std::size_t girth(const Graph& g) {
  std::size_t best = kUnreached;
  std::vector<std::size_t> parent;
  for (std::size_t s = 0; s < g.order(); ++s) {
    auto depth = bfs_depths(g, s, &parent);
    for (auto [u, v] : g.edges()) {
      if (depth[u] == kUnreached || parent[u] == v || parent[v] == u) continue;
      best = std::min(best, depth[u] + depth[v] + 1);
    }
  }
  return best == kUnreached ? 0 : best;
}

// ---- trees -----------------------------------------------------------------

TreePathAnalysis analyze_tree_paths(const Graph& g) {
  const auto n = g.order();
  if (n == 0 || g.edge_count() != n - 1 || !is_connected(g))
    throw NotATreeError("graph with " + std::to_string(n) + " vertices and " +
                        std::to_string(g.edge_count()) + " edges is not a tree");
  TreePathAnalysis out;
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == 1) leaves.push_back(v);
    if (g.degree(v) == 3) out.degree3.push_back(v);
  }
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    auto depth = bfs_depths(g, leaves[a]);
    for (std::size_t b = a + 1; b < leaves.size(); ++b)
      out.maximal_lengths.push_back(depth[leaves[b]]);
  }
  std::sort(out.maximal_lengths.begin(), out.maximal_lengths.end());
  out.has_odd = std::any_of(out.maximal_lengths.begin(), out.maximal_lengths.end(),
                            [](std::size_t len) { return len % 2 == 1; });
  for (std::size_t a = 0; a < out.degree3.size() && !out.nonadjacent_degree3; ++a)
    for (std::size_t b = a + 1; b < out.degree3.size(); ++b)
      if (!g.adjacent(out.degree3[a], out.degree3[b])) {
        out.nonadjacent_degree3 = Edge{out.degree3[a], out.degree3[b]};
        break;
      }
  for (std::size_t a = 0; a < out.degree3.size() && !out.even_degree3; ++a) {
    auto depth = bfs_depths(g, out.degree3[a]);
    for (std::size_t b = a + 1; b < out.degree3.size(); ++b)
      if (depth[out.degree3[b]] % 2 == 0) {
        out.even_degree3 = Edge{out.degree3[a], out.degree3[b]};
        break;
      }
  }
  return out;
}

}  // namespace metrec
