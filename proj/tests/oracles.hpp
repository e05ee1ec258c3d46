#pragma once

// Slow, literal reimplementations used only to cross-check the library.
// Nothing here calls classify, skeleton, layer_partition or the recognizers.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "metrec/graph.hpp"
#include "metrec/matrix.hpp"

namespace oracle {

using metrec::Graph;
using metrec::PredistanceMatrix;
using metrec::Rational;
using metrec::WeightedGraph;

// Bellman-Ford from every source. nullopt entries are unreachable.
inline std::vector<std::optional<Rational>> bellman_ford_apsp(const WeightedGraph& w) {
  const auto m = w.order();
  std::vector<std::optional<Rational>> out(m * m);
  for (std::size_t s = 0; s < m; ++s) {
    auto* dist = &out[s * m];
    dist[s] = Rational(0);
    for (std::size_t round = 0; round + 1 < m; ++round) {
      bool changed = false;
      for (const auto& e : w.edges()) {
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
          if (!dist[a]) continue;
          Rational via = *dist[a] + e.weight;
          if (!dist[b] || via < *dist[b]) {
            dist[b] = via;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
  }
  return out;
}

inline PredistanceMatrix distance_matrix(const WeightedGraph& w) {
  auto sp = bellman_ford_apsp(w);
  std::vector<Rational> entries;
  for (auto& e : sp) entries.push_back(e.value());
  return PredistanceMatrix(w.order(), std::move(entries));
}

// D(i,j) < D(i,k) + D(k,j) for every k outside {i, j}.
inline bool indecomposable(const PredistanceMatrix& d, std::size_t i, std::size_t j) {
  if (i == j) return false;
  for (std::size_t k = 0; k < d.order(); ++k)
    if (k != i && k != j && !(d(i, j) < d(i, k) + d(k, j))) return false;
  return true;
}

inline Graph indecomposable_graph(const PredistanceMatrix& d) {
  Graph g(d.order());
  for (std::size_t i = 0; i < d.order(); ++i)
    for (std::size_t j = i + 1; j < d.order(); ++j)
      if (indecomposable(d, i, j)) g.add_edge(i, j);
  return g;
}

// Smallest k such that a chain x = i_0, ..., i_k = y of indecomposable
// entries exists, found by growing the set of k-step endpoints.
inline std::vector<std::size_t> min_chain_lengths(const PredistanceMatrix& d, std::size_t x) {
  const auto m = d.order();
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best(m, none);
  std::vector<bool> reach(m, false);
  reach[x] = true;
  best[x] = 0;
  for (std::size_t k = 1; k < m; ++k) {
    std::vector<bool> next(m, false);
    for (std::size_t a = 0; a < m; ++a)
      if (reach[a])
        for (std::size_t b = 0; b < m; ++b)
          if (indecomposable(d, a, b)) next[b] = true;
    for (std::size_t b = 0; b < m; ++b)
      if (next[b] && best[b] == none) best[b] = k;
    reach = next;
  }
  return best;
}

// Calls visit(path) for every simple path starting at `from`.
inline void simple_paths(const Graph& g, std::size_t from,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> path{from};
  std::vector<bool> used(g.order(), false);
  used[from] = true;
  std::function<void()> go = [&] {
    visit(path);
    for (auto n : g.neighbors(path.back())) {
      if (used[n]) continue;
      used[n] = true;
      path.push_back(n);
      go();
      path.pop_back();
      used[n] = false;
    }
  };
  go();
}

inline std::uint64_t geodesics_by_enumeration(const Graph& g, std::size_t x, std::size_t y) {
  std::size_t shortest = static_cast<std::size_t>(-1);
  std::uint64_t count = 0;
  simple_paths(g, x, [&](const std::vector<std::size_t>& p) {
    if (p.back() != y) return;
    if (p.size() < shortest) {
      shortest = p.size();
      count = 0;
    }
    if (p.size() == shortest) ++count;
  });
  return count;
}

// Shortest simple cycle by enumerating paths that close back on their start.
inline std::size_t girth_by_enumeration(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.order(); ++s)
    simple_paths(g, s, [&](const std::vector<std::size_t>& p) {
      if (p.size() >= 3 && g.adjacent(p.back(), s) && (best == 0 || p.size() < best)) best = p.size();
    });
  return best;
}

// Two simple paths with common ends whose edge counts differ by exactly one.
inline bool has_paths_differing_by_one(const Graph& g) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<std::set<std::size_t>> lengths(g.order());
    simple_paths(g, x, [&](const std::vector<std::size_t>& p) { lengths[p.back()].insert(p.size() - 1); });
    for (const auto& ls : lengths)
      for (auto l : ls)
        if (ls.count(l + 1)) return true;
  }
  return false;
}

// Some run of 3 or 4 distinct vertices with consecutive edges whose ends are
// also adjacent.
inline bool has_short_closed_run(const Graph& g) {
  bool found = false;
  for (std::size_t s = 0; s < g.order() && !found; ++s)
    simple_paths(g, s, [&](const std::vector<std::size_t>& p) {
      if ((p.size() == 3 || p.size() == 4) && g.adjacent(p.front(), p.back())) found = true;
    });
  return found;
}

inline std::size_t common_neighbours(const Graph& g, std::size_t u, std::size_t v) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < g.order(); ++w)
    if (g.adjacent(u, w) && g.adjacent(v, w)) ++c;
  return c;
}

// Tree from a Prüfer sequence over {0..m-1}.
inline Graph tree_from_pruefer(const std::vector<std::size_t>& seq) {
  const auto m = seq.size() + 2;
  std::vector<std::size_t> degree(m, 1);
  for (auto v : seq) ++degree[v];
  Graph g(m);
  for (auto v : seq) {
    for (std::size_t leaf = 0; leaf < m; ++leaf)
      if (degree[leaf] == 1) {
        g.add_edge(leaf, v);
        --degree[leaf];
        --degree[v];
        break;
      }
  }
  std::size_t a = m, b = m;
  for (std::size_t v = 0; v < m; ++v)
    if (degree[v] == 1) (a == m ? a : b) = v;
  g.add_edge(a, b);
  return g;
}

inline WeightedGraph unit_weights(const Graph& g) {
  WeightedGraph w(g.order());
  for (auto [u, v] : g.edges()) w.add_edge(u, v, 1);
  return w;
}

inline PredistanceMatrix unit_matrix(const Graph& g) { return distance_matrix(unit_weights(g)); }

// Weights in [1, 2): no path of two or more edges is shorter than an edge.
inline WeightedGraph random_weights(const Graph& g, std::mt19937_64& rng) {
  WeightedGraph w(g.order());
  for (auto [u, v] : g.edges()) w.add_edge(u, v, Rational(static_cast<long>(8 + rng() % 8), 8));
  return w;
}

// Random connected graph: random spanning tree plus extra edges, weights
// k/8 for k in [1, 32].
inline WeightedGraph random_connected(std::size_t m, std::size_t extra, std::mt19937_64& rng) {
  WeightedGraph w(m);
  auto weight = [&] { return Rational(static_cast<long>(rng() % 32 + 1), 8); };
  for (std::size_t v = 1; v < m; ++v) w.add_edge(rng() % v, v, weight());
  for (std::size_t t = 0; t < extra; ++t) {
    std::size_t u = rng() % m, v = rng() % m;
    if (u != v && !w.graph().adjacent(u, v)) w.add_edge(u, v, weight());
  }
  return w;
}

}  // namespace oracle
