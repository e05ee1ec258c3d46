#include "metrec/recognizers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "metrec/errors.hpp"
#include "metrec/shortest_paths.hpp"
#include "numeric.hpp"
#include "recognizer_support.hpp"
#include "scaled_paths.hpp"

namespace metrec {

std::string family_name(Family f) {
  switch (f) {
    case Family::hypercube_all_useful: return "hypercube-all-useful";
    case Family::q3_general: return "q3-general";
    case Family::petersen: return "petersen";
    case Family::tree: return "tree";
  }
  return "unknown";
}

namespace detail {

namespace {

Graph target_graph(Family family, const EntryClassification& c) {
  const auto m = c.order();
  switch (family) {
    case Family::hypercube_all_useful:
      return hypercube(static_cast<unsigned>(std::countr_zero(m)));
    case Family::q3_general: return hypercube(3);
    case Family::petersen: return petersen();
    case Family::tree: {
      auto g = skeleton(c);
      if (g.edge_count() + 1 != m || !is_connected(g))
        throw std::logic_error("tree certificate requested but the skeleton is not a tree");
      return g;
    }
  }
  throw std::logic_error("unknown family");
}

bool close_enough(const DistanceMatrix& d, const Rational& a, const Rational& b) {
  if (d.arithmetic().is_exact()) return a == b;
  // Path sums accumulate one rounding error per edge.
  return std::fabs(a.get_d() - b.get_d()) <= d.arithmetic().eps * static_cast<double>(d.order());
}

}  // namespace

WeightedGraph reconstruct(const DistanceMatrix& d, const EntryClassification& c, Family family,
                          const Embedding& embedding,
                          const std::optional<Rational>& extra_edge_weight) {
  const auto m = d.order();
  const auto target = target_graph(family, c);
  if (target.order() != m || embedding.image.size() != m)
    throw std::logic_error("embedding does not match the target order");
  std::vector<std::size_t> inverse(m, m);
  for (std::size_t v = 0; v < m; ++v) {
    auto t = embedding.image[v];
    if (t >= m || inverse[t] != m) throw std::logic_error("embedding is not a bijection");
    inverse[t] = v;
  }

  WeightedGraph out(m);
  std::size_t skeleton_edges = 0;
  for (auto [a, b] : target.edges()) {
    auto u = inverse[a], v = inverse[b];
    if (c.indecomposable(u, v)) {
      out.add_edge(u, v, d(u, v));
      ++skeleton_edges;
    } else if (extra_edge_weight) {
      out.add_edge(u, v, *extra_edge_weight);
    } else {
      throw VerificationFailed(u, v, d(u, v), "a target edge with a decomposable entry");
    }
  }
  if (skeleton_edges != c.indecomposable_count())
    throw std::logic_error("embedding leaves indecomposable pairs off the target graph");

  if (d.arithmetic().is_exact() && !d.numeric().scaled.empty()) {
    if (auto fast = scaled_shortest_paths(out)) {
      // a/p == b/q  <=>  a*q == b*p; both sides stay well inside 128 bits.
      const auto& want = d.numeric().scaled;
      const __int128 p = d.numeric().denominator, q = fast->denominator;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          auto got = fast->distance[i * m + j];
          if (got == ScaledPaths::kUnreachable) throw VerificationFailed(i, j, d(i, j), "unreachable");
          if (got * p != want[i * m + j] * q)
            throw VerificationFailed(i, j, d(i, j), to_string(Rational(mpz_class(static_cast<long>(got)),
                                                                       mpz_class(static_cast<long>(q)))));
        }
      return out;
    }
  }

  const auto sp = all_pairs_shortest_paths(out);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!sp.connected(i, j)) throw VerificationFailed(i, j, d(i, j), "unreachable");
      if (!close_enough(d, sp.at(i, j), d(i, j)))
        throw VerificationFailed(i, j, d(i, j), to_string(sp.at(i, j)));
    }
  return out;
}

void accept(Verdict& v, const DistanceMatrix& d, const EntryClassification& c,
            const Embedding& embedding, const std::optional<Rational>& extra_edge_weight) {
  Certificate cert{embedding, {}, reconstruct(d, c, v.family, embedding, extra_edge_weight)};
  for (std::size_t i = 0; i < d.order(); ++i) {
    switch (v.family) {
      case Family::hypercube_all_useful:
      case Family::q3_general:
        cert.labels.push_back(hypercube_label(embedding.image[i], v.n.value_or(3)));
        break;
      case Family::petersen: cert.labels.push_back(petersen_label(embedding.image[i])); break;
      case Family::tree: cert.labels.push_back(std::to_string(embedding.image[i] + 1)); break;
    }
  }
  v.accepted = true;
  v.certificate = std::move(cert);
}

void pass(Verdict& v, std::string condition) { v.trail.push_back({std::move(condition), true}); }

Verdict& reject(Verdict& v, std::string condition, std::vector<std::size_t> witness,
                std::vector<std::string> values, std::string detail) {
  v.trail.push_back({condition, false});
  v.accepted = false;
  v.rejection = Rejection{std::move(condition), std::move(witness), std::move(values),
                          std::move(detail)};
  return v;
}

}  // namespace detail

using detail::numbers;
using detail::pass;
using detail::reject;

WeightedGraph reconstruct_and_verify(const DistanceMatrix& d, Family family,
                                     const Embedding& embedding,
                                     const std::optional<Rational>& extra_edge_weight) {
  return detail::reconstruct(d, classify(d), family, embedding, extra_edge_weight);
}

namespace {

unsigned require_power_of_two(const DistanceMatrix& d) {
  if (!std::has_single_bit(d.order())) throw OrderError("OrderNotPowerOfTwo", d.order());
  return static_cast<unsigned>(std::countr_zero(d.order()));
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

Verdict recognize_hypercube_by_count(const DistanceMatrix& d) {
  const auto n = require_power_of_two(d);
  const auto m = d.order();
  Verdict v;
  v.family = Family::hypercube_all_useful;
  v.method = "count";
  v.n = n;

  const auto c = classify(d);
  const auto r = c.indecomposable_count();
  v.r = r;
  const std::size_t expected = (m / 2) * n;
  if (r != expected)
    return reject(v, "cubici0.a", {}, numbers({r, expected}),
                  "indecomposable pair count differs from 2^(n-1) n");
  pass(v, "cubici0.a");

  const auto g = skeleton(c);
  if (auto bad = zero_two_violation(g))
    return reject(v, "cubici0.b", {bad->u, bad->v}, numbers({bad->common}),
                  "pair with a common-neighbour count other than 0 or 2");
  pass(v, "cubici0.b");

  auto embedding = hypercube_embedding(g);
  if (!embedding) throw std::logic_error("(0,2) skeleton with 2^(n-1) n edges is not Q_n");
  detail::accept(v, d, c, *embedding);
  return v;
}

Verdict recognize_hypercube_by_layers(const DistanceMatrix& d) {
  const auto n = require_power_of_two(d);
  const auto m = d.order();
  Verdict v;
  v.family = Family::hypercube_all_useful;
  v.method = "layers";
  v.n = n;

  const auto c = classify(d);
  v.r = c.indecomposable_count();
  const auto g = skeleton(c);

  std::vector<LayerPartition> layers;
  layers.reserve(m);
  for (std::size_t x = 0; x < m; ++x) {
    layers.push_back(layer_partition(g, x));
    const auto& depth = layers.back().depth;
    for (std::size_t y = 0; y < m; ++y) {
      const auto k = depth[y];
      if (k == 0) continue;
      std::size_t count = 0;
      for (auto w : g.neighbors(y)) count += depth[w] + 1 == k ? 1 : 0;
      if (count != k)
        return reject(v, "cubici.a", {x, y}, numbers({k, count}),
                      "#(X_1(y) & X_{k-1}(x)) differs from k");
    }
  }
  pass(v, "cubici.a");
  {
    std::string sizes;
    for (const auto& layer : layers.front().layers)
      sizes += (sizes.empty() ? "" : ",") + std::to_string(layer.size());
    v.cross_checks.emplace_back("layer_sizes", sizes);
  }

  auto parts = bipartition(g);
  if (!parts.bipartite)
    return reject(v, "cubici.b", parts.odd_cycle, numbers({parts.odd_cycle.size()}),
                  "odd cycle of indecomposable entries");
  pass(v, "cubici.b");

  // Geodesic counts d(x,y)! follow from (a); checked as the second route.
  for (std::size_t x = 0; x < m; ++x) {
    auto counts = geodesic_counts(g, x);
    for (std::size_t y = 0; y < m; ++y) {
      auto k = layers[x].depth[y];
      if (counts[y] != factorial(k))
        return reject(v, "cubici.a", {x, y}, numbers({k, static_cast<std::size_t>(counts[y])}),
                      "geodesic count differs from d(x,y)!");
    }
  }
  v.cross_checks.emplace_back("geodesics", "d(x,y)!");

  auto embedding = hypercube_embedding(g);
  if (!embedding) throw std::logic_error("bipartite skeleton with factorial geodesics is not Q_n");
  detail::accept(v, d, c, *embedding);
  return v;
}

Verdict recognize_petersen(const DistanceMatrix& d) {
  if (d.order() != 10) throw OrderError("OrderNot10", d.order());
  Verdict v;
  v.family = Family::petersen;
  const auto c = classify(d);
  v.r = c.indecomposable_count();
  const auto g = skeleton(c);

  for (std::size_t x = 0; x < 10; ++x)
    if (g.degree(x) != 3)
      return reject(v, "petersen.a", {x}, numbers({g.degree(x)}), "#X_1(x) differs from 3");
  pass(v, "petersen.a");

  for (std::size_t a = 0; a < 10; ++a)
    for (auto b : g.neighbors(a))
      for (auto e : g.neighbors(b))
        if (e != a && g.adjacent(e, a))
          return reject(v, "petersen.b", {a, b, e}, {}, "three indecomposable entries close a 3-cycle");
  for (std::size_t a = 0; a < 10; ++a)
    for (auto b : g.neighbors(a))
      for (auto e : g.neighbors(b)) {
        if (e == a) continue;
        for (auto f : g.neighbors(e))
          if (f != b && f != a && g.adjacent(f, a))
            return reject(v, "petersen.b", {a, b, e, f}, {},
                          "four indecomposable entries close a 4-cycle");
      }
  pass(v, "petersen.b");

  // Five-cycles v1..v5 whose outside neighbours are pairwise distinct.
  std::array<std::size_t, 5> cycle{};
  std::optional<Embedding> embedding;
  auto outside = [&](std::size_t vj) {
    for (auto w : g.neighbors(vj))
      if (std::find(cycle.begin(), cycle.end(), w) == cycle.end()) return w;
    return std::size_t{10};
  };
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == 5) {
      if (!g.adjacent(cycle[4], cycle[0])) return false;
      Embedding e{std::vector<std::size_t>(10, 10)};
      for (std::size_t j = 0; j < 5; ++j) {
        auto bar = outside(cycle[j]);
        if (bar == 10 || e.image[bar] != 10) return false;
        e.image[cycle[j]] = j;
        e.image[bar] = j + 5;
      }
      embedding = std::move(e);
      return true;
    }
    for (auto w : g.neighbors(cycle[depth - 1])) {
      if (std::find(cycle.begin(), cycle.begin() + depth, w) != cycle.begin() + depth) continue;
      cycle[depth] = w;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  for (std::size_t start = 0; start < 10 && !embedding; ++start) {
    cycle[0] = start;
    extend(extend, 1);
  }
  if (!embedding)
    return reject(v, "petersen.c", {}, {},
                  "no 5-cycle of indecomposable entries has five distinct outside neighbours");
  pass(v, "petersen.c");
  detail::accept(v, d, c, *embedding);
  return v;
}

Verdict recognize_tree(const DistanceMatrix& d) {
  Verdict v;
  v.family = Family::tree;
  if (auto fp = four_point_condition(d); !fp) {
    const auto& w = *fp.violation;
    return reject(v, "tree.fourpoint", {w.quad.begin(), w.quad.end()},
                  numbers({w.sums[0], w.sums[1], w.sums[2]}),
                  "maximum of the three pair sums is attained once");
  }
  pass(v, "tree.fourpoint");
  if (auto med = is_median(d); !med) {
    const auto& w = *med.violation;
    return reject(v, "tree.median", {w.triple.begin(), w.triple.end()},
                  numbers({w.medians.size()}), "triple without a unique median");
  }
  pass(v, "tree.median");

  const auto c = classify(d);
  v.r = c.indecomposable_count();
  Embedding identity{std::vector<std::size_t>(d.order())};
  std::iota(identity.image.begin(), identity.image.end(), 0);
  detail::accept(v, d, c, identity);
  return v;
}

}  // namespace metrec
