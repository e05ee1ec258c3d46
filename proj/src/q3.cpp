// General weighted Q_3 recognition: useless edges are allowed, so the
// skeleton is any connected spanning subgraph of Q_3 (7 to 12 edges).

#include <algorithm>
#include <stdexcept>

#include "metrec/errors.hpp"
#include "metrec/recognizers.hpp"
#include "recognizer_support.hpp"

namespace metrec {

using detail::numbers;
using detail::pass;
using detail::reject;

namespace {

struct Completion {
  Graph graph;
  std::vector<Edge> added;
};

// Adds edges among the deficient vertices until every vertex has degree 3,
// keeping the first (lexicographic) completion that is a (0,2)-graph.
std::optional<Completion> complete_to_cubic(const Graph& s, const std::vector<std::size_t>& deficient) {
  std::vector<std::size_t> need(s.order(), 0);
  for (auto z : deficient) need[z] = 3 - s.degree(z);
  Graph current = s;
  std::vector<Edge> added;

  auto search = [&](auto&& self) -> bool {
    auto first = std::find_if(deficient.begin(), deficient.end(),
                              [&](std::size_t z) { return need[z] > 0; });
    if (first == deficient.end()) return is_zero_two_graph(current);
    const auto zi = *first;
    for (auto it = std::next(first); it != deficient.end(); ++it) {
      const auto zj = *it;
      if (need[zj] == 0 || current.adjacent(zi, zj)) continue;
      Graph saved = current;
      current.add_edge(zi, zj);
      added.emplace_back(zi, zj);
      --need[zi];
      --need[zj];
      if (self(self)) return true;
      ++need[zi];
      ++need[zj];
      added.pop_back();
      current = std::move(saved);
    }
    return false;
  };
  if (!search(search)) return std::nullopt;
  return Completion{std::move(current), std::move(added)};
}

}  // namespace

Verdict recognize_q3_general(const DistanceMatrix& d) {
  if (d.order() != 8) throw OrderError("OrderNot8", d.order());
  Verdict v;
  v.family = Family::q3_general;
  v.n = 3;

  const auto c = classify(d);
  const auto r = c.indecomposable_count();
  v.r = r;
  const auto g = skeleton(c);
  const Rational extra = 2 * d.max_entry();

  for (std::size_t x = 0; x < 8; ++x)
    if (g.degree(x) > 3)
      return reject(v, "q3.a", {x}, numbers({g.degree(x)}), "#X_1(x) exceeds 3");
  pass(v, "q3.a");

  if (r < 7 || r > 12)
    return reject(v, "q3.b", {}, numbers({r}), "indecomposable pair count outside 7..12");
  pass(v, "q3.b");

  if (r == 7) {
    v.cross_checks.emplace_back("branch", "r=7");
    if (auto fp = four_point_condition(d); !fp) {
      const auto& w = *fp.violation;
      return reject(v, "q3.r7.fourpoint", {w.quad.begin(), w.quad.end()},
                    numbers({w.sums[0], w.sums[1], w.sums[2]}));
    }
    pass(v, "q3.r7.fourpoint");
    if (auto med = is_median(d); !med) {
      const auto& w = *med.violation;
      return reject(v, "q3.r7.median", {w.triple.begin(), w.triple.end()},
                    numbers({w.medians.size()}));
    }
    pass(v, "q3.r7.median");
    const auto paths = analyze_tree_paths(g);
    if (!paths.has_odd) {
      std::vector<std::string> lengths;
      for (auto len : paths.maximal_lengths) lengths.push_back(std::to_string(len));
      return reject(v, "q3.r7.oddpath", {}, std::move(lengths),
                    "every maximal path of indecomposable entries has even length");
    }
    pass(v, "q3.r7.oddpath");
    if (paths.even_degree3) {
      auto [a, b] = *paths.even_degree3;
      auto hops = layer_partition(g, a).depth[b];
      return reject(v, "q3.r7.deg3adjacency", {a, b}, {std::to_string(hops)},
                    "two vertices with #X_1 = 3 are an even number of skeleton steps apart");
    }
    pass(v, "q3.r7.deg3adjacency");
    auto embedding = embed_into_q3(g);
    if (!embedding) throw std::logic_error("tree passing the r=7 conditions does not embed in Q_3");
    detail::accept(v, d, c, *embedding, extra);
    return v;
  }

  if (r < 12) {
    v.cross_checks.emplace_back("branch", "r=8..11");
    std::vector<std::size_t> deficient;
    for (std::size_t x = 0; x < 8; ++x)
      if (g.degree(x) < 3) deficient.push_back(x);
    const std::size_t k = deficient.size();
    const std::size_t lo = std::min<std::size_t>(13 - r, 4);
    // 24 - 2r is the total degree deficit. Capping it at 6 would turn away
    // Hamiltonian 8-cycles of Q_3 (r = 8, every vertex deficient).
    const std::size_t hi = 24 - 2 * r;
    if (k < lo || k > hi)
      return reject(v, "q3.r8_11.k_range", deficient, numbers({k, lo, hi}),
                    "number of vertices with #X_1 < 3 is outside the allowed range");
    pass(v, "q3.r8_11.k_range");
    auto completion = complete_to_cubic(g, deficient);
    if (!completion)
      return reject(v, "q3.r8_11.completion", deficient, {},
                    "no completion of the deficient neighbourhoods is a (0,2)-graph");
    pass(v, "q3.r8_11.completion");
    std::string added;
    for (auto [a, b] : completion->added)
      added += (added.empty() ? "" : ",") + std::to_string(a + 1) + "-" + std::to_string(b + 1);
    v.cross_checks.emplace_back("completion", added);
    auto embedding = hypercube_embedding(completion->graph);
    if (!embedding) throw std::logic_error("cubic (0,2) completion on 8 vertices is not Q_3");
    detail::accept(v, d, c, *embedding, extra);
    return v;
  }

  v.cross_checks.emplace_back("branch", "r=12");
  if (auto bad = zero_two_violation(g))
    return reject(v, "q3.r12.zerotwo", {bad->u, bad->v}, numbers({bad->common}));
  pass(v, "q3.r12.zerotwo");
  auto embedding = hypercube_embedding(g);
  if (!embedding) throw std::logic_error("cubic (0,2) skeleton on 8 vertices is not Q_3");
  detail::accept(v, d, c, *embedding, extra);
  return v;
}

}  // namespace metrec
