#include "metrec/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "metrec/errors.hpp"
#include "metrec/shortest_paths.hpp"

namespace metrec {

namespace {

constexpr unsigned kDyadicBits = 16;

// rng() % bound keeps draws identical across standard libraries, unlike the
// <random> distributions.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

class WeightSampler {
 public:
  WeightSampler(const Rational& low, const Rational& high) : low_(low) {
    Rational span = (high - low) * (mpz_class(1) << kDyadicBits);
    mpz_class steps = span.get_num() / span.get_den();
    if (steps * span.get_den() == span.get_num()) steps -= 1;  // keep high excluded
    if (steps < 0 || !steps.fits_ulong_p()) throw SpecError("weight range is empty or too wide");
    steps_ = steps.get_ui() + 1;
  }

  Rational operator()(std::mt19937_64& rng) const {
    Rational w = low_ + Rational(mpz_class(draw(rng, steps_)), mpz_class(1) << kDyadicBits);
    w.canonicalize();
    return w;
  }

 private:
  Rational low_;
  std::uint64_t steps_;
};

std::vector<std::size_t> random_permutation(std::size_t m, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = m; i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
  return perm;
}

WeightedGraph relabel(const WeightedGraph& w, const std::vector<std::size_t>& perm) {
  WeightedGraph out(w.order());
  for (const auto& e : w.edges()) out.add_edge(perm[e.u], perm[e.v], e.weight);
  return out;
}

Graph cycle_graph(std::size_t m) {
  Graph g(m);
  for (std::size_t i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  return g;
}

Graph random_tree(std::size_t m, std::mt19937_64& rng) {
  Graph g(m);
  for (std::size_t v = 1; v < m; ++v) g.add_edge(draw(rng, v), v);
  return g;
}

WeightedGraph weigh(const Graph& g, const WeightSampler& sample, std::mt19937_64& rng) {
  WeightedGraph w(g.order());
  for (auto [u, v] : g.edges()) w.add_edge(u, v, sample(rng));
  return w;
}

Rational max_distance(const ShortestPaths& sp) {
  return *std::max_element(sp.distance.begin(), sp.distance.end());
}

WeightedGraph q3_with_useless(std::size_t t, const WeightSampler& sample, std::mt19937_64& rng) {
  const auto q3 = hypercube(3);
  auto cheap = weigh(q3, sample, rng);

  auto edges = q3.edges();
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[draw(rng, i)]);
  std::vector<Edge> raised;
  WeightedGraph remainder = cheap;
  for (auto [u, v] : edges) {
    if (raised.size() == t) break;
    auto trial = remainder.without_edge(u, v);
    if (!is_connected(trial.graph())) continue;
    remainder = std::move(trial);
    raised.emplace_back(u, v);
  }
  if (raised.size() != t) throw std::logic_error("could not pick edges keeping Q_3 connected");

  const Rational heavy = 2 * max_distance(all_pairs_shortest_paths(remainder));
  WeightedGraph out = remainder;
  for (auto [u, v] : raised) out.add_edge(u, v, heavy);
  return out;
}

// Indecomposable pairs straight from the definition.
std::vector<std::uint8_t> definitional_mask(const DistanceMatrix& d) {
  const auto m = d.order();
  std::vector<std::uint8_t> mask(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      bool strict = true;
      for (std::size_t k = 0; k < m && strict; ++k)
        if (k != i && k != j) strict = d(i, j) < d(i, k) + d(k, j);
      mask[i * m + j] = strict;
    }
  return mask;
}

}  // namespace

GeneratorSpec GeneratorSpec::hypercube(unsigned n, std::uint64_t seed) {
  return {GeneratorFamily::hypercube, n, 1, 2, seed};
}
GeneratorSpec GeneratorSpec::petersen(std::uint64_t seed) {
  return {GeneratorFamily::petersen, 10, 1, 4, seed};
}
GeneratorSpec GeneratorSpec::tree(std::size_t m, std::uint64_t seed) {
  return {GeneratorFamily::tree, m, Rational(1, 8), 10, seed};
}
GeneratorSpec GeneratorSpec::q3_with_useless(std::size_t t, std::uint64_t seed) {
  return {GeneratorFamily::q3_with_useless, t, 1, 2, seed};
}
GeneratorSpec GeneratorSpec::cycle(std::size_t m, std::uint64_t seed) {
  return {GeneratorFamily::cycle, m, 1, 2, seed};
}

std::string generator_family_name(GeneratorFamily f) {
  switch (f) {
    case GeneratorFamily::hypercube: return "hypercube";
    case GeneratorFamily::petersen: return "petersen";
    case GeneratorFamily::tree: return "tree";
    case GeneratorFamily::q3_with_useless: return "q3-useless";
    case GeneratorFamily::cycle: return "cycle";
  }
  return "unknown";
}

Instance generate(const GeneratorSpec& spec) {
  if (spec.low <= 0) throw SpecError("weight range must start above zero");
  if (spec.high <= spec.low) throw SpecError("weight range is empty");
  // All-useful families need max weight < (shortest detour) * min weight.
  if ((spec.family == GeneratorFamily::hypercube || spec.family == GeneratorFamily::cycle ||
       spec.family == GeneratorFamily::q3_with_useless) &&
      spec.high > 2 * spec.low)
    throw SpecError("weight range must lie within [a, 2a) for this family");
  if (spec.family == GeneratorFamily::petersen && spec.high > 4 * spec.low)
    throw SpecError("Petersen weight range must lie within [a, 4a)");

  std::mt19937_64 rng(spec.seed);
  const WeightSampler sample(spec.low, spec.high);
  WeightedGraph w;
  switch (spec.family) {
    case GeneratorFamily::hypercube:
      if (spec.parameter < 1 || spec.parameter > 10) throw SpecError("hypercube n must be in [1, 10]");
      w = weigh(metrec::hypercube(static_cast<unsigned>(spec.parameter)), sample, rng);
      break;
    case GeneratorFamily::petersen: w = weigh(metrec::petersen(), sample, rng); break;
    case GeneratorFamily::tree:
      if (spec.parameter < 2) throw SpecError("tree needs at least 2 vertices");
      {
        auto shape = random_tree(spec.parameter, rng);
        w = weigh(shape, sample, rng);
      }
      break;
    case GeneratorFamily::q3_with_useless:
      if (spec.parameter > 5) throw SpecError("at most 5 useless Q_3 edges keep r >= 7");
      w = q3_with_useless(spec.parameter, sample, rng);
      break;
    case GeneratorFamily::cycle:
      if (spec.parameter < 3) throw SpecError("cycle needs at least 3 vertices");
      w = weigh(cycle_graph(spec.parameter), sample, rng);
      break;
  }
  w = relabel(w, random_permutation(w.order(), rng));
  auto d = apsp(w);
  return Instance{std::move(w), std::move(d)};
}

std::optional<Embedding> oracle_realizable(const DistanceMatrix& d, const Graph& target,
                                           bool all_edges_useful) {
  const auto m = d.order();
  if (target.order() != m) throw std::invalid_argument("matrix and target orders differ");
  if (m > 10) throw SizeGuardError("oracle search is limited to order 10");

  const auto mask = definitional_mask(d);
  Graph skel(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (mask[i * m + j]) skel.add_edge(i, j);
  if (skel.edge_count() > target.edge_count()) return std::nullopt;
  if (all_edges_useful && skel.edge_count() != target.edge_count()) return std::nullopt;

  // Place vertices in breadth-first order so each one meets placed neighbours early.
  std::vector<std::size_t> order;
  std::vector<bool> seen(m, false);
  for (std::size_t root = 0; root < m; ++root) {
    if (seen[root]) continue;
    std::queue<std::size_t> queue;
    queue.push(root);
    seen[root] = true;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop();
      order.push_back(u);
      for (auto v : skel.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          queue.push(v);
        }
    }
  }

  const Rational heavy = 2 * d.max_entry();
  std::vector<std::size_t> image(m, m);
  std::vector<bool> used(m, false);

  auto realizes = [&]() {
    std::vector<std::size_t> inverse(m);
    for (std::size_t v = 0; v < m; ++v) inverse[image[v]] = v;
    WeightedGraph w(m);
    for (auto [a, b] : target.edges()) {
      auto u = inverse[a], v = inverse[b];
      w.add_edge(u, v, mask[u * m + v] ? d(u, v) : heavy);
    }
    auto sp = all_pairs_shortest_paths(w);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (!sp.connected(i, j) || sp.at(i, j) != d(i, j)) return false;
    return true;
  };

  auto place = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == m) return realizes();
    const auto v = order[depth];
    for (std::size_t t = 0; t < m; ++t) {
      if (used[t] || target.degree(t) < skel.degree(v)) continue;
      bool ok = true;
      for (auto u : skel.neighbors(v))
        if (image[u] != m && !target.adjacent(image[u], t)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[v] = t;
      used[t] = true;
      if (self(self, depth + 1)) return true;
      used[t] = false;
      image[v] = m;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return Embedding{image};
}

PredistanceMatrix mutate(const DistanceMatrix& d, const Mutation& mu) {
  const auto m = d.order();
  std::vector<Rational> e(d.predistance().entries().begin(), d.predistance().entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return e[i * m + j]; };
  switch (mu.kind) {
    case MutationKind::entry_bump:
      at(mu.i, mu.j) += mu.amount;
      at(mu.j, mu.i) = at(mu.i, mu.j);
      break;
    case MutationKind::swap_pair: {
      Rational a = at(mu.i, mu.j);
      at(mu.i, mu.j) = at(mu.j, mu.i) = at(mu.k, mu.l);
      at(mu.k, mu.l) = at(mu.l, mu.k) = a;
      break;
    }
    case MutationKind::scale_row:
      for (std::size_t x = 0; x < m; ++x) {
        if (x == mu.i) continue;
        at(mu.i, x) *= mu.amount;
        at(x, mu.i) = at(mu.i, x);
      }
      break;
  }
  return PredistanceMatrix(m, std::move(e));
}

Mutation random_mutation(const DistanceMatrix& d, std::mt19937_64& rng) {
  const auto m = d.order();
  auto pair = [&](std::size_t& i, std::size_t& j) {
    i = draw(rng, m);
    do j = draw(rng, m);
    while (j == i);
  };
  Mutation mu;
  mu.kind = static_cast<MutationKind>(draw(rng, 3));
  if (m < 3 && mu.kind == MutationKind::swap_pair) mu.kind = MutationKind::entry_bump;
  switch (mu.kind) {
    case MutationKind::entry_bump: {
      pair(mu.i, mu.j);
      // +-k/16 of the entry, k in 1..8, so the entry stays positive.
      Rational frac(static_cast<long>(draw(rng, 8) + 1), 16);
      mu.amount = d(mu.i, mu.j) * frac;
      if (draw(rng, 2)) mu.amount = -mu.amount;
      break;
    }
    case MutationKind::swap_pair:
      for (int tries = 0; tries < 64; ++tries) {
        pair(mu.i, mu.j);
        pair(mu.k, mu.l);
        if (d(mu.i, mu.j) != d(mu.k, mu.l)) return mu;
      }
      // Every entry equal: fall back to a bump.
      mu.kind = MutationKind::entry_bump;
      mu.amount = d(mu.i, mu.j) / 4;
      break;
    case MutationKind::scale_row: {
      mu.i = draw(rng, m);
      long s = static_cast<long>(draw(rng, 8)) - 4;
      if (s >= 0) ++s;  // skip q = 1
      mu.amount = Rational(8 + s, 8);
      break;
    }
  }
  return mu;
}

}  // namespace metrec
