#include "metrec/shortest_paths.hpp"

#include <limits>
#include <stdexcept>

#include "metrec/errors.hpp"
#include "scaled_paths.hpp"

namespace metrec {

namespace {

// Returns the scaled integer weights and the common denominator, or an empty
// vector when m * max weight would not fit comfortably in 62 bits.
std::vector<std::int64_t> scaled_weights(const WeightedGraph& w, mpz_class& lcm) {
  const mpz_class limit = mpz_class(1) << 61;
  lcm = 1;
  for (const auto& e : w.edges()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.weight.get_den_mpz_t());
    if (lcm >= limit) return {};
  }
  std::vector<std::int64_t> out;
  mpz_class total = 0;
  for (const auto& e : w.edges()) {
    mpz_class s = e.weight.get_num() * (lcm / e.weight.get_den());
    total += s;
    if (total >= limit) return {};
    out.push_back(s.get_si());
  }
  return out;
}

}  // namespace

namespace detail {

std::optional<ScaledPaths> scaled_shortest_paths(const WeightedGraph& w) {
  const auto m = w.order();
  mpz_class lcm;
  auto scaled = scaled_weights(w, lcm);
  if (scaled.empty() && !w.edges().empty()) return std::nullopt;
  ScaledPaths out;
  out.order = m;
  out.denominator = static_cast<std::int64_t>(lcm.get_si());
  // Any simple path weighs at most the sum of all weights, which is < kUnreachable.
  out.distance.assign(m * m, ScaledPaths::kUnreachable);
  auto& dist = out.distance;
  for (std::size_t i = 0; i < m; ++i) dist[i * m + i] = 0;
  std::size_t idx = 0;
  for (const auto& e : w.edges()) dist[e.u * m + e.v] = dist[e.v * m + e.u] = scaled[idx++];
  for (std::size_t k = 0; k < m; ++k) {
    const auto* dk = &dist[k * m];
    for (std::size_t i = 0; i < m; ++i) {
      auto* di = &dist[i * m];
      const auto dik = di[k];
      if (dik == ScaledPaths::kUnreachable) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (dik + dk[j] < di[j]) di[j] = dik + dk[j];
    }
  }
  return out;
}

}  // namespace detail

ShortestPaths all_pairs_shortest_paths(const WeightedGraph& w) {
  const auto m = w.order();
  ShortestPaths out;
  out.order = m;
  out.reachable.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) out.reachable[i * m + i] = 1;
  for (const auto& e : w.edges()) out.reachable[e.u * m + e.v] = out.reachable[e.v * m + e.u] = 1;

  if (auto fast = detail::scaled_shortest_paths(w)) {
    out.distance.resize(m * m);
    const auto den = static_cast<unsigned long>(fast->denominator);
    for (std::size_t i = 0; i < m * m; ++i) {
      if (fast->distance[i] == detail::ScaledPaths::kUnreachable) continue;
      out.reachable[i] = 1;
      mpq_set_si(out.distance[i].get_mpq_t(), static_cast<long>(fast->distance[i]), den);
      if (den != 1) out.distance[i].canonicalize();
    }
    return out;
  }

  out.distance.assign(m * m, Rational(0));
  for (const auto& e : w.edges()) out.distance[e.u * m + e.v] = out.distance[e.v * m + e.u] = e.weight;
  Rational through;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i) {
      if (!out.reachable[i * m + k]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!out.reachable[k * m + j]) continue;
        through = out.distance[i * m + k] + out.distance[k * m + j];
        if (!out.reachable[i * m + j] || through < out.distance[i * m + j]) {
          out.distance[i * m + j] = through;
          out.reachable[i * m + j] = 1;
        }
      }
    }
  return out;
}

DistanceMatrix apsp(const WeightedGraph& w) {
  auto sp = all_pairs_shortest_paths(w);
  for (std::size_t i = 0; i < sp.order; ++i)
    for (std::size_t j = 0; j < sp.order; ++j)
      if (!sp.connected(i, j))
        throw DisconnectedError("vertices " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " are not connected");
  return validate(PredistanceMatrix(sp.order, std::move(sp.distance)));
}

std::vector<Edge> useful_edges_by_deletion(const WeightedGraph& w) {
  const auto base = all_pairs_shortest_paths(w);
  std::vector<Edge> out;
  for (const auto& e : w.edges()) {
    const auto without = all_pairs_shortest_paths(w.without_edge(e.u, e.v));
    bool increased = false;
    for (std::size_t i = 0; i < base.order * base.order && !increased; ++i) {
      if (!base.reachable[i]) continue;
      increased = !without.reachable[i] || base.distance[i] < without.distance[i];
    }
    if (increased) out.emplace_back(e.u, e.v);
  }
  return out;
}

std::vector<Edge> useful_edges_by_indecomposability(const WeightedGraph& w) {
  const auto c = classify(apsp(w));
  std::vector<Edge> out;
  for (const auto& e : w.edges())
    if (c.indecomposable(e.u, e.v)) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<Edge> useful_edges(const WeightedGraph& w) {
  auto by_deletion = useful_edges_by_deletion(w);
  if (by_deletion != useful_edges_by_indecomposability(w))
    throw std::logic_error("useful-edge computations disagree");
  return by_deletion;
}

}  // namespace metrec
