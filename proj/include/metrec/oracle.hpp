#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "metrec/graph.hpp"
#include "metrec/matrix.hpp"

namespace metrec {

enum class GeneratorFamily { hypercube, petersen, tree, q3_with_useless, cycle };

/// What to generate. `parameter` is n for hypercube(n), m for tree(m) and
/// cycle(m), t for q3_with_useless(t); unused for petersen. Weights are
/// dyadic rationals low + k/2^16 in [low, high).
struct GeneratorSpec {
  GeneratorFamily family = GeneratorFamily::hypercube;
  std::size_t parameter = 0;
  Rational low = 1;
  Rational high = 2;
  std::uint64_t seed = 0;

  /// Weights in [1,2): every detour has at least two edges, so it weighs at
  /// least 2 and every edge stays useful.
  static GeneratorSpec hypercube(unsigned n, std::uint64_t seed);
  /// Weights in [1,4): girth 5 makes every detour at least four edges long.
  static GeneratorSpec petersen(std::uint64_t seed);
  static GeneratorSpec tree(std::size_t m, std::uint64_t seed);
  /// Q_3 with weights in [1,2), then t <= 5 edges (leaving the rest connected)
  /// raised to twice the largest remaining distance, which makes them useless.
  static GeneratorSpec q3_with_useless(std::size_t t, std::uint64_t seed);
  static GeneratorSpec cycle(std::size_t m, std::uint64_t seed);
};

/// "hypercube", "petersen", "tree", "q3-useless", "cycle".
std::string generator_family_name(GeneratorFamily f);

struct Instance {
  WeightedGraph graph;
  DistanceMatrix matrix;
};

/// Deterministic in the seed. Vertex labels are shuffled with the same seed.
/// Throws SpecError on an invalid spec.
Instance generate(const GeneratorSpec& spec);

/// Brute-force realizability: tries every bijection onto `target` that maps
/// indecomposable pairs onto target edges, weights mapped pairs by D and the
/// other target edges by 2 * max D, and keeps the first whose shortest-path
/// matrix equals D. With `all_edges_useful`, only maps covering every target
/// edge with an indecomposable pair count.
///
/// Throws std::invalid_argument if the orders differ and SizeGuardError above
/// order 10. Indecomposability is recomputed from the definition here, not
/// through `classify`.
std::optional<Embedding> oracle_realizable(const DistanceMatrix& d, const Graph& target,
                                           bool all_edges_useful = false);

enum class MutationKind { entry_bump, swap_pair, scale_row };

/// entry_bump: D(i,j) += amount. swap_pair: exchange D(i,j) and D(k,l).
/// scale_row: multiply row and column i by amount.
struct Mutation {
  MutationKind kind = MutationKind::entry_bump;
  std::size_t i = 0, j = 1, k = 0, l = 0;
  Rational amount = 0;
};

/// Applies the mutation symmetrically. Throws ShapeError if an entry stops
/// being positive.
PredistanceMatrix mutate(const DistanceMatrix& d, const Mutation& mutation);

/// A random non-identity mutation.
Mutation random_mutation(const DistanceMatrix& d, std::mt19937_64& rng);

}  // namespace metrec
