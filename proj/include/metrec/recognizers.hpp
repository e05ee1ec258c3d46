#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metrec/graph.hpp"
#include "metrec/matrix.hpp"

namespace metrec {

enum class Family { hypercube_all_useful, q3_general, petersen, tree };

/// "hypercube-all-useful", "q3-general", "petersen", "tree".
std::string family_name(Family f);

/// Realizing weighted graph on the input's vertex set, plus where each input
/// vertex sits in the target graph.
struct Certificate {
  Embedding embedding;
  std::vector<std::string> labels;
  WeightedGraph graph;
};

/// Which condition failed. `condition` is a stable identifier such
/// as "cubici0.b"; `witness` holds 0-based vertex indices.
struct Rejection {
  std::string condition;
  std::vector<std::size_t> witness;
  std::vector<std::string> values;
  std::string detail;
};

/// One line of the condition trail, in evaluation order.
struct ConditionOutcome {
  std::string condition;
  bool passed;
};

struct Verdict {
  Family family = Family::tree;
  /// Recognizer variant for families with more than one ("count", "layers").
  std::string method;
  bool accepted = false;
  std::optional<unsigned> n;
  std::optional<std::size_t> r;
  std::optional<Certificate> certificate;
  std::optional<Rejection> rejection;
  std::vector<ConditionOutcome> trail;
  /// Auxiliary facts (layer sizes, chosen branch, ...), as key/value text.
  std::vector<std::pair<std::string, std::string>> cross_checks;
};

/// Edge-count plus (0,2) characterisation of all-edges-useful hypercubes.
/// Throws OrderError("OrderNotPowerOfTwo") unless the order is 2^n.
Verdict recognize_hypercube_by_count(const DistanceMatrix& d);

/// Layer-count plus bipartite characterisation, with the geodesic-count
/// cross-check. Throws OrderError("OrderNotPowerOfTwo").
Verdict recognize_hypercube_by_layers(const DistanceMatrix& d);

/// General weighted Q_3 (useless edges allowed). Throws OrderError("OrderNot8").
Verdict recognize_q3_general(const DistanceMatrix& d);

/// All-edges-useful Petersen graph. Throws OrderError("OrderNot10").
Verdict recognize_petersen(const DistanceMatrix& d);

/// Positive-weighted tree on exactly the index set.
Verdict recognize_tree(const DistanceMatrix& d);

/// Runs the recognizers selected by `family` ("hypercube", "q3", "petersen",
/// "tree" or "auto") in a fixed order. `method` picks the hypercube route
/// ("count", "layers" or "both"). In auto mode every family is reported, and a
/// family whose order precondition fails gets a rejection with condition
/// "order" instead of an exception; auto runs both hypercube routes.
std::vector<Verdict> recognize_family(const DistanceMatrix& d, std::string_view family,
                                      std::string_view method = "count");

/// Transports the family's target graph onto the input vertices through
/// `embedding`, weights skeleton edges by D and the remaining target edges by
/// `extra_edge_weight` (Q_3 general only), and checks that the shortest-path
/// matrix equals D. Throws VerificationFailed otherwise.
///
/// For Family::tree the target is the skeleton itself and `embedding` must be
/// the identity.
WeightedGraph reconstruct_and_verify(const DistanceMatrix& d, Family family,
                                     const Embedding& embedding,
                                     const std::optional<Rational>& extra_edge_weight = {});

}  // namespace metrec
