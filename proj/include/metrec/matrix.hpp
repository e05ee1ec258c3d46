#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metrec/graph.hpp"
#include "metrec/rational.hpp"

namespace metrec {

/// How entries are compared. Exact mode compares rationals exactly; tolerant
/// mode compares double approximations and treats |a - b| <= eps as equal.
struct Arithmetic {
  enum class Kind { exact, tolerant };
  Kind kind = Kind::exact;
  double eps = 1e-9;

  static Arithmetic exact() { return {}; }
  static Arithmetic tolerant(double eps = 1e-9);
  bool is_exact() const { return kind == Kind::exact; }
};

/// Square symmetric matrix of rationals with zero diagonal and strictly
/// positive off-diagonal entries, order >= 2. Indices are 0-based.
class PredistanceMatrix {
 public:
  /// Throws ShapeError naming the first offending entry.
  PredistanceMatrix(std::size_t order, std::vector<Rational> entries);
  static PredistanceMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t order() const { return order_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(entries_).subspan(i * order_, order_);
  }
  std::span<const Rational> entries() const { return entries_; }

  bool operator==(const PredistanceMatrix&) const = default;

 private:
  std::size_t order_;
  std::vector<Rational> entries_;
};

namespace detail {
struct NumericCache;
}

/// A predistance matrix known to satisfy every triangle inequality (under its
/// arithmetic). Only `validate` constructs one.
class DistanceMatrix {
 public:
  std::size_t order() const { return matrix_.order(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  std::span<const Rational> row(std::size_t i) const { return matrix_.row(i); }
  const PredistanceMatrix& predistance() const { return matrix_; }
  const Arithmetic& arithmetic() const { return arithmetic_; }
  const Rational& max_entry() const { return max_entry_; }

  const detail::NumericCache& numeric() const { return *numeric_; }

 private:
  friend DistanceMatrix validate(PredistanceMatrix, Arithmetic);
  DistanceMatrix(PredistanceMatrix m, Arithmetic a,
                 std::shared_ptr<const detail::NumericCache> numeric);

  PredistanceMatrix matrix_;
  Arithmetic arithmetic_;
  Rational max_entry_;
  std::shared_ptr<const detail::NumericCache> numeric_;
};

/// Checks all m^3 triangle inequalities. Throws TriangleViolation with the
/// lexicographically smallest (i, k, j), i < j, such that D(i,j) > D(i,k) + D(k,j).
DistanceMatrix validate(PredistanceMatrix p, Arithmetic arithmetic = {});

/// Read-only view of the m x m x m tower: value(i, j, l) = D(i,l) + D(l,j).
/// Values are computed on demand rather than stored.
class TowerMatrix {
 public:
  explicit TowerMatrix(DistanceMatrix d) : d_(std::move(d)) {}
  std::size_t order() const { return d_.order(); }
  Rational value(std::size_t i, std::size_t j, std::size_t l) const { return d_(i, l) + d_(l, j); }
  std::vector<Rational> row(std::size_t i, std::size_t j) const;

 private:
  DistanceMatrix d_;
};

TowerMatrix tower(const DistanceMatrix& d);

/// Indecomposable/decomposable verdict per pair plus the multiplicity of
/// each tower row's minimum.
class EntryClassification {
 public:
  EntryClassification(std::size_t order, std::vector<std::uint32_t> multiplicity);

  std::size_t order() const { return order_; }
  bool indecomposable(std::size_t i, std::size_t j) const {
    return i != j && multiplicity_[i * order_ + j] == 2;
  }
  std::uint32_t multiplicity(std::size_t i, std::size_t j) const {
    return multiplicity_[i * order_ + j];
  }
  /// r, the number of indecomposable unordered pairs.
  std::size_t indecomposable_count() const { return count_; }
  std::vector<Edge> indecomposable_pairs() const;

 private:
  std::size_t order_;
  std::vector<std::uint32_t> multiplicity_;
  std::size_t count_ = 0;
};

/// O(m^3) kernel: D(i,j) is indecomposable iff the minimum of tower row (i,j)
/// is attained exactly twice (at l = i and l = j).
EntryClassification classify(const DistanceMatrix& d);

/// Graph on {0..m-1} whose edges are the indecomposable pairs.
Graph skeleton(const EntryClassification& c);
inline Graph skeleton(const DistanceMatrix&, const EntryClassification& c) { return skeleton(c); }

LayerPartition layer_partition(const DistanceMatrix& d, const EntryClassification& c,
                               std::size_t x);

/// Holds iff `violation` is empty.
template <class Violation>
struct Check {
  std::optional<Violation> violation;

  bool holds() const { return !violation.has_value(); }
  explicit operator bool() const { return holds(); }
};

struct FourPointViolation {
  /// i < j < k < h.
  std::array<std::size_t, 4> quad;
  /// D(i,j)+D(k,h), D(i,k)+D(j,h), D(i,h)+D(j,k).
  std::array<Rational, 3> sums;
};

/// For every 4-subset the largest of the three pair sums is attained at
/// least twice. Vacuous for m < 4.
Check<FourPointViolation> four_point_condition(const DistanceMatrix& d);

struct MedianViolation {
  std::array<std::size_t, 3> triple;
  std::vector<std::size_t> medians;
};

/// All y with D(i,j) = D(i,y) + D(y,j) for each pair of the triple.
std::vector<std::size_t> medians(const DistanceMatrix& d, std::size_t a, std::size_t b,
                                 std::size_t c);

/// Every triple of distinct indices has exactly one median. Vacuous for m < 3.
Check<MedianViolation> is_median(const DistanceMatrix& d);

/// Maximal-path analysis of a tree skeleton. Throws NotATreeError otherwise.
TreePathAnalysis indecomposable_paths(const DistanceMatrix& d, const EntryClassification& c);

}  // namespace metrec
