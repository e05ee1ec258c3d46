#pragma once

// Comparison kernels shared by the O(m^3) sweeps. Each kernel exposes the
// same small interface so the sweeps are written once as templates.

#include <cmath>
#include <cstdint>
#include <vector>

#include "metrec/matrix.hpp"

namespace metrec::detail {

struct NumericCache {
  /// Entries times the lcm of all denominators, when every scaled value stays
  /// below 2^60 (so sums of two never overflow). Empty otherwise.
  std::vector<std::int64_t> scaled;
  /// The lcm used for `scaled`.
  std::int64_t denominator = 1;
  /// Double approximations, filled in tolerant mode only.
  std::vector<double> approx;
};

NumericCache build_numeric_cache(const PredistanceMatrix& m, const Arithmetic& a);

struct IntKernel {
  using value_type = std::int64_t;
  const std::int64_t* data;
  std::size_t m;

  value_type at(std::size_t i, std::size_t j) const { return data[i * m + j]; }
  const std::int64_t* row(std::size_t i) const { return data + i * m; }
  static bool equal(value_type a, value_type b) { return a == b; }
  static bool less(value_type a, value_type b) { return a < b; }
};

struct RationalKernel {
  using value_type = Rational;
  const Rational* data;
  std::size_t m;

  const Rational& at(std::size_t i, std::size_t j) const { return data[i * m + j]; }
  const Rational* row(std::size_t i) const { return data + i * m; }
  static bool equal(const value_type& a, const value_type& b) { return a == b; }
  static bool less(const value_type& a, const value_type& b) { return a < b; }
};

struct TolerantKernel {
  using value_type = double;
  const double* data;
  std::size_t m;
  double eps;

  value_type at(std::size_t i, std::size_t j) const { return data[i * m + j]; }
  const double* row(std::size_t i) const { return data + i * m; }
  bool equal(value_type a, value_type b) const { return std::fabs(a - b) <= eps; }
  /// Strictly less beyond the tolerance.
  bool less(value_type a, value_type b) const { return a < b - eps; }
};

template <class Fn>
decltype(auto) with_kernel(const DistanceMatrix& d, Fn&& fn) {
  const auto& cache = d.numeric();
  const auto m = d.order();
  if (!d.arithmetic().is_exact())
    return fn(TolerantKernel{cache.approx.data(), m, d.arithmetic().eps});
  if (!cache.scaled.empty()) return fn(IntKernel{cache.scaled.data(), m});
  return fn(RationalKernel{d.predistance().entries().data(), m});
}

}  // namespace metrec::detail
