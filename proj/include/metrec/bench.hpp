#pragma once

#include <cstddef>
#include <vector>

namespace metrec {

struct BenchSample {
  std::size_t order;
  double seconds;  // best of the repetitions
  bool accepted;
};

struct BenchReport {
  std::vector<BenchSample> samples;
  /// Least-squares slope of log(seconds) against log(order); NaN with fewer
  /// than two sizes.
  double slope;
};

/// Times validate + classify + the edge-count hypercube recognizer on the
/// unit-weight Q_n matrix for each size. Sizes must be powers of two in
/// [2, 1024]; throws RangeError otherwise.
BenchReport bench(const std::vector<std::size_t>& sizes, unsigned repetitions = 3);

double loglog_slope(const std::vector<BenchSample>& samples);

}  // namespace metrec
