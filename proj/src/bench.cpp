#include "metrec/bench.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <limits>

#include "metrec/errors.hpp"
#include "metrec/matrix.hpp"
#include "metrec/recognizers.hpp"

namespace metrec {

namespace {

PredistanceMatrix unit_hypercube_matrix(std::size_t m) {
  std::vector<Rational> entries(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) entries[i * m + j] = std::popcount(i ^ j);
  return PredistanceMatrix(m, std::move(entries));
}

}  // namespace

double loglog_slope(const std::vector<BenchSample>& samples) {
  if (samples.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& s : samples) {
    double x = std::log(static_cast<double>(s.order));
    double y = std::log(std::max(s.seconds, 1e-9));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(samples.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BenchReport bench(const std::vector<std::size_t>& sizes, unsigned repetitions) {
  for (auto m : sizes)
    if (m < 2 || m > 1024 || !std::has_single_bit(m))
      throw RangeError("bench sizes must be powers of two in [2, 1024], got " + std::to_string(m));
  if (repetitions == 0) repetitions = 1;

  BenchReport report;
  for (auto m : sizes) {
    auto input = unit_hypercube_matrix(m);
    BenchSample sample{m, std::numeric_limits<double>::infinity(), false};
    for (unsigned rep = 0; rep < repetitions; ++rep) {
      auto copy = input;
      auto start = std::chrono::steady_clock::now();
      auto d = validate(std::move(copy));
      auto verdict = recognize_hypercube_by_count(d);
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      sample.seconds = std::min(sample.seconds, elapsed.count());
      sample.accepted = verdict.accepted;
    }
    report.samples.push_back(sample);
  }
  report.slope = loglog_slope(report.samples);
  return report;
}

}  // namespace metrec
