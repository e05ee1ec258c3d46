#include "metrec/matrix.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>

#include "metrec/errors.hpp"
#include "metrec/parallel.hpp"
#include "numeric.hpp"

namespace metrec {

namespace detail {

NumericCache build_numeric_cache(const PredistanceMatrix& m, const Arithmetic& a) {
  NumericCache cache;
  const auto entries = m.entries();
  if (!a.is_exact()) {
    cache.approx.reserve(entries.size());
    for (const auto& e : entries) cache.approx.push_back(e.get_d());
    return cache;
  }
  const mpz_class limit = mpz_class(1) << 60;
  mpz_class lcm = 1;
  for (const auto& e : entries) {
    if (mpz_cmp_ui(e.get_den_mpz_t(), 1) == 0) continue;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den_mpz_t());
    if (lcm >= limit) return cache;
  }
  cache.scaled.reserve(entries.size());
  cache.denominator = lcm.get_si();
  if (lcm == 1) {
    for (const auto& e : entries) {
      if (!mpz_fits_slong_p(e.get_num_mpz_t()) || mpz_cmpabs(e.get_num_mpz_t(), limit.get_mpz_t()) >= 0) {
        cache.scaled.clear();
        return cache;
      }
      cache.scaled.push_back(mpz_get_si(e.get_num_mpz_t()));
    }
    return cache;
  }
  mpz_class scaled;
  for (const auto& e : entries) {
    mpz_divexact(scaled.get_mpz_t(), lcm.get_mpz_t(), e.get_den_mpz_t());
    mpz_mul(scaled.get_mpz_t(), scaled.get_mpz_t(), e.get_num_mpz_t());
    if (mpz_cmpabs(scaled.get_mpz_t(), limit.get_mpz_t()) >= 0) {
      cache.scaled.clear();
      return cache;
    }
    cache.scaled.push_back(scaled.get_si());
  }
  return cache;
}

}  // namespace detail

Arithmetic Arithmetic::tolerant(double eps) {
  if (!(eps > 0)) throw std::invalid_argument("tolerance must be positive");
  return {Kind::tolerant, eps};
}

// ---- PredistanceMatrix -------------------------------------------------------

PredistanceMatrix::PredistanceMatrix(std::size_t order, std::vector<Rational> entries)
    : order_(order), entries_(std::move(entries)) {
  // Callers may build entries as Rational(p, q) without reducing them.
  for (auto& e : entries_)
    if (mpz_cmp_ui(e.get_den_mpz_t(), 1) != 0) e.canonicalize();
  if (order_ < 2) throw ShapeError("matrix order must be at least 2", 0, 0);
  if (entries_.size() != order_ * order_)
    throw ShapeError("matrix is not square", 0, 0);
  for (std::size_t i = 0; i < order_; ++i)
    if ((*this)(i, i) != 0)
      throw ShapeError("diagonal entry (" + std::to_string(i + 1) + "," +
                           std::to_string(i + 1) + ") is not zero",
                       i, i);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j) {
      auto where = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if ((*this)(i, j) != (*this)(j, i))
        throw ShapeError("matrix is not symmetric at " + where, i, j);
      if ((*this)(i, j) <= 0)
        throw ShapeError("off-diagonal entry " + where + " is not positive", i, j);
    }
}

PredistanceMatrix PredistanceMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const auto m = rows.size();
  std::vector<Rational> entries;
  entries.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != m)
      throw ShapeError("row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(m),
                       i, 0);
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return PredistanceMatrix(m, std::move(entries));
}

// ---- DistanceMatrix ----------------------------------------------------------

DistanceMatrix::DistanceMatrix(PredistanceMatrix m, Arithmetic a,
                               std::shared_ptr<const detail::NumericCache> numeric)
    : matrix_(std::move(m)), arithmetic_(a), numeric_(std::move(numeric)) {
  const auto entries = matrix_.entries();
  max_entry_ = *std::max_element(entries.begin(), entries.end());
}

namespace {

struct RowViolation {
  std::size_t k;
  std::size_t j;
};

template <class Kernel>
std::optional<std::array<std::size_t, 3>> find_triangle_violation(const Kernel& kernel) {
  using value_type = typename Kernel::value_type;
  const auto m = kernel.m;
  std::vector<std::optional<RowViolation>> first(m);
  parallel_for(0, m, [&](std::size_t lo, std::size_t hi) {
    value_type sum{};
    for (std::size_t i = lo; i < hi; ++i) {
      const auto* di = kernel.row(i);
      for (std::size_t k = 0; k < m && !first[i]; ++k) {
        if (k == i) continue;
        const auto* dk = kernel.row(k);
        for (std::size_t j = i + 1; j < m; ++j) {
          sum = di[k] + dk[j];
          if (kernel.less(sum, di[j])) {
            first[i] = RowViolation{k, j};
            break;
          }
        }
      }
    }
  });
  for (std::size_t i = 0; i < m; ++i)
    if (first[i]) return std::array{i, first[i]->k, first[i]->j};
  return std::nullopt;
}

}  // namespace

DistanceMatrix validate(PredistanceMatrix p, Arithmetic arithmetic) {
  auto cache = std::make_shared<const detail::NumericCache>(
      detail::build_numeric_cache(p, arithmetic));
  DistanceMatrix d(std::move(p), arithmetic, std::move(cache));
  auto violation = detail::with_kernel(d, [](const auto& k) { return find_triangle_violation(k); });
  if (violation) {
    auto [i, k, j] = *violation;
    throw TriangleViolation(i, k, j, d(i, j), d(i, k), d(k, j));
  }
  return d;
}

// ---- tower / classify --------------------------------------------------------

std::vector<Rational> TowerMatrix::row(std::size_t i, std::size_t j) const {
  std::vector<Rational> out;
  out.reserve(order());
  for (std::size_t l = 0; l < order(); ++l) out.push_back(value(i, j, l));
  return out;
}

TowerMatrix tower(const DistanceMatrix& d) { return TowerMatrix(d); }

EntryClassification::EntryClassification(std::size_t order,
                                         std::vector<std::uint32_t> multiplicity)
    : order_(order), multiplicity_(std::move(multiplicity)) {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (indecomposable(i, j)) ++count_;
}

std::vector<Edge> EntryClassification::indecomposable_pairs() const {
  std::vector<Edge> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (indecomposable(i, j)) out.emplace_back(i, j);
  return out;
}

namespace {

template <class Kernel>
std::vector<std::uint32_t> row_minimum_multiplicities(const Kernel& kernel) {
  using value_type = typename Kernel::value_type;
  const auto m = kernel.m;
  std::vector<std::uint32_t> mult(m * m, 0);
  parallel_for(0, m, [&](std::size_t lo, std::size_t hi) {
    value_type sum{}, best{};
    for (std::size_t i = lo; i < hi; ++i) {
      const auto* di = kernel.row(i);
      mult[i * m + i] = 1;
      for (std::size_t j = i + 1; j < m; ++j) {
        // Tower row (i,j) is D(i,.) + D(.,j) = D(i,.) + D(j,.) by symmetry.
        const auto* dj = kernel.row(j);
        std::uint32_t count = 0;
        if constexpr (std::is_same_v<Kernel, detail::IntKernel>) {
          // Exact and validated: the minimum is D(i,j) itself.
          const auto target = di[j];
          for (std::size_t l = 0; l < m; ++l) count += (di[l] + dj[l] == target);
        } else {
          best = di[0] + dj[0];
          for (std::size_t l = 1; l < m; ++l) {
            sum = di[l] + dj[l];
            if (sum < best) best = sum;
          }
          for (std::size_t l = 0; l < m; ++l) {
            sum = di[l] + dj[l];
            if (kernel.equal(sum, best)) ++count;
          }
        }
        mult[i * m + j] = count;
      }
    }
  });
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) mult[i * m + j] = mult[j * m + i];
  return mult;
}

}  // namespace

EntryClassification classify(const DistanceMatrix& d) {
  auto mult = detail::with_kernel(d, [](const auto& k) { return row_minimum_multiplicities(k); });
  return EntryClassification(d.order(), std::move(mult));
}

Graph skeleton(const EntryClassification& c) {
  Graph g(c.order());
  for (auto [i, j] : c.indecomposable_pairs()) g.add_edge(i, j);
  return g;
}

LayerPartition layer_partition(const DistanceMatrix&, const EntryClassification& c,
                               std::size_t x) {
  return layer_partition(skeleton(c), x);
}

// ---- tree predicates ---------------------------------------------------------

namespace {

template <class Kernel>
std::optional<std::array<std::size_t, 4>> find_four_point_violation(const Kernel& kernel) {
  using value_type = typename Kernel::value_type;
  const auto m = kernel.m;
  std::array<value_type, 3> s{};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t h = k + 1; h < m; ++h) {
          s[0] = kernel.at(i, j) + kernel.at(k, h);
          s[1] = kernel.at(i, k) + kernel.at(j, h);
          s[2] = kernel.at(i, h) + kernel.at(j, k);
          value_type top = s[0];
          for (const auto& v : s)
            if (top < v) top = v;
          int attained = 0;
          for (const auto& v : s) attained += kernel.equal(v, top) ? 1 : 0;
          if (attained < 2) return std::array{i, j, k, h};
        }
  return std::nullopt;
}

template <class Kernel>
std::vector<std::size_t> median_candidates(const Kernel& kernel, std::size_t a, std::size_t b,
                                           std::size_t c) {
  using value_type = typename Kernel::value_type;
  std::vector<std::size_t> out;
  value_type sum{};
  auto between = [&](std::size_t x, std::size_t y, std::size_t z) {
    sum = kernel.at(x, y) + kernel.at(y, z);
    return kernel.equal(kernel.at(x, z), sum);
  };
  for (std::size_t y = 0; y < kernel.m; ++y)
    if (between(a, y, b) && between(a, y, c) && between(b, y, c)) out.push_back(y);
  return out;
}

}  // namespace

Check<FourPointViolation> four_point_condition(const DistanceMatrix& d) {
  auto quad = detail::with_kernel(d, [](const auto& k) { return find_four_point_violation(k); });
  if (!quad) return {};
  auto [i, j, k, h] = *quad;
  return {FourPointViolation{*quad, {d(i, j) + d(k, h), d(i, k) + d(j, h), d(i, h) + d(j, k)}}};
}

std::vector<std::size_t> medians(const DistanceMatrix& d, std::size_t a, std::size_t b,
                                 std::size_t c) {
  return detail::with_kernel(d, [&](const auto& k) { return median_candidates(k, a, b, c); });
}

Check<MedianViolation> is_median(const DistanceMatrix& d) {
  const auto m = d.order();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        auto found = medians(d, a, b, c);
        if (found.size() != 1) return {MedianViolation{{a, b, c}, std::move(found)}};
      }
  return {};
}

TreePathAnalysis indecomposable_paths(const DistanceMatrix&, const EntryClassification& c) {
  return analyze_tree_paths(skeleton(c));
}

}  // namespace metrec
