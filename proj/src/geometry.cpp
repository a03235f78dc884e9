#include "ripsrecon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ripsrecon {

PointCloud::PointCloud(std::vector<double> coords, std::size_t dim)
    : coords_(std::move(coords)), dim_(dim) {
  if (dim_ == 0) throw std::invalid_argument("point dimension must be positive");
  if (coords_.empty()) throw std::invalid_argument("point cloud is empty");
  if (coords_.size() % dim_ != 0)
    throw std::invalid_argument("coordinate count is not a multiple of dim");
  for (double c : coords_)
    if (!std::isfinite(c))
      throw std::invalid_argument("non-finite coordinate in point cloud");
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("point cloud is empty");
  const std::size_t dim = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * dim);
  for (const auto& row : rows) {
    if (row.size() != dim)
      throw std::invalid_argument("points have mismatched dimensions");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return PointCloud(std::move(flat), dim);
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

double PointCloud::distance(std::size_t i, std::size_t j) const {
  return euclidean_distance(point(i), point(j));
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<double> d, std::size_t n)
    : d_(std::move(d)), n_(n) {
  max_entry_ = d_.empty() ? 0.0 : *std::max_element(d_.begin(), d_.end());
}

FiniteMetricSpace FiniteMetricSpace::unchecked(std::vector<double> d,
                                               std::size_t n) {
  if (n == 0) throw std::invalid_argument("metric space must be nonempty");
  if (d.size() != n * n)
    throw std::invalid_argument("distance matrix size mismatch");
  return FiniteMetricSpace(std::move(d), n);
}

FiniteMetricSpace FiniteMetricSpace::checked(std::vector<double> d,
                                             std::size_t n) {
  FiniteMetricSpace m = unchecked(std::move(d), n);
  check_metric_invariants(m, n <= 512);
  return m;
}

void check_metric_invariants(const FiniteMetricSpace& m, bool exhaustive) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0.0)
      throw std::invalid_argument("metric has a nonzero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dij = m(i, j);
      if (!(dij >= 0.0) || !std::isfinite(dij))
        throw std::invalid_argument("metric entry is negative or non-finite");
      if (dij != m(j, i))
        throw std::invalid_argument("metric is not exactly symmetric");
    }
  }
  const double tau = m.tolerance();
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (m(i, k) > m(i, j) + m(j, k) + tau)
      throw std::invalid_argument("triangle inequality violated beyond tau");
  };
  if (exhaustive || n <= 512) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) check_triple(i, j, k);
  } else {
    // deterministic stride sample, about 2^20 triples
    const std::size_t stride = std::max<std::size_t>(1, n * n * n / (1u << 20));
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = t % stride; k < n; k += stride, ++t)
          check_triple(i, j, k);
  }
}

FiniteMetricSpace euclidean_metric(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = cloud.distance(i, j);
      d[i * n + j] = v;
      d[j * n + i] = v;
    }
  return FiniteMetricSpace::unchecked(std::move(d), n);
}

double delta_parameter(double rho, double kappa) {
  if (!(rho > 0.0))
    throw std::invalid_argument("convexity radius must be positive");
  if (kappa > 0.0)
    return std::min(std::numbers::pi / (4.0 * std::sqrt(kappa)), rho);
  return rho;
}

} // namespace ripsrecon
