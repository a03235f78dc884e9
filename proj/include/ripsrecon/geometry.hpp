#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ripsrecon/errors.hpp"

namespace ripsrecon {

/// Relative float tolerance used wherever a theorem asserts a non-strict
/// inequality: tau = 1e-9 * scale.
inline constexpr double kRelTol = 1e-9;

/// Finite list of points in R^N with a shared dimension. Immutable after
/// construction; all coordinates are finite.
class PointCloud {
public:
  /// Takes row-major coordinates, n*dim entries. Throws std::invalid_argument
  /// on an empty cloud, a size mismatch or a non-finite coordinate.
  PointCloud(std::vector<double> coords, std::size_t dim);

  static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<const double> data() const { return coords_; }

  double distance(std::size_t i, std::size_t j) const;

  bool operator==(const PointCloud& other) const = default;

private:
  std::vector<double> coords_;
  std::size_t dim_;
};

double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Symmetric distance matrix on n indexed points. The diagonal is zero, the
/// matrix is exactly symmetric, and the triangle inequality holds within
/// tau = 1e-9 * (max entry).
class FiniteMetricSpace {
public:
  /// Validates the metric axioms. The triangle inequality scan is O(n^3) and
  /// runs exhaustively for n <= 512; above that a deterministic sample of
  /// triples is checked. Throws std::invalid_argument on violation.
  static FiniteMetricSpace checked(std::vector<double> d, std::size_t n);

  /// For matrices that are metrics by construction (Euclidean distances,
  /// shortest-path closures, oracle restrictions). Only cheap shape checks.
  static FiniteMetricSpace unchecked(std::vector<double> d, std::size_t n);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return d_[i * n_ + j];
  }
  std::span<const double> data() const { return d_; }
  double max_entry() const { return max_entry_; }

  /// tau = 1e-9 * max entry.
  double tolerance() const { return kRelTol * max_entry_; }

private:
  FiniteMetricSpace(std::vector<double> d, std::size_t n);

  std::vector<double> d_;
  std::size_t n_;
  double max_entry_;
};

/// Throws std::invalid_argument if the metric axioms fail. `exhaustive`
/// forces the full O(n^3) triangle scan regardless of size.
void check_metric_invariants(const FiniteMetricSpace& m, bool exhaustive);

/// d[i][j] = Euclidean distance between points i and j.
FiniteMetricSpace euclidean_metric(const PointCloud& cloud);

/// The sampling cap: min{pi/(4*sqrt(kappa)), rho} for kappa > 0, else rho.
/// Requires rho > 0.
double delta_parameter(double rho, double kappa);

} // namespace ripsrecon
