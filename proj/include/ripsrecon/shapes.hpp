#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ripsrecon/geometry.hpp"

namespace ripsrecon {

/// A synthetic shape: a closed or open curve in the plane with an arclength
/// parametrization, an exact intrinsic-distance oracle, an exact
/// point-to-shape distance, and curvature metadata (kappa, convexity radius,
/// and the derived sampling cap).
///
/// Every shape is parametrized by arclength on [0, total_length), so the
/// intrinsic oracle reduces to arithmetic on parameters.
class Shape {
public:
  virtual ~Shape() = default;

  const std::string& id() const { return id_; }
  std::size_t ambient_dim() const { return 2; }
  double total_length() const { return length_; }
  double kappa() const { return kappa_; }
  double convexity_radius() const { return rho_; }
  /// Equals delta_parameter(convexity_radius(), kappa()).
  double delta_cap() const { return delta_parameter(rho_, kappa_); }
  /// Homology ranks of the shape over the two-element field, dims 0..1.
  const std::vector<std::size_t>& betti_profile() const { return betti_; }
  /// Whether the parametrization wraps around (closed curve).
  bool is_closed() const { return closed_; }
  /// Every shape point lies within this Euclidean distance of an n-point
  /// grid sample: L/(2n) for closed curves, L/n for open ones.
  double grid_covering_radius(std::size_t n) const {
    return closed_ ? length_ / (2.0 * n) : length_ / n;
  }

  /// Point at arclength t (t taken mod total_length).
  virtual std::vector<double> sample_at(double t) const = 0;

  /// Exact induced length distance between the points at parameters s and t.
  virtual double intrinsic_distance(double s, double t) const = 0;

  /// Exact Euclidean distance from an ambient point to the shape.
  virtual double distance_to(std::span<const double> p) const = 0;

protected:
  Shape(std::string id, double length, double kappa, double rho,
        std::vector<std::size_t> betti, bool closed)
      : id_(std::move(id)), length_(length), kappa_(kappa), rho_(rho),
        betti_(std::move(betti)), closed_(closed) {}

  double wrap(double t) const;

private:
  std::string id_;
  double length_;
  double kappa_;
  double rho_;
  std::vector<std::size_t> betti_;
  bool closed_;
};

/// Round circle of radius r centered at the origin. kappa = 1/r^2 (the
/// smallest admissible upper curvature bound for a circle of this length),
/// rho = pi*r/2, delta cap = pi*r/4.
std::unique_ptr<Shape> make_circle(double r);

/// The set {y = |x|, -1 <= x <= 1}: two unit-slope segments meeting at the
/// origin. Isometric to a segment of length 2*sqrt(2) in the intrinsic
/// metric; its Euclidean and intrinsic diameters (2 vs 2*sqrt(2)) witness a
/// Gromov-Hausdorff gap.
std::unique_ptr<Shape> make_wedge_w();

/// Two circles of radius r, tangent at the origin, centered at (-r,0) and
/// (r,0). Intrinsic distances are graph geodesics over the two loops through
/// the wedge point. rho is taken as r*pi/2 (balls of radius < loop/4 around
/// the wedge point are convex trees).
std::unique_ptr<Shape> make_figure_eight(double r);

/// Four quarter-circle arcs of radius r centered at (+-r, +-r), meeting
/// tangentially in cusps at (+-r, 0) and (0, +-r). Intrinsically a circle of
/// length 2*pi*r; the embedding has vanishing mu-reach at the cusps.
std::unique_ptr<Shape> make_ninja_star(double r);

/// Straight segment from (0,0) to (length,0); chords coincide with arcs, so
/// every path-metric quantity is exact on it.
std::unique_ptr<Shape> make_segment(double length);

/// Lookup by id ("circle", "wedge", "figure_eight", "ninja_star", "segment")
/// with a parameter map (keys "r" / "length"). Throws std::invalid_argument
/// for unknown ids or missing parameters.
std::unique_ptr<Shape> make_shape(const std::string& id,
                                  const std::map<std::string, double>& params);

enum class SampleMode { Grid, Uniform };

struct ShapeSample {
  PointCloud cloud;
  std::vector<double> params;
};

/// Grid mode places params at {k*L/n}, guaranteeing Hausdorff distance
/// <= L/(2n) to the shape for closed curves (<= L/n for open ones). Uniform
/// mode draws n i.i.d. arclength parameters from the seeded "sampling"
/// stream. n >= 1.
ShapeSample sample_shape(const Shape& shape, std::size_t n, SampleMode mode,
                         std::uint64_t seed);

/// Displaces each point by an independent vector of norm < eta drawn from
/// the seeded "noise" stream, so the Hausdorff distance between input and
/// output is < eta. eta >= 0.
PointCloud perturb(const PointCloud& cloud, double eta, std::uint64_t seed);

} // namespace ripsrecon
