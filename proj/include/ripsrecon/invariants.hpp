#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ripsrecon/geometry.hpp"
#include "ripsrecon/pathmetric.hpp"
#include "ripsrecon/shapes.hpp"

namespace ripsrecon {

/// Index-pair relation between two finite metric spaces in which every index
/// of either side appears at least once.
struct Correspondence {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
};

/// Validates the covering conditions; PreconditionError if some index of
/// either side is never matched.
Correspondence make_correspondence(
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs,
    std::size_t size_a, std::size_t size_b);

/// Max of the two directed sup-min Euclidean distances. Same ambient
/// dimension required.
double hausdorff_distance(const PointCloud& a, const PointCloud& b);

/// All pairs with ||a_i - b_j|| < threshold (strict). The covering
/// conditions are implied by d_H(a,b) < threshold; PreconditionError if they
/// fail anyway.
Correspondence hausdorff_correspondence(const PointCloud& a,
                                        const PointCloud& b, double threshold);

/// sup over pairs of pairs of |dA - dB|. Half of this value is an upper
/// bound for the Gromov-Hausdorff distance.
double distortion(const Correspondence& corr, const FiniteMetricSpace& da,
                  const FiniteMetricSpace& db);

/// Checks |dA - dB| <= 2*eps for every pair of correspondence entries with
/// min{dA, dB} <= R. value = max gap among qualifying pairs; witness_pair
/// holds the two correspondence-entry indices of the worst gap. R may be
/// infinity.
CheckReport check_eps_r_closeness(const Correspondence& corr,
                                  const FiniteMetricSpace& da,
                                  const FiniteMetricSpace& db, double eps,
                                  double R);

/// Large-scale distortion of a shape measured on a dense reference sample:
/// max over reference pairs with intrinsic distance >= R of
/// intrinsic / d^eps. Throws DisconnectedGraph if the epsilon-graph on the
/// reference is disconnected and PreconditionError when no pair reaches R.
double large_scale_distortion(const Shape& shape,
                              std::span<const double> ref_params,
                              const PointCloud& ref_cloud, double epsilon,
                              double R);

struct Ball {
  std::vector<double> center;
  double radius = 0.0;
};

/// Exact smallest enclosing Euclidean ball (move-to-front Welzl recursion
/// with deterministic point order).
Ball minimal_enclosing_ball(const PointCloud& points);

/// Diameter lower bound of the generalized Jung inequality for a set of at
/// most n+1 points with the given circumradius:
///   kappa > 0: (2/sqrt(k)) asin( sqrt((n+1)/(2n)) sin(sqrt(k) rad) )
///   kappa = 0: 2 sqrt((n+1)/(2n)) rad
///   kappa < 0: (2/sqrt(-k)) asinh( sqrt((n+1)/(2n)) sinh(sqrt(-k) rad) )
/// Requires n >= 1 and, for kappa > 0, rad < pi/(2 sqrt(kappa)).
double jung_bound(int n, double kappa, double rad);

struct JungReport {
  double rad = 0.0;
  double diam = 0.0;
  double jung_kappa0 = 0.0;   // bound with n = |A|-1, kappa = 0
  double four_thirds = 0.0;   // (4/3) * rad
  bool pass = false;
};

/// Computes rad via the enclosing ball and diam by brute force, then checks
/// diam >= jung_bound(|A|-1, 0, rad) - tau and diam >= (4/3) rad - tau.
/// Requires |A| >= 2.
JungReport check_jung_euclidean(const PointCloud& points);

struct DistanceField {
  double r = 0.0;                    // min distance from z to the cloud
  std::vector<std::uint32_t> gamma;  // indices within r + gamma_tol
  double gamma_tol = 0.0;
};

/// R(z) and the near-minimizer set Gamma(z) with tolerance
/// gamma = max(1e-9, 1e-6 * R).
DistanceField distance_field(const PointCloud& cloud, std::span<const double> z);

/// Norm of the generalized gradient (z - Theta)/R, where Theta is the point
/// of the convex hull of Gamma closest to z. Always in [0,1]; equals 1 when
/// Gamma is a single point. Requires R > 0 (z not on the cloud).
double gradient_norm(const PointCloud& cloud, std::span<const double> z);

/// The gradient vector itself (needed for level-set walking).
std::vector<double> gradient_vector(const PointCloud& cloud,
                                    std::span<const double> z);

struct ChiRow {
  double d = 0.0;
  std::optional<double> chi;   // empty = no probe landed on the level set
  std::size_t probes_landed = 0;
};

struct ChiTable {
  std::vector<ChiRow> rows;
  double mu = 0.0;
  /// Smallest listed d whose chi estimate drops below mu. Because the chi
  /// estimate only overshoots the true infimum, this certifies that the
  /// mu-reach is at most this value (an upper bound).
  std::optional<double> r_mu_upper;
};

/// Upper estimate of the critical function chi(d) = inf of the gradient norm
/// over the d-level set of the distance function, for each entry of
/// d_values. Two probe families feed the minimum: seeded offset samples
/// walked along the gradient onto the level set (with a bisector refinement
/// of each landed probe), and a deterministic sweep of the equidistant
/// points of every cloud pair closer than 2d. The sweep is what reaches the
/// near-critical loci: they sit on exact-tie sets that random probes miss at
/// the Gamma tolerance. n_probe = 0 disables both and flags empty rows.
/// Deterministic in (seed).
ChiTable critical_function_estimate(const PointCloud& cloud,
                                    std::span<const double> d_values,
                                    std::size_t n_probe, std::uint64_t seed,
                                    double mu);

} // namespace ripsrecon
