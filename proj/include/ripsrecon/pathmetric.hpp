#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ripsrecon/geometry.hpp"
#include "ripsrecon/shapes.hpp"

namespace ripsrecon {

/// Epsilon-neighborhood graph: (i,j) is an edge iff the Euclidean distance
/// is strictly below epsilon. Stored as CSR adjacency with chord lengths as
/// weights; no self-loops.
struct EpsilonGraph {
  std::size_t n = 0;
  double epsilon = 0.0;
  std::vector<std::uint32_t> offsets;   // n+1
  std::vector<std::uint32_t> neighbors; // 2*edge_count
  std::vector<double> weights;
  std::size_t edge_count = 0;
};

/// epsilon > 0.
EpsilonGraph build_epsilon_graph(const PointCloud& cloud, double epsilon);

/// The epsilon-path metric: d[i][j] = length of the shortest chain between
/// i and j whose consecutive Euclidean gaps are strictly below epsilon.
/// All-pairs via per-source Dijkstra runs (binary heap, ties broken toward
/// the smaller vertex index; sources run concurrently, rows written
/// independently). Throws DisconnectedGraph when the epsilon-graph is not
/// connected.
FiniteMetricSpace path_metric(const PointCloud& cloud, double epsilon);
FiniteMetricSpace path_metric(const EpsilonGraph& graph);

/// One verified inequality: `value` is the worst (most violating) slack seen,
/// `pass` says it stayed within `tolerance`, and `witness_pair` identifies
/// where the worst case occurred.
struct CheckReport {
  std::string quantity;
  double value = 0.0;
  std::array<std::size_t, 2> witness_pair{0, 0};
  double tolerance = 0.0;
  bool pass = true;
};

/// Verifies d^{eps2} <= d^{eps1} + tau entrywise for 0 < eps1 < eps2.
/// value = max over pairs of d^{eps2} - d^{eps1}.
CheckReport check_monotonicity(const PointCloud& cloud, double eps1,
                               double eps2);

struct ComparisonReport {
  CheckReport lower; // ||s_i - s_j|| <= d^eps
  CheckReport upper; // d^eps <= (d^L + xi*eps) / (1 - xi)
  bool pass() const { return lower.pass && upper.pass; }
};

/// Two-sided comparison of the sample path metric with the shape's intrinsic
/// oracle. Point i of the sample is paired with shape point at ref_params[i];
/// requires ||x_i - s_i|| < xi*eps/2 for every i (PreconditionError
/// otherwise) and xi in (0,1).
ComparisonReport check_comparison(const Shape& shape,
                                  std::span<const double> ref_params,
                                  const PointCloud& sample, double xi,
                                  double epsilon);

/// Stability of the path metric under Hausdorff perturbation: verifies
/// d^{(2+xi)eps}_ref(p', q') <= (1+xi) * d^eps_S(p, q) on pairs with
/// d^eps_S >= eps, and <= d^eps_S + xi*eps on closer pairs (where the factor
/// form is unattainable: endpoint displacements alone can exceed it).
/// p' = ref[pairing[p]]; requires d_H(ref, sample) < xi*eps/2 and every
/// paired displacement below the same bound. value = max ratio of the
/// left side to its applicable bound.
CheckReport check_stability(const PointCloud& reference,
                            const PointCloud& sample,
                            std::span<const std::size_t> pairing, double xi,
                            double epsilon);

struct ConvergenceRow {
  double epsilon = 0.0;
  std::optional<double> sup_error; // sup |d^eps - d^L|; empty if disconnected
  std::string error;
};

/// For each epsilon: grid-sample the shape at n points and report the sup
/// over all pairs of |d^eps - d^L| against the intrinsic oracle.
/// Disconnection at some epsilon is recorded in its row; the sweep continues.
std::vector<ConvergenceRow> convergence_sweep(const Shape& shape,
                                              std::size_t n,
                                              std::span<const double> eps_list);

} // namespace ripsrecon
