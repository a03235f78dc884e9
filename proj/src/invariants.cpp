#include "ripsrecon/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ripsrecon/random.hpp"

namespace ripsrecon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Solves the k x k system a*x = b in place by Gaussian elimination with
/// partial pivoting. Returns false when a pivot falls below the tolerance.
bool solve_small(std::vector<double>& a, std::vector<double>& b, int k,
                 double pivot_tol) {
  for (int col = 0; col < k; ++col) {
    int best = col;
    for (int r = col + 1; r < k; ++r)
      if (std::fabs(a[r * k + col]) > std::fabs(a[best * k + col])) best = r;
    if (std::fabs(a[best * k + col]) <= pivot_tol) return false;
    if (best != col) {
      for (int c = 0; c < k; ++c) std::swap(a[col * k + c], a[best * k + c]);
      std::swap(b[col], b[best]);
    }
    for (int r = col + 1; r < k; ++r) {
      const double f = a[r * k + col] / a[col * k + col];
      for (int c = col; c < k; ++c) a[r * k + c] -= f * a[col * k + c];
      b[r] -= f * b[col];
    }
  }
  for (int col = k - 1; col >= 0; --col) {
    double s = b[col];
    for (int c = col + 1; c < k; ++c) s -= a[col * k + c] * b[c];
    b[col] = s / a[col * k + col];
  }
  return true;
}

} // namespace

Correspondence make_correspondence(
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs,
    std::size_t size_a, std::size_t size_b) {
  std::vector<bool> seen_a(size_a, false), seen_b(size_b, false);
  for (auto [i, j] : pairs) {
    if (i >= size_a || j >= size_b)
      throw std::invalid_argument("correspondence index out of range");
    seen_a[i] = true;
    seen_b[j] = true;
  }
  for (std::size_t i = 0; i < size_a; ++i)
    if (!seen_a[i])
      throw PreconditionError("correspondence misses index " +
                              std::to_string(i) + " on the first side");
  for (std::size_t j = 0; j < size_b; ++j)
    if (!seen_b[j])
      throw PreconditionError("correspondence misses index " +
                              std::to_string(j) + " on the second side");
  return {std::move(pairs), size_a, size_b};
}

double hausdorff_distance(const PointCloud& a, const PointCloud& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("clouds have different ambient dimensions");
  double worst = 0.0;
  auto directed = [&](const PointCloud& from, const PointCloud& to) {
    for (std::size_t i = 0; i < from.size(); ++i) {
      double best = kInf;
      for (std::size_t j = 0; j < to.size(); ++j) {
        best = std::min(best, euclidean_distance(from.point(i), to.point(j)));
        if (best == 0.0) break;
      }
      worst = std::max(worst, best);
    }
  };
  directed(a, b);
  directed(b, a);
  return worst;
}

Correspondence hausdorff_correspondence(const PointCloud& a,
                                        const PointCloud& b,
                                        double threshold) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("clouds have different ambient dimensions");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (euclidean_distance(a.point(i), b.point(j)) < threshold)
        pairs.emplace_back(static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j));
  return make_correspondence(std::move(pairs), a.size(), b.size());
}

double distortion(const Correspondence& corr, const FiniteMetricSpace& da,
                  const FiniteMetricSpace& db) {
  double worst = 0.0;
  for (std::size_t p = 0; p < corr.pairs.size(); ++p) {
    const auto [i1, j1] = corr.pairs[p];
    if (i1 >= da.size() || j1 >= db.size())
      throw std::invalid_argument("correspondence index out of range");
    for (std::size_t q = p; q < corr.pairs.size(); ++q) {
      const auto [i2, j2] = corr.pairs[q];
      worst = std::max(worst, std::fabs(da(i1, i2) - db(j1, j2)));
    }
  }
  return worst;
}

CheckReport check_eps_r_closeness(const Correspondence& corr,
                                  const FiniteMetricSpace& da,
                                  const FiniteMetricSpace& db, double eps,
                                  double R) {
  CheckReport report;
  report.quantity = "eps_R_closeness";
  report.tolerance =
      2.0 * eps + kRelTol * std::max(da.max_entry(), db.max_entry());
  report.value = 0.0;
  for (std::size_t p = 0; p < corr.pairs.size(); ++p) {
    const auto [i1, j1] = corr.pairs[p];
    for (std::size_t q = p; q < corr.pairs.size(); ++q) {
      const auto [i2, j2] = corr.pairs[q];
      const double dxa = da(i1, i2);
      const double dxb = db(j1, j2);
      if (std::min(dxa, dxb) > R) continue;
      const double gap = std::fabs(dxa - dxb);
      if (gap > report.value) {
        report.value = gap;
        report.witness_pair = {p, q};
      }
    }
  }
  report.pass = report.value <= report.tolerance;
  return report;
}

double large_scale_distortion(const Shape& shape,
                              std::span<const double> ref_params,
                              const PointCloud& ref_cloud, double epsilon,
                              double R) {
  if (!(R > 0.0)) throw std::invalid_argument("R must be positive");
  if (ref_params.size() != ref_cloud.size())
    throw std::invalid_argument("parameter/cloud size mismatch");
  const FiniteMetricSpace deps = path_metric(ref_cloud, epsilon);
  double worst = -kInf;
  const std::size_t n = ref_cloud.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dl = shape.intrinsic_distance(ref_params[i], ref_params[j]);
      if (dl < R) continue;
      worst = std::max(worst, dl / deps(i, j));
    }
  if (worst == -kInf)
    throw PreconditionError(
        "no reference pair at intrinsic distance >= R; R exceeds the diameter");
  return worst;
}

namespace {

struct WelzlBall {
  std::vector<double> center;
  double radius2 = -1.0; // negative = empty
};

WelzlBall ball_from_boundary(const std::vector<const double*>& boundary,
                             std::size_t dim) {
  WelzlBall ball;
  ball.center.assign(dim, 0.0);
  const std::size_t k = boundary.size();
  if (k == 0) return ball;
  if (k == 1) {
    ball.center.assign(boundary[0], boundary[0] + dim);
    ball.radius2 = 0.0;
    return ball;
  }
  // circumsphere of k affinely independent points: center = p0 + sum l_i v_i
  // with  (v_i . v_j) l_j = |v_i|^2 / 2
  const int m = static_cast<int>(k - 1);
  std::vector<double> v(m * dim);
  double scale = 0.0;
  for (int i = 0; i < m; ++i)
    for (std::size_t c = 0; c < dim; ++c) {
      v[i * dim + c] = boundary[i + 1][c] - boundary[0][c];
      scale = std::max(scale, std::fabs(v[i * dim + c]));
    }
  std::vector<double> g(m * m), rhs(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < dim; ++c) s += v[i * dim + c] * v[j * dim + c];
      g[i * m + j] = s;
    }
    rhs[i] = g[i * m + i] / 2.0;
  }
  if (!solve_small(g, rhs, m, 1e-12 * scale * scale)) {
    // affinely dependent boundary; the sphere through a maximal independent
    // prefix already passes through the dependent point
    std::vector<const double*> sub(boundary.begin(), boundary.end() - 1);
    return ball_from_boundary(sub, dim);
  }
  for (std::size_t c = 0; c < dim; ++c) {
    double offset = 0.0;
    for (int i = 0; i < m; ++i) offset += rhs[i] * v[i * dim + c];
    ball.center[c] = boundary[0][c] + offset;
  }
  double r2 = 0.0;
  for (std::size_t c = 0; c < dim; ++c) {
    const double d = ball.center[c] - boundary[0][c];
    r2 += d * d;
  }
  ball.radius2 = r2;
  return ball;
}

bool ball_contains(const WelzlBall& ball, const double* p, std::size_t dim) {
  if (ball.radius2 < 0.0) return false;
  double d2 = 0.0;
  for (std::size_t c = 0; c < dim; ++c) {
    const double d = p[c] - ball.center[c];
    d2 += d * d;
  }
  return d2 <= ball.radius2 * (1.0 + 1e-10) + 1e-30;
}

WelzlBall welzl_mtf(std::vector<const double*>& pts, std::size_t n,
                    std::vector<const double*>& boundary, std::size_t dim) {
  if (n == 0 || boundary.size() == dim + 1)
    return ball_from_boundary(boundary, dim);
  const double* p = pts[n - 1];
  WelzlBall ball = welzl_mtf(pts, n - 1, boundary, dim);
  if (ball_contains(ball, p, dim)) return ball;
  boundary.push_back(p);
  ball = welzl_mtf(pts, n - 1, boundary, dim);
  boundary.pop_back();
  // move-to-front: points that defined a ball come early in later passes
  std::rotate(pts.begin(), pts.begin() + (n - 1), pts.begin() + n);
  return ball;
}

} // namespace

Ball minimal_enclosing_ball(const PointCloud& points) {
  const std::size_t dim = points.dim();
  std::vector<const double*> pts(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    pts[i] = points.point(i).data();
  std::vector<const double*> boundary;
  const WelzlBall ball = welzl_mtf(pts, pts.size(), boundary, dim);
  return {ball.center, ball.radius2 > 0.0 ? std::sqrt(ball.radius2) : 0.0};
}

double jung_bound(int n, double kappa, double rad) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (rad < 0.0) throw std::invalid_argument("rad must be >= 0");
  const double factor = std::sqrt((n + 1.0) / (2.0 * n));
  if (kappa > 0.0) {
    const double sk = std::sqrt(kappa);
    if (!(rad < std::numbers::pi / (2.0 * sk)))
      throw std::invalid_argument(
          "kappa > 0 requires rad < pi / (2 sqrt(kappa))");
    return (2.0 / sk) * std::asin(factor * std::sin(sk * rad));
  }
  if (kappa < 0.0) {
    const double sk = std::sqrt(-kappa);
    return (2.0 / sk) * std::asinh(factor * std::sinh(sk * rad));
  }
  return 2.0 * factor * rad;
}

JungReport check_jung_euclidean(const PointCloud& points) {
  if (points.size() < 2)
    throw std::invalid_argument("need at least two points");
  JungReport report;
  report.rad = minimal_enclosing_ball(points).radius;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      report.diam = std::max(report.diam, points.distance(i, j));
  report.jung_kappa0 =
      jung_bound(static_cast<int>(points.size()) - 1, 0.0, report.rad);
  report.four_thirds = (4.0 / 3.0) * report.rad;
  const double tau = kRelTol * std::max(report.diam, report.rad);
  report.pass = report.diam >= report.jung_kappa0 - tau &&
                report.diam >= report.four_thirds - tau;
  return report;
}

DistanceField distance_field(const PointCloud& cloud,
                             std::span<const double> z) {
  if (z.size() != cloud.dim())
    throw std::invalid_argument("query point dimension mismatch");
  DistanceField field;
  field.r = kInf;
  for (std::size_t i = 0; i < cloud.size(); ++i)
    field.r = std::min(field.r, euclidean_distance(cloud.point(i), z));
  field.gamma_tol = std::max(1e-9, 1e-6 * field.r);
  for (std::size_t i = 0; i < cloud.size(); ++i)
    if (euclidean_distance(cloud.point(i), z) <= field.r + field.gamma_tol)
      field.gamma.push_back(static_cast<std::uint32_t>(i));
  return field;
}

namespace {

/// Closest point to z in the convex hull of the given points. Exact subset
/// enumeration (Caratheodory) for small inputs in low dimension; Gilbert's
/// iterative projection otherwise, run to a 1e-10 relative threshold.
std::vector<double> closest_point_in_hull(
    std::span<const double> z, const std::vector<const double*>& pts,
    std::size_t dim) {
  const std::size_t m = pts.size();
  if (m == 1) return std::vector<double>(pts[0], pts[0] + dim);

  if (m <= 8 && dim <= 3) {
    double best_d2 = kInf;
    std::vector<double> best(z.begin(), z.end());
    std::vector<int> idx;
    std::vector<double> g, rhs;
    const std::size_t max_size = std::min(m, dim + 1);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      idx.clear();
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) idx.push_back(static_cast<int>(i));
      if (idx.size() > max_size) continue;
      const int k = static_cast<int>(idx.size()) - 1;
      std::vector<double> lambda(k, 0.0);
      if (k > 0) {
        g.assign(k * k, 0.0);
        rhs.assign(k, 0.0);
        double scale = 0.0;
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < dim; ++c)
              s += (pts[idx[i + 1]][c] - pts[idx[0]][c]) *
                   (pts[idx[j + 1]][c] - pts[idx[0]][c]);
            g[i * k + j] = s;
            scale = std::max(scale, std::fabs(s));
          }
        for (int i = 0; i < k; ++i) {
          double s = 0.0;
          for (std::size_t c = 0; c < dim; ++c)
            s += (pts[idx[i + 1]][c] - pts[idx[0]][c]) * (z[c] - pts[idx[0]][c]);
          rhs[i] = s;
        }
        if (!solve_small(g, rhs, k, 1e-12 * std::max(scale, 1e-30))) continue;
        lambda.assign(rhs.begin(), rhs.end());
      }
      double lambda0 = 1.0;
      bool feasible = true;
      for (double l : lambda) {
        lambda0 -= l;
        if (l < -1e-12) feasible = false;
      }
      if (lambda0 < -1e-12) feasible = false;
      if (!feasible) continue;
      double d2 = 0.0;
      std::vector<double> point(dim, 0.0);
      for (std::size_t c = 0; c < dim; ++c) {
        double p = lambda0 * pts[idx[0]][c];
        for (int i = 0; i < k; ++i) p += lambda[i] * pts[idx[i + 1]][c];
        point[c] = p;
        const double dc = z[c] - p;
        d2 += dc * dc;
      }
      if (d2 < best_d2) {
        best_d2 = d2;
        best = point;
      }
    }
    return best;
  }

  // Gilbert's algorithm
  std::size_t start = 0;
  double start_d = kInf;
  for (std::size_t i = 0; i < m; ++i) {
    const double d = euclidean_distance({pts[i], dim}, z);
    if (d < start_d) {
      start_d = d;
      start = i;
    }
  }
  std::vector<double> y(pts[start], pts[start] + dim);
  for (int iter = 0; iter < 10000; ++iter) {
    // support point minimizing <y - z, p>
    std::size_t best = 0;
    double best_dot = kInf;
    for (std::size_t i = 0; i < m; ++i) {
      double dot = 0.0;
      for (std::size_t c = 0; c < dim; ++c)
        dot += (y[c] - z[c]) * pts[i][c];
      if (dot < best_dot) {
        best_dot = dot;
        best = i;
      }
    }
    const double* p = pts[best];
    double gap = 0.0, scale = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      gap += (y[c] - z[c]) * (y[c] - p[c]);
      scale = std::max(scale, std::fabs(y[c] - z[c]));
    }
    if (gap <= 1e-10 * std::max(scale * scale, 1e-30)) break;
    // exact line search on the segment [y, p]
    double num = 0.0, den = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      const double dir = p[c] - y[c];
      num += (z[c] - y[c]) * dir;
      den += dir * dir;
    }
    const double t = den > 0.0 ? std::clamp(num / den, 0.0, 1.0) : 0.0;
    for (std::size_t c = 0; c < dim; ++c) y[c] += t * (p[c] - y[c]);
    if (t == 0.0) break;
  }
  return y;
}

std::vector<double> gradient_impl(const PointCloud& cloud,
                                  std::span<const double> z,
                                  const DistanceField& field) {
  if (!(field.r > 0.0))
    throw std::invalid_argument("gradient undefined on the cloud (R = 0)");
  std::vector<const double*> pts;
  pts.reserve(field.gamma.size());
  for (std::uint32_t i : field.gamma) pts.push_back(cloud.point(i).data());
  const std::vector<double> theta = closest_point_in_hull(z, pts, cloud.dim());
  std::vector<double> grad(cloud.dim());
  for (std::size_t c = 0; c < cloud.dim(); ++c)
    grad[c] = (z[c] - theta[c]) / field.r;
  return grad;
}

double norm_of(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

} // namespace

std::vector<double> gradient_vector(const PointCloud& cloud,
                                    std::span<const double> z) {
  return gradient_impl(cloud, z, distance_field(cloud, z));
}

double gradient_norm(const PointCloud& cloud, std::span<const double> z) {
  const double n = norm_of(gradient_vector(cloud, z));
  return std::min(n, 1.0);
}

namespace {

/// Two distinct nearest cloud indices to z (by distance, ties by index).
std::pair<std::size_t, std::size_t> two_nearest(const PointCloud& cloud,
                                                std::span<const double> z) {
  std::size_t a = 0, b = 1;
  double da = kInf, db = kInf;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const double d = euclidean_distance(cloud.point(i), z);
    if (d < da) {
      b = a;
      db = da;
      a = i;
      da = d;
    } else if (d < db) {
      b = i;
      db = d;
    }
  }
  return {a, b};
}

} // namespace

namespace {

/// Deterministic sweep over equidistant-pair candidates on one level set.
/// For every cloud pair closer than 2d, the two points at distance d on the
/// pair's bisector are the loci where near-critical gradients live; random
/// probes never land there because the near-minimizer tolerance is tight.
/// Each candidate is kept only if it really lies on the level set.
void equidistant_pair_candidates(const PointCloud& cloud, double d,
                                 double& chi, std::size_t& landed) {
  const std::size_t n = cloud.size();
  const std::size_t dim = cloud.dim();
  std::vector<double> z(dim);
  // A candidate only informs the estimate when its generating pair is the
  // near-minimizer set: anything strictly closer evicts the pair from Gamma
  // and the observed gradient degenerates to a lone nearest point.
  const double gamma_skip = std::max(1e-9, 1e-6 * d);
  auto locally_blocked = [&](std::span<const double> probe, std::size_t i,
                             std::size_t j) {
    // interposing points sit near the generating pair for curve-like clouds;
    // checking those first rejects almost every candidate cheaply
    const double cutoff = d - gamma_skip;
    for (std::size_t off = 0; off <= 16; ++off)
      for (std::size_t base : {i, j}) {
        if (base + off < n &&
            euclidean_distance(cloud.point(base + off), probe) < cutoff)
          return true;
        if (base >= off &&
            euclidean_distance(cloud.point(base - off), probe) < cutoff)
          return true;
      }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = cloud.distance(i, j);
      if (!(gap > 0.0) || gap >= 2.0 * d) continue;
      const double t = std::sqrt(d * d - 0.25 * gap * gap);
      auto pa = cloud.point(i);
      auto pb = cloud.point(j);
      // unit direction orthogonal to the pair, via Gram-Schmidt on the first
      // non-parallel axis (both signs probed)
      std::vector<double> w(dim), u(dim, 0.0);
      for (std::size_t c = 0; c < dim; ++c) w[c] = (pb[c] - pa[c]) / gap;
      for (std::size_t axis = 0; axis < dim; ++axis) {
        std::fill(u.begin(), u.end(), 0.0);
        u[axis] = 1.0;
        double dot = w[axis];
        for (std::size_t c = 0; c < dim; ++c) u[c] -= dot * w[c];
        const double un = norm_of(u);
        if (un > 1e-6) {
          for (std::size_t c = 0; c < dim; ++c) u[c] /= un;
          break;
        }
      }
      for (double sign : {1.0, -1.0}) {
        for (std::size_t c = 0; c < dim; ++c)
          z[c] = 0.5 * (pa[c] + pb[c]) + sign * t * u[c];
        if (locally_blocked(z, i, j)) continue;
        const DistanceField field = distance_field(cloud, z);
        if (!(field.r >= d - gamma_skip)) continue;
        ++landed;
        chi = std::min(
            chi, std::min(norm_of(gradient_impl(cloud, z, field)), 1.0));
      }
    }
}

} // namespace

ChiTable critical_function_estimate(const PointCloud& cloud,
                                    std::span<const double> d_values,
                                    std::size_t n_probe, std::uint64_t seed,
                                    double mu) {
  for (double d : d_values)
    if (!(d > 0.0)) throw std::invalid_argument("level values must be positive");
  const std::size_t dim = cloud.dim();
  RandomStream rng(seed, "probing");
  ChiTable table;
  table.mu = mu;

  std::vector<double> z(dim), dir(dim);
  for (double d : d_values) {
    ChiRow row;
    row.d = d;
    double chi = kInf;
    if (n_probe > 0)
      equidistant_pair_candidates(cloud, d, chi, row.probes_landed);
    for (std::size_t probe = 0; probe < n_probe; ++probe) {
      // offset sample: random cloud point pushed distance d in a random
      // direction, then walked along the gradient onto the level set
      const std::size_t pick = rng.below(cloud.size());
      do {
        rng.fill_in_ball(1.0, dir);
      } while (norm_of(dir) < 1e-3);
      const double dn = norm_of(dir);
      for (std::size_t c = 0; c < dim; ++c)
        z[c] = cloud.point(pick)[c] + d * dir[c] / dn;

      bool landed = false;
      for (int iter = 0; iter < 50; ++iter) {
        const DistanceField field = distance_field(cloud, z);
        if (std::fabs(field.r - d) <= 2e-2 * d) {
          landed = true;
          break;
        }
        if (!(field.r > 0.0)) break;
        const auto grad = gradient_impl(cloud, z, field);
        const double gn = norm_of(grad);
        if (gn < 1e-9) break; // stuck at a critical point off the level set
        for (std::size_t c = 0; c < dim; ++c)
          z[c] += (d - field.r) * grad[c] / gn;
      }
      if (!landed) continue;
      ++row.probes_landed;
      chi = std::min(chi, gradient_norm(cloud, z));

      // Refinement: project onto the bisector of the two nearest points at
      // level d. Near-critical gradients live on equidistant loci, which
      // random probes miss at the exact-tie tolerance.
      const auto [ia, ib] = two_nearest(cloud, z);
      auto pa = cloud.point(ia);
      auto pb = cloud.point(ib);
      const double w = euclidean_distance(pa, pb);
      if (w > 0.0 && w < 2.0 * d) {
        double t2 = d * d - 0.25 * w * w;
        std::vector<double> mid(dim), perp(dim);
        for (std::size_t c = 0; c < dim; ++c) mid[c] = 0.5 * (pa[c] + pb[c]);
        // component of (z - mid) orthogonal to (pb - pa)
        double dot = 0.0, ww = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
          dot += (z[c] - mid[c]) * (pb[c] - pa[c]);
          ww += (pb[c] - pa[c]) * (pb[c] - pa[c]);
        }
        for (std::size_t c = 0; c < dim; ++c)
          perp[c] = (z[c] - mid[c]) - dot / ww * (pb[c] - pa[c]);
        const double pn = norm_of(perp);
        if (pn > 1e-12) {
          const double t = std::sqrt(std::max(0.0, t2));
          std::vector<double> zr(dim);
          for (std::size_t c = 0; c < dim; ++c)
            zr[c] = mid[c] + t * perp[c] / pn;
          const DistanceField rf = distance_field(cloud, zr);
          if (rf.r > 0.0 && std::fabs(rf.r - d) <= 2e-2 * d)
            chi = std::min(chi, gradient_norm(cloud, zr));
        }
      }
    }
    if (row.probes_landed > 0) row.chi = chi;
    table.rows.push_back(std::move(row));
  }

  for (const ChiRow& row : table.rows)
    if (row.chi && *row.chi < mu)
      if (!table.r_mu_upper || row.d < *table.r_mu_upper)
        table.r_mu_upper = row.d;
  return table;
}

} // namespace ripsrecon
