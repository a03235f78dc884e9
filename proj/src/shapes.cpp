#include "ripsrecon/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ripsrecon/random.hpp"

namespace ripsrecon {

namespace {

constexpr double kPi = std::numbers::pi;

double point_segment_distance(std::span<const double> p, double ax, double ay,
                              double bx, double by) {
  const double vx = bx - ax, vy = by - ay;
  const double wx = p[0] - ax, wy = p[1] - ay;
  const double vv = vx * vx + vy * vy;
  double t = vv > 0.0 ? (wx * vx + wy * vy) / vv : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = wx - t * vx, dy = wy - t * vy;
  return std::sqrt(dx * dx + dy * dy);
}

/// Circular distance between arclength parameters on a loop of length L.
double loop_distance(double s, double t, double L) {
  double d = std::fabs(s - t);
  d = std::fmod(d, L);
  return std::min(d, L - d);
}

class Circle final : public Shape {
public:
  explicit Circle(double r)
      : Shape("circle", 2.0 * kPi * r, 1.0 / (r * r), kPi * r / 2.0, {1, 1},
              true),
        r_(r) {}

  std::vector<double> sample_at(double t) const override {
    const double a = wrap(t) / r_;
    return {r_ * std::cos(a), r_ * std::sin(a)};
  }

  double intrinsic_distance(double s, double t) const override {
    return loop_distance(wrap(s), wrap(t), total_length());
  }

  double distance_to(std::span<const double> p) const override {
    return std::fabs(std::hypot(p[0], p[1]) - r_);
  }

private:
  double r_;
};

class Segment final : public Shape {
public:
  explicit Segment(double length)
      : Shape("segment", length, 0.0, length, {1, 0}, false) {}

  std::vector<double> sample_at(double t) const override {
    return {wrap(t), 0.0};
  }

  double intrinsic_distance(double s, double t) const override {
    return std::fabs(wrap(s) - wrap(t));
  }

  double distance_to(std::span<const double> p) const override {
    return point_segment_distance(p, 0.0, 0.0, total_length(), 0.0);
  }
};

/// {y = |x|, -1 <= x <= 1}, parametrized from (-1,1) through the corner to
/// (1,1). Intrinsically a segment of length 2*sqrt(2).
class WedgeW final : public Shape {
public:
  WedgeW()
      : Shape("wedge", 2.0 * std::numbers::sqrt2, 0.0,
              2.0 * std::numbers::sqrt2, {1, 0}, false) {}

  std::vector<double> sample_at(double t) const override {
    const double u = wrap(t);
    const double half = std::numbers::sqrt2;
    if (u < half) {
      const double s = u / half; // 0 at (-1,1), 1 at the corner
      return {-1.0 + s, 1.0 - s};
    }
    const double s = (u - half) / half;
    return {s, s};
  }

  double intrinsic_distance(double s, double t) const override {
    return std::fabs(wrap(s) - wrap(t));
  }

  double distance_to(std::span<const double> p) const override {
    return std::min(point_segment_distance(p, -1.0, 1.0, 0.0, 0.0),
                    point_segment_distance(p, 0.0, 0.0, 1.0, 1.0));
  }
};

class FigureEight final : public Shape {
public:
  explicit FigureEight(double r)
      : Shape("figure_eight", 4.0 * kPi * r, 1.0 / (r * r), kPi * r / 2.0,
              {1, 2}, true),
        r_(r), loop_(2.0 * kPi * r) {}

  std::vector<double> sample_at(double t) const override {
    const double u = wrap(t);
    if (u < loop_) {
      const double a = u / r_;
      return {-r_ + r_ * std::cos(a), r_ * std::sin(a)};
    }
    const double a = (u - loop_) / r_;
    return {r_ - r_ * std::cos(a), r_ * std::sin(a)};
  }

  double intrinsic_distance(double s, double t) const override {
    double u = wrap(s), v = wrap(t);
    const bool ua = u < loop_, va = v < loop_;
    if (!ua) u -= loop_;
    if (!va) v -= loop_;
    if (ua == va) return loop_distance(u, v, loop_);
    // through the wedge point at parameter 0 of each loop
    return loop_distance(u, 0.0, loop_) + loop_distance(v, 0.0, loop_);
  }

  double distance_to(std::span<const double> p) const override {
    const double da = std::fabs(std::hypot(p[0] + r_, p[1]) - r_);
    const double db = std::fabs(std::hypot(p[0] - r_, p[1]) - r_);
    return std::min(da, db);
  }

private:
  double r_;
  double loop_;
};

/// Four quarter arcs of radius r centered at (+-r, +-r). Arc k lives in
/// quadrant k and runs clockwise around its own center from angle -pi/2-k*pi/2
/// to -pi-k*pi/2, so the curve is traversed counterclockwise with cusps at
/// (r,0), (0,r), (-r,0), (0,-r).
class NinjaStar final : public Shape {
public:
  explicit NinjaStar(double r)
      : Shape("ninja_star", 2.0 * kPi * r, 1.0 / (r * r), kPi * r / 2.0,
              {1, 1}, true),
        r_(r), arc_(kPi * r / 2.0) {}

  std::vector<double> sample_at(double t) const override {
    const double u = wrap(t);
    const int k = std::min(3, static_cast<int>(u / arc_));
    const double local = u - k * arc_;
    const double theta = -kPi / 2.0 - local / r_ + k * kPi / 2.0;
    const auto [cx, cy] = center(k);
    return {cx + r_ * std::cos(theta), cy + r_ * std::sin(theta)};
  }

  double intrinsic_distance(double s, double t) const override {
    return loop_distance(wrap(s), wrap(t), total_length());
  }

  double distance_to(std::span<const double> p) const override {
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4; ++k) {
      const auto [cx, cy] = center(k);
      const double dx = p[0] - cx, dy = p[1] - cy;
      const double rho = std::hypot(dx, dy);
      // angular interval of arc k around its center: [-pi - k*pi/2, -pi/2 - k*pi/2]
      double phi = std::atan2(dy, dx);
      const double lo = -kPi + k * kPi / 2.0;
      const double hi = -kPi / 2.0 + k * kPi / 2.0;
      double shifted = phi;
      while (shifted > hi + kPi) shifted -= 2.0 * kPi;
      while (shifted < lo - kPi) shifted += 2.0 * kPi;
      if (shifted >= lo && shifted <= hi) {
        best = std::min(best, std::fabs(rho - r_));
      } else {
        for (double end : {lo, hi}) {
          const double ex = cx + r_ * std::cos(end);
          const double ey = cy + r_ * std::sin(end);
          best = std::min(best, std::hypot(p[0] - ex, p[1] - ey));
        }
      }
    }
    return best;
  }

private:
  std::pair<double, double> center(int k) const {
    switch (k) {
      case 0: return {r_, r_};
      case 1: return {-r_, r_};
      case 2: return {-r_, -r_};
      default: return {r_, -r_};
    }
  }

  double r_;
  double arc_;
};

double param_or(const std::map<std::string, double>& params,
                const std::string& key, double fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (!(it->second > 0.0))
    throw std::invalid_argument("shape parameter '" + key +
                                "' must be positive");
  return it->second;
}

} // namespace

double Shape::wrap(double t) const {
  double u = std::fmod(t, length_);
  if (u < 0.0) u += length_;
  return u;
}

std::unique_ptr<Shape> make_circle(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("circle radius must be positive");
  return std::make_unique<Circle>(r);
}

std::unique_ptr<Shape> make_wedge_w() { return std::make_unique<WedgeW>(); }

std::unique_ptr<Shape> make_figure_eight(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  return std::make_unique<FigureEight>(r);
}

std::unique_ptr<Shape> make_ninja_star(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  return std::make_unique<NinjaStar>(r);
}

std::unique_ptr<Shape> make_segment(double length) {
  if (!(length > 0.0)) throw std::invalid_argument("length must be positive");
  return std::make_unique<Segment>(length);
}

std::unique_ptr<Shape> make_shape(const std::string& id,
                                  const std::map<std::string, double>& params) {
  if (id == "circle") return make_circle(param_or(params, "r", 1.0));
  if (id == "wedge") return make_wedge_w();
  if (id == "figure_eight")
    return make_figure_eight(param_or(params, "r", 1.0));
  if (id == "ninja_star") return make_ninja_star(param_or(params, "r", 1.0));
  if (id == "segment") return make_segment(param_or(params, "length", 1.0));
  throw std::invalid_argument("unknown shape id '" + id + "'");
}

ShapeSample sample_shape(const Shape& shape, std::size_t n, SampleMode mode,
                         std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  std::vector<double> params(n);
  if (mode == SampleMode::Grid) {
    const double h = shape.total_length() / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) params[k] = k * h;
  } else {
    RandomStream rng(seed, "sampling");
    for (std::size_t k = 0; k < n; ++k)
      params[k] = rng.uniform(0.0, shape.total_length());
  }
  std::vector<double> coords;
  coords.reserve(n * shape.ambient_dim());
  for (double t : params) {
    const auto p = shape.sample_at(t);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return {PointCloud(std::move(coords), shape.ambient_dim()),
          std::move(params)};
}

PointCloud perturb(const PointCloud& cloud, double eta, std::uint64_t seed) {
  if (eta < 0.0) throw std::invalid_argument("noise bound must be >= 0");
  std::vector<double> coords(cloud.data().begin(), cloud.data().end());
  if (eta == 0.0) return PointCloud(std::move(coords), cloud.dim());
  RandomStream rng(seed, "noise");
  std::vector<double> disp(cloud.dim());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    rng.fill_in_ball(eta, disp);
    for (std::size_t k = 0; k < cloud.dim(); ++k)
      coords[i * cloud.dim() + k] += disp[k];
  }
  return PointCloud(std::move(coords), cloud.dim());
}

} // namespace ripsrecon
