#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "ripsrecon/invariants.hpp"

using namespace ripsrecon;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

FiniteMetricSpace metric_of(const std::vector<std::vector<double>>& rows) {
  return euclidean_metric(PointCloud::from_rows(rows));
}

Correspondence diagonal(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return make_correspondence(std::move(pairs), n, n);
}

} // namespace

TEST_CASE("hausdorff distance") {
  const auto a = PointCloud::from_rows({{0.0}, {2.0}});
  const auto b = PointCloud::from_rows({{1.0}});
  CHECK(hausdorff_distance(a, a) == 0.0);
  CHECK(hausdorff_distance(PointCloud::from_rows({{0.0}}),
                           PointCloud::from_rows({{1.0}})) == 1.0);
  CHECK(hausdorff_distance(a, b) == 1.0);
  CHECK_THROWS_AS(
      hausdorff_distance(a, PointCloud::from_rows({{0, 0}})),
      std::invalid_argument);

  // metric axioms on random clouds
  RandomStream rng(7, "dH");
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = oracles::random_cloud(rng, 3 + trial % 7, 2, 1.0);
    const auto y = oracles::random_cloud(rng, 3 + (trial + 2) % 7, 2, 1.0);
    const auto z = oracles::random_cloud(rng, 3 + (trial + 4) % 7, 2, 1.0);
    const double xy = hausdorff_distance(x, y);
    CHECK(xy == hausdorff_distance(y, x));
    CHECK(xy <= hausdorff_distance(x, z) + hausdorff_distance(z, y) + 1e-12);
  }
}

TEST_CASE("hausdorff correspondence") {
  SUBCASE("identical clouds contain the diagonal") {
    const auto a = PointCloud::from_rows({{0, 0}, {1, 0}, {2, 0}});
    const auto corr = hausdorff_correspondence(a, a, 0.5);
    for (std::uint32_t i = 0; i < 3; ++i) {
      bool found = false;
      for (auto [x, y] : corr.pairs) found |= (x == i && y == i);
      CHECK(found);
    }
  }
  SUBCASE("two singletons") {
    const auto corr =
        hausdorff_correspondence(PointCloud::from_rows({{0.0}}),
                                 PointCloud::from_rows({{0.3}}), 0.5);
    REQUIRE(corr.pairs.size() == 1);
    CHECK(corr.pairs[0] == std::pair<std::uint32_t, std::uint32_t>{0, 0});
  }
  SUBCASE("uncovered point is a precondition failure") {
    const auto a = PointCloud::from_rows({{0.0}, {5.0}});
    const auto b = PointCloud::from_rows({{0.1}});
    CHECK_THROWS_AS(hausdorff_correspondence(a, b, 0.5), PreconditionError);
  }
  SUBCASE("perturbed grid is fully covered") {
    const auto circle = make_circle(1.0);
    const auto grid = sample_shape(*circle, 300, SampleMode::Grid, 0);
    const auto noisy = perturb(grid.cloud, 0.01, 3);
    const auto corr = hausdorff_correspondence(grid.cloud, noisy, 0.02);
    std::vector<int> hits_a(300, 0), hits_b(300, 0);
    for (auto [i, j] : corr.pairs) {
      ++hits_a[i];
      ++hits_b[j];
    }
    for (int h : hits_a) CHECK(h >= 1);
    for (int h : hits_b) CHECK(h >= 1);
  }
}

TEST_CASE("distortion") {
  SUBCASE("identity correspondence on identical metrics") {
    const auto m = metric_of({{0, 0}, {1, 0}, {0, 2}});
    CHECK(distortion(diagonal(3), m, m) == 0.0);
  }
  SUBCASE("exactly zero on a float-exact isometric copy") {
    // rotation by 90 degrees permutes the squared terms, so distances match
    // bit for bit
    RandomStream rng(13, "iso");
    const auto a = oracles::random_cloud(rng, 12, 2, 1.0);
    std::vector<double> rotated;
    for (std::size_t i = 0; i < a.size(); ++i) {
      rotated.push_back(-a.point(i)[1]);
      rotated.push_back(a.point(i)[0]);
    }
    const auto b = PointCloud(std::move(rotated), 2);
    CHECK(distortion(diagonal(12), euclidean_metric(a), euclidean_metric(b)) ==
          0.0);
  }
  SUBCASE("two 2-point spaces with gaps 1 and 3") {
    const auto a = metric_of({{0.0}, {1.0}});
    const auto b = metric_of({{0.0}, {3.0}});
    CHECK(distortion(diagonal(2), a, b) == 2.0);
  }
  SUBCASE("wedge witnesses the euclidean/intrinsic diameter gap") {
    const auto wedge = make_wedge_w();
    const auto sample = sample_shape(*wedge, 400, SampleMode::Grid, 0);
    const auto euclid = euclidean_metric(sample.cloud);
    const std::size_t n = sample.cloud.size();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v =
            wedge->intrinsic_distance(sample.params[i], sample.params[j]);
        d[i * n + j] = v;
        d[j * n + i] = v;
      }
    const auto intrinsic = FiniteMetricSpace::unchecked(std::move(d), n);
    const double dist = distortion(diagonal(n), euclid, intrinsic);
    CHECK(dist >= 2 * std::numbers::sqrt2 - 2 - 0.02);
    // half the distortion upper-bounds the GH distance from either side
    CHECK(0.5 * dist >= std::numbers::sqrt2 - 1 - 0.01);
  }
}

TEST_CASE("eps-R closeness") {
  SUBCASE("global distortion bound implies closeness at every R") {
    RandomStream rng(17, "closeness");
    const auto a = metric_of({{0, 0}, {0.7, 0}, {0, 1.1}, {2, 2}});
    const auto b = metric_of({{0, 0.05}, {0.8, 0}, {0, 1.0}, {2.1, 1.9}});
    const double dist = distortion(diagonal(4), a, b);
    const auto report =
        check_eps_r_closeness(diagonal(4), a, b, 0.5 * dist, kInf);
    CHECK(report.pass);
    CHECK(report.value <= dist);
  }
  SUBCASE("wedge is (eps/2, 2eps)-close under the diagonal for any eps") {
    const auto wedge = make_wedge_w();
    const auto sample = sample_shape(*wedge, 200, SampleMode::Grid, 0);
    const std::size_t n = sample.cloud.size();
    const auto euclid = euclidean_metric(sample.cloud);
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v =
            wedge->intrinsic_distance(sample.params[i], sample.params[j]);
        d[i * n + j] = v;
        d[j * n + i] = v;
      }
    const auto intrinsic = FiniteMetricSpace::unchecked(std::move(d), n);
    for (double eps : {0.1, 0.4, 1.0}) {
      const auto report = check_eps_r_closeness(diagonal(n), euclid, intrinsic,
                                                0.5 * eps, 2.0 * eps);
      CHECK(report.pass);
    }
    // yet the global distortion stays bounded away from zero
    CHECK(distortion(diagonal(n), euclid, intrinsic) > 0.7);
  }
}

TEST_CASE("large scale distortion") {
  SUBCASE("straight segment has ratio one") {
    const auto segment = make_segment(2.0);
    const auto grid = sample_shape(*segment, 200, SampleMode::Grid, 0);
    const double v =
        large_scale_distortion(*segment, grid.params, grid.cloud, 0.1, 0.2);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("unit circle matches the chord-defect estimate") {
    const auto circle = make_circle(1.0);
    const auto grid = sample_shape(*circle, 2000, SampleMode::Grid, 0);
    const double v =
        large_scale_distortion(*circle, grid.params, grid.cloud, 0.1, 0.1);
    // second-order chord defect eps^2/24 plus the grid floor
    CHECK(v >= 1.0 - 1e-9);
    CHECK(v == doctest::Approx(1.0 + 0.01 / 24.0).epsilon(2e-4));
  }
  SUBCASE("monotone in epsilon and R on the circle") {
    const auto circle = make_circle(1.0);
    const auto grid = sample_shape(*circle, 400, SampleMode::Grid, 0);
    double prev = 0.0;
    for (double eps : {0.1, 0.2, 0.4}) {
      const double v =
          large_scale_distortion(*circle, grid.params, grid.cloud, eps, 0.3);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
    prev = kInf;
    for (double R : {0.1, 0.5, 1.5}) {
      const double v =
          large_scale_distortion(*circle, grid.params, grid.cloud, 0.2, R);
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
  }
  SUBCASE("ninja star stays finite despite the cusps") {
    const auto ninja = make_ninja_star(1.0);
    const auto grid = sample_shape(*ninja, 1000, SampleMode::Grid, 0);
    const double v =
        large_scale_distortion(*ninja, grid.params, grid.cloud, 0.1, 0.5);
    // cusp pairs at intrinsic distance R shortcut across in one hop, so the
    // ratio approaches 2a/(2(1-cos a)) with a = R/2
    const double a = 0.25;
    const double predicted = 2.0 * a / (2.0 * (1.0 - std::cos(a)));
    CHECK(v == doctest::Approx(predicted).epsilon(0.02));
    CHECK(std::isfinite(v));
  }
  SUBCASE("R above the diameter is an error") {
    const auto circle = make_circle(1.0);
    const auto grid = sample_shape(*circle, 50, SampleMode::Grid, 0);
    CHECK_THROWS_AS(
        large_scale_distortion(*circle, grid.params, grid.cloud, 0.5, 10.0),
        PreconditionError);
  }
}

TEST_CASE("minimal enclosing ball") {
  SUBCASE("two points") {
    const auto ball =
        minimal_enclosing_ball(PointCloud::from_rows({{0, 0}, {2, 0}}));
    CHECK(ball.radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ball.center[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ball.center[1] == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("single point") {
    const auto ball = minimal_enclosing_ball(PointCloud::from_rows({{3, 4}}));
    CHECK(ball.radius == 0.0);
  }
  SUBCASE("equilateral triangle") {
    const double s = 1.7;
    const double h = s * std::sqrt(3.0) / 2.0;
    const auto cloud = PointCloud::from_rows({{0, 0}, {s, 0}, {s / 2, h}});
    const auto ball = minimal_enclosing_ball(cloud);
    CHECK(ball.radius == doctest::Approx(s / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(ball.radius ==
          doctest::Approx(oracles::exact_meb_radius_2d(cloud)).epsilon(1e-6));
  }
  SUBCASE("independent oracle on random planar instances") {
    RandomStream rng(27, "meb");
    for (int trial = 0; trial < 200; ++trial) {
      const auto cloud = oracles::random_cloud(rng, 2 + trial % 5, 2, 1.0);
      const auto ball = minimal_enclosing_ball(cloud);
      const double oracle = oracles::exact_meb_radius_2d(cloud);
      CHECK(std::fabs(ball.radius - oracle) < 1e-6);
      // all points enclosed
      for (std::size_t i = 0; i < cloud.size(); ++i)
        CHECK(euclidean_distance(cloud.point(i), ball.center) <=
              ball.radius * (1 + 1e-9) + 1e-12);
    }
  }
  SUBCASE("higher dimensions enclose all points tightly") {
    RandomStream rng(37, "meb-hd");
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t dim = 3 + trial % 3; // 3..5
      const auto cloud = oracles::random_cloud(rng, 4 + trial % 7, dim, 1.0);
      const auto ball = minimal_enclosing_ball(cloud);
      double needed = 0.0;
      for (std::size_t i = 0; i < cloud.size(); ++i)
        needed = std::max(needed,
                          euclidean_distance(cloud.point(i), ball.center));
      CHECK(needed <= ball.radius * (1 + 1e-9) + 1e-12);
      // not grossly larger than the best point-centered ball
      double best_centered = kInf;
      for (std::size_t i = 0; i < cloud.size(); ++i) {
        double worst = 0.0;
        for (std::size_t j = 0; j < cloud.size(); ++j)
          worst = std::max(worst, cloud.distance(i, j));
        best_centered = std::min(best_centered, worst);
      }
      CHECK(ball.radius <= best_centered + 1e-12);
    }
  }
}

TEST_CASE("jung bound") {
  CHECK(jung_bound(2, 0.0, 1.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(jung_bound(1, 0.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  SUBCASE("positive curvature branch against the bisection oracle") {
    const double v = jung_bound(2, 1.0, 0.5);
    CHECK(v == doctest::Approx(oracles::jung_bound_bisection(2, 1.0, 0.5))
                   .epsilon(1e-9));
    // flattening curvature recovers the euclidean value
    CHECK(jung_bound(2, 1e-8, 0.5) ==
          doctest::Approx(std::sqrt(3.0) * 0.5).epsilon(1e-6));
  }
  SUBCASE("negative curvature flattens the same way") {
    CHECK(jung_bound(2, -1e-8, 0.5) ==
          doctest::Approx(std::sqrt(3.0) * 0.5).epsilon(1e-6));
    CHECK(jung_bound(3, -2.0, 0.7) > 0.0);
  }
  CHECK_THROWS_AS(jung_bound(0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(jung_bound(2, 4.0, kPi / 4.0), std::invalid_argument);
}

TEST_CASE("euclidean jung check") {
  SUBCASE("equilateral triangle attains equality") {
    const double s = 1.0;
    const double h = s * std::sqrt(3.0) / 2.0;
    const auto report = check_jung_euclidean(
        PointCloud::from_rows({{0, 0}, {s, 0}, {s / 2, h}}));
    CHECK(report.pass);
    CHECK(report.diam == doctest::Approx(report.jung_kappa0).epsilon(1e-12));
  }
  SUBCASE("two points give diameter twice the radius") {
    const auto report =
        check_jung_euclidean(PointCloud::from_rows({{0, 0}, {1, 1}}));
    CHECK(report.pass);
    CHECK(report.diam == doctest::Approx(2 * report.rad).epsilon(1e-12));
  }
  SUBCASE("randomized sets in dimensions 2-5") {
    RandomStream rng(47, "jung");
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t dim = 2 + trial % 4;
      const std::size_t size = 2 + rng.below(9);
      const auto cloud = oracles::random_cloud(rng, size, dim, 1.0);
      CHECK(check_jung_euclidean(cloud).pass);
    }
  }
}

TEST_CASE("distance field") {
  const auto cloud = PointCloud::from_rows({{0, 0}, {2, 0}, {1, 5}});
  SUBCASE("query on the cloud") {
    const auto field = distance_field(cloud, std::vector<double>{2, 0});
    CHECK(field.r == 0.0);
    CHECK(field.gamma == std::vector<std::uint32_t>{1});
  }
  SUBCASE("equidistant query sees both minimizers") {
    const auto field = distance_field(cloud, std::vector<double>{1, 0});
    CHECK(field.r == doctest::Approx(1.0));
    CHECK(field.gamma == std::vector<std::uint32_t>{0, 1});
  }
  SUBCASE("cusp bisector of the star sees the two near-tangency points") {
    const auto ninja = make_ninja_star(1.0);
    const auto grid = sample_shape(*ninja, 2000, SampleMode::Grid, 0);
    // inside the mouth of the cusp at (1,0), on its bisector
    const auto field = distance_field(grid.cloud, std::vector<double>{0.8, 0});
    REQUIRE(field.gamma.size() == 2);
    const auto a = grid.cloud.point(field.gamma[0]);
    const auto b = grid.cloud.point(field.gamma[1]);
    CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-12));
    CHECK(a[1] == doctest::Approx(-b[1]).epsilon(1e-12));
  }
}

TEST_CASE("gradient norm") {
  SUBCASE("unique nearest point gives norm one") {
    const auto cloud = PointCloud::from_rows({{0, 0}, {3, 0}});
    CHECK(gradient_norm(cloud, std::vector<double>{1, 0}) ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(gradient_norm(cloud, std::vector<double>{0, 0}),
                    std::invalid_argument);
  }
  SUBCASE("bisector of two points: |y| / sqrt(1 + y^2) for points at +-1") {
    const auto cloud = PointCloud::from_rows({{-1, 0}, {1, 0}});
    for (double y : {0.3, 1.0, 2.5}) {
      const double expected = y / std::sqrt(1.0 + y * y);
      CHECK(gradient_norm(cloud, std::vector<double>{0, y}) ==
            doctest::Approx(expected).epsilon(1e-9));
    }
  }
  SUBCASE("surrounded center is critical") {
    const double h = std::sqrt(3.0) / 2.0;
    const auto cloud =
        PointCloud::from_rows({{1, 0}, {-0.5, h}, {-0.5, -h}});
    CHECK(gradient_norm(cloud, std::vector<double>{0, 0}) ==
          doctest::Approx(0.0).epsilon(1e-9));
  }
  SUBCASE("norm always lies in [0,1]") {
    RandomStream rng(57, "grad");
    const auto cloud = oracles::random_cloud(rng, 12, 2, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
      const std::vector<double> z{rng.uniform(-2, 2), rng.uniform(-2, 2)};
      if (distance_field(cloud, z).r <= 0.0) continue;
      const double g = gradient_norm(cloud, z);
      CHECK(g >= 0.0);
      CHECK(g <= 1.0);
      if (distance_field(cloud, z).gamma.size() == 1)
        CHECK(g == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("critical function estimate") {
  SUBCASE("circle levels inside the convexity zone estimate chi near one") {
    const auto circle = make_circle(1.0);
    const auto grid = sample_shape(*circle, 2000, SampleMode::Grid, 0);
    const std::vector<double> levels{0.2, 0.05};
    const auto table =
        critical_function_estimate(grid.cloud, levels, 300, 3, 0.5);
    for (const auto& row : table.rows) {
      REQUIRE(row.chi.has_value());
      CHECK(*row.chi == doctest::Approx(1.0).epsilon(0.05));
    }
    CHECK_FALSE(table.r_mu_upper.has_value());
  }
  SUBCASE("ninja star cusp collapses the estimate") {
    const auto ninja = make_ninja_star(1.0);
    const auto grid = sample_shape(*ninja, 6000, SampleMode::Grid, 0);
    const std::vector<double> levels{0.05};
    const auto table =
        critical_function_estimate(grid.cloud, levels, 400, 3, 0.5);
    REQUIRE(table.rows[0].chi.has_value());
    // closed form at the cusp mouth: sqrt(2d + d^2) / (1 + d); the sampled
    // cloud can dip a little below it (missing arc between samples widens
    // the worst pair), never above
    const double d = levels[0];
    const double expected = std::sqrt(2 * d + d * d) / (1 + d);
    CHECK(*table.rows[0].chi <= expected * 1.02);
    CHECK(*table.rows[0].chi >= expected * 0.75);
    CHECK(table.r_mu_upper.has_value());
  }
  SUBCASE("zero probes flags an empty row") {
    const auto cloud = PointCloud::from_rows({{0, 0}, {1, 0}});
    const std::vector<double> levels{0.5};
    const auto table = critical_function_estimate(cloud, levels, 0, 1, 0.5);
    CHECK_FALSE(table.rows[0].chi.has_value());
    CHECK(table.rows[0].probes_landed == 0);
  }
  CHECK_THROWS_AS(critical_function_estimate(
                      PointCloud::from_rows({{0, 0}}),
                      std::vector<double>{-1.0}, 10, 1, 0.5),
                  std::invalid_argument);
}
