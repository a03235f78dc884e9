// Exercises the public C surface through the shared library.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "ripsrecon.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  rr_string_free(s);
  return out;
}

struct CloudHandle {
  rr_cloud* p = nullptr;
  ~CloudHandle() { rr_cloud_free(p); }
};
struct MetricHandle {
  rr_metric* p = nullptr;
  ~MetricHandle() { rr_metric_free(p); }
};
struct ComplexHandle {
  rr_complex* p = nullptr;
  ~ComplexHandle() { rr_complex_free(p); }
};

} // namespace

TEST_CASE("cloud creation and errors") {
  const double coords[] = {0, 0, 3, 4};
  CloudHandle cloud;
  REQUIRE(rr_cloud_create(coords, 2, 2, &cloud.p) == RR_OK);
  CHECK(rr_cloud_size(cloud.p) == 2);
  CHECK(rr_cloud_dim(cloud.p) == 2);
  double buffer[4] = {};
  REQUIRE(rr_cloud_coords(cloud.p, buffer) == RR_OK);
  CHECK(buffer[2] == 3.0);

  rr_cloud* bad = nullptr;
  const double nan_coords[] = {std::nan(""), 0};
  CHECK(rr_cloud_create(nan_coords, 1, 2, &bad) == RR_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(rr_last_error()) > 0);
  CHECK(rr_cloud_create(nullptr, 1, 2, &bad) == RR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("metrics through the C surface") {
  const double coords[] = {0, 0, 3, 4};
  CloudHandle cloud;
  REQUIRE(rr_cloud_create(coords, 2, 2, &cloud.p) == RR_OK);
  MetricHandle euclid;
  REQUIRE(rr_metric_euclidean(cloud.p, &euclid.p) == RR_OK);
  CHECK(rr_metric_get(euclid.p, 0, 1) == doctest::Approx(5.0));

  MetricHandle path;
  CHECK(rr_metric_path(cloud.p, 1.0, &path.p) == RR_ERR_DISCONNECTED);
  REQUIRE(rr_metric_path(cloud.p, 6.0, &path.p) == RR_OK);
  CHECK(rr_metric_get(path.p, 0, 1) == doctest::Approx(5.0));
}

TEST_CASE("shape sampling, rips, betti end to end") {
  CloudHandle cloud;
  std::vector<double> params(64);
  REQUIRE(rr_shape_sample("{\"id\":\"circle\",\"r\":1.0}", 64, "grid", 7,
                          &cloud.p, params.data()) == RR_OK);
  CHECK(params[1] == doctest::Approx(2 * 3.14159265358979 / 64));

  CloudHandle noisy;
  REQUIRE(rr_cloud_perturb(cloud.p, 0.002, 9, &noisy.p) == RR_OK);
  double dh = 0.0;
  REQUIRE(rr_hausdorff_distance(cloud.p, noisy.p, &dh) == RR_OK);
  CHECK(dh < 0.002);

  MetricHandle path;
  REQUIRE(rr_metric_path(noisy.p, 0.5, &path.p) == RR_OK);
  ComplexHandle cx;
  REQUIRE(rr_rips_complex(path.p, 0.7, 2, &cx.p) == RR_OK);
  CHECK(rr_complex_count(cx.p, 0) == 64);
  size_t components = 0;
  REQUIRE(rr_complex_components(cx.p, &components) == RR_OK);
  CHECK(components == 1);

  char* json = nullptr;
  REQUIRE(rr_betti_numbers(cx.p, 1, &json) == RR_OK);
  const auto betti = nlohmann::json::parse(take(json));
  CHECK(betti["betti"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("intrinsic metric and distortion bounds") {
  CloudHandle cloud;
  std::vector<double> params(100);
  REQUIRE(rr_shape_sample("{\"id\":\"wedge\"}", 100, "grid", 0, &cloud.p,
                          params.data()) == RR_OK);
  MetricHandle euclid, intrinsic;
  REQUIRE(rr_metric_euclidean(cloud.p, &euclid.p) == RR_OK);
  REQUIRE(rr_metric_intrinsic("{\"id\":\"wedge\"}", params.data(), 100,
                              &intrinsic.p) == RR_OK);
  char* json = nullptr;
  REQUIRE(rr_distortion(euclid.p, intrinsic.p, nullptr, 0, &json) == RR_OK);
  const auto doc = nlohmann::json::parse(take(json));
  CHECK(doc["gh_lower_bound"].get<double>() > 0.39);
  CHECK(doc["distortion"].get<double>() >= 2 * 1.41421356 - 2 - 0.05);
}

TEST_CASE("closeness check through the C surface") {
  const double a_coords[] = {0, 0, 1, 0};
  CloudHandle a;
  REQUIRE(rr_cloud_create(a_coords, 2, 2, &a.p) == RR_OK);
  MetricHandle ma;
  REQUIRE(rr_metric_euclidean(a.p, &ma.p) == RR_OK);
  const uint32_t pairs[] = {0, 0, 1, 1};
  char* json = nullptr;
  REQUIRE(rr_closeness_check(ma.p, ma.p, pairs, 2, 0.1, 10.0, &json) == RR_OK);
  const auto doc = nlohmann::json::parse(take(json));
  CHECK(doc["pass"].get<bool>());
  CHECK(doc["value"].get<double>() == 0.0);
}

TEST_CASE("jung and enclosing ball") {
  double bound = 0.0;
  REQUIRE(rr_jung_bound(2, 0.0, 1.0, &bound) == RR_OK);
  CHECK(bound == doctest::Approx(std::sqrt(3.0)));
  CHECK(rr_jung_bound(0, 0.0, 1.0, &bound) == RR_ERR_INVALID_ARGUMENT);

  const double coords[] = {0, 0, 2, 0, 1, 1};
  CloudHandle cloud;
  REQUIRE(rr_cloud_create(coords, 3, 2, &cloud.p) == RR_OK);
  double center[2] = {};
  double radius = 0.0;
  REQUIRE(rr_enclosing_ball(cloud.p, center, &radius) == RR_OK);
  CHECK(radius == doctest::Approx(1.0));
  CHECK(center[0] == doctest::Approx(1.0));

  char* json = nullptr;
  REQUIRE(rr_jung_check(cloud.p, &json) == RR_OK);
  CHECK(nlohmann::json::parse(take(json))["pass"].get<bool>());
}

TEST_CASE("mu-reach table") {
  CloudHandle cloud;
  std::vector<double> params(600);
  REQUIRE(rr_shape_sample("{\"id\":\"circle\",\"r\":1.0}", 600, "grid", 0,
                          &cloud.p, params.data()) == RR_OK);
  const double levels[] = {0.1};
  char* json = nullptr;
  REQUIRE(rr_mu_reach_table(cloud.p, levels, 1, 100, 3, 0.5, &json) == RR_OK);
  const auto doc = nlohmann::json::parse(take(json));
  CHECK(doc["rows"][0]["chi_estimate"].get<double>() > 0.9);
}

TEST_CASE("pipeline and sweep through the C surface") {
  const char* config = R"({
    "kind": "reconstruction",
    "shape": {"id": "circle", "r": 1.0},
    "n_ref": 500, "n_sample": 400,
    "xi": 0.0714, "beta": 0.6, "epsilon": 0.3,
    "noise": 0.001, "seed": 3, "max_dim": 2
  })";
  char* report = nullptr;
  int pass = -1;
  REQUIRE(rr_pipeline_run(config, &report, &pass) == RR_OK);
  const auto doc = nlohmann::json::parse(take(report));
  CHECK(pass == 1);
  CHECK(doc["betti"]["observed"] == nlohmann::json::array({1, 1}));

  const char* sweep_config = R"({
    "kind": "distortion",
    "shape": {"id": "circle", "r": 1.0},
    "n": 200, "eps_list": [0.2, 0.4], "R": 0.3
  })";
  char* csv = nullptr;
  char* sweep_report = nullptr;
  REQUIRE(rr_sweep_run(sweep_config, &csv, &sweep_report, &pass) == RR_OK);
  CHECK(take(csv).rfind("epsilon,R,delta_hat\n", 0) == 0);
  CHECK(nlohmann::json::parse(take(sweep_report))["pass"].get<bool>());

  CHECK(rr_pipeline_run("{\"kind\":\"bogus\"}", &report, &pass) ==
        RR_ERR_INVALID_ARGUMENT);
  CHECK(rr_pipeline_run("not json", &report, &pass) ==
        RR_ERR_INVALID_ARGUMENT);
}
