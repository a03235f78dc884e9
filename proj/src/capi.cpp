#include "ripsrecon.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "ripsrecon/homology.hpp"
#include "ripsrecon/invariants.hpp"
#include "ripsrecon/io.hpp"
#include "ripsrecon/pipeline.hpp"

using namespace ripsrecon;

struct rr_cloud {
  PointCloud value;
};
struct rr_metric {
  FiniteMetricSpace value;
};
struct rr_complex {
  FlagComplex value;
};

namespace {

thread_local std::string g_last_error;

rr_status fail(rr_status code, const char* what) {
  g_last_error = what;
  return code;
}

/// Runs the body, translating exceptions into status codes.
template <class F>
rr_status guarded(F&& body) {
  try {
    body();
    return RR_OK;
  } catch (const DisconnectedGraph& e) {
    return fail(RR_ERR_DISCONNECTED, e.what());
  } catch (const PreconditionError& e) {
    return fail(RR_ERR_PRECONDITION, e.what());
  } catch (const Error& e) {
    return fail(RR_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(RR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(RR_ERR_INTERNAL, e.what());
  }
}

rr_status require(bool ok, const char* what) {
  return ok ? RR_OK : fail(RR_ERR_INVALID_ARGUMENT, what);
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::unique_ptr<Shape> parse_shape(const char* shape_json) {
  return shape_from_json(nlohmann::json::parse(shape_json));
}

Correspondence parse_pairs(const std::uint32_t* pairs, std::size_t pairs_len,
                           std::size_t na, std::size_t nb) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
  entries.reserve(pairs_len);
  for (std::size_t p = 0; p < pairs_len; ++p)
    entries.emplace_back(pairs[2 * p], pairs[2 * p + 1]);
  return make_correspondence(std::move(entries), na, nb);
}

} // namespace

extern "C" {

const char* rr_last_error(void) { return g_last_error.c_str(); }

void rr_string_free(char* s) { delete[] s; }

rr_status rr_cloud_create(const double* coords, size_t n, size_t dim,
                          rr_cloud** out) {
  if (rr_status s = require(coords && out, "null argument")) return s;
  return guarded([&] {
    *out = new rr_cloud{
        PointCloud(std::vector<double>(coords, coords + n * dim), dim)};
  });
}

rr_status rr_cloud_load(const char* path, rr_cloud** out) {
  if (rr_status s = require(path && out, "null argument")) return s;
  return guarded([&] { *out = new rr_cloud{load_cloud(path)}; });
}

rr_status rr_cloud_save(const rr_cloud* cloud, const char* path) {
  if (rr_status s = require(cloud && path, "null argument")) return s;
  return guarded([&] { save_cloud(cloud->value, path); });
}

size_t rr_cloud_size(const rr_cloud* cloud) {
  return cloud ? cloud->value.size() : 0;
}

size_t rr_cloud_dim(const rr_cloud* cloud) {
  return cloud ? cloud->value.dim() : 0;
}

rr_status rr_cloud_coords(const rr_cloud* cloud, double* buffer) {
  if (rr_status s = require(cloud && buffer, "null argument")) return s;
  const auto data = cloud->value.data();
  std::memcpy(buffer, data.data(), data.size() * sizeof(double));
  return RR_OK;
}

void rr_cloud_free(rr_cloud* cloud) { delete cloud; }

rr_status rr_shape_sample(const char* shape_json, size_t n, const char* mode,
                          uint64_t seed, rr_cloud** out, double* params_out) {
  if (rr_status s = require(shape_json && mode && out, "null argument"))
    return s;
  return guarded([&] {
    const auto shape = parse_shape(shape_json);
    SampleMode m;
    if (std::strcmp(mode, "grid") == 0)
      m = SampleMode::Grid;
    else if (std::strcmp(mode, "uniform") == 0)
      m = SampleMode::Uniform;
    else
      throw std::invalid_argument("mode must be 'grid' or 'uniform'");
    ShapeSample sample = sample_shape(*shape, n, m, seed);
    if (params_out)
      std::memcpy(params_out, sample.params.data(),
                  sample.params.size() * sizeof(double));
    *out = new rr_cloud{std::move(sample.cloud)};
  });
}

rr_status rr_cloud_perturb(const rr_cloud* cloud, double eta, uint64_t seed,
                           rr_cloud** out) {
  if (rr_status s = require(cloud && out, "null argument")) return s;
  return guarded([&] {
    *out = new rr_cloud{perturb(cloud->value, eta, seed)};
  });
}

rr_status rr_hausdorff_distance(const rr_cloud* a, const rr_cloud* b,
                                double* out) {
  if (rr_status s = require(a && b && out, "null argument")) return s;
  return guarded([&] { *out = hausdorff_distance(a->value, b->value); });
}

rr_status rr_metric_euclidean(const rr_cloud* cloud, rr_metric** out) {
  if (rr_status s = require(cloud && out, "null argument")) return s;
  return guarded([&] { *out = new rr_metric{euclidean_metric(cloud->value)}; });
}

rr_status rr_metric_path(const rr_cloud* cloud, double epsilon,
                         rr_metric** out) {
  if (rr_status s = require(cloud && out, "null argument")) return s;
  return guarded([&] {
    *out = new rr_metric{path_metric(cloud->value, epsilon)};
  });
}

rr_status rr_metric_intrinsic(const char* shape_json, const double* params,
                              size_t n, rr_metric** out) {
  if (rr_status s = require(shape_json && params && out && n > 0,
                            "null or empty argument"))
    return s;
  return guarded([&] {
    const auto shape = parse_shape(shape_json);
    std::vector<double> d(n * n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        const double v = shape->intrinsic_distance(params[i], params[j]);
        d[i * n + j] = v;
        d[j * n + i] = v;
      }
    *out = new rr_metric{FiniteMetricSpace::unchecked(std::move(d), n)};
  });
}

rr_status rr_metric_load(const char* path, rr_metric** out) {
  if (rr_status s = require(path && out, "null argument")) return s;
  return guarded([&] { *out = new rr_metric{load_metric(path)}; });
}

rr_status rr_metric_save(const rr_metric* metric, const char* path) {
  if (rr_status s = require(metric && path, "null argument")) return s;
  return guarded([&] { save_metric(metric->value, path); });
}

size_t rr_metric_size(const rr_metric* metric) {
  return metric ? metric->value.size() : 0;
}

double rr_metric_get(const rr_metric* metric, size_t i, size_t j) {
  return metric->value(i, j);
}

void rr_metric_free(rr_metric* metric) { delete metric; }

rr_status rr_rips_complex(const rr_metric* metric, double beta, int max_dim,
                          rr_complex** out) {
  if (rr_status s = require(metric && out, "null argument")) return s;
  return guarded([&] {
    *out = new rr_complex{rips_complex(metric->value, beta, max_dim)};
  });
}

rr_status rr_complex_load(const char* path, rr_complex** out) {
  if (rr_status s = require(path && out, "null argument")) return s;
  return guarded([&] { *out = new rr_complex{load_complex(path)}; });
}

rr_status rr_complex_save(const rr_complex* complex, const char* path) {
  if (rr_status s = require(complex && path, "null argument")) return s;
  return guarded([&] { save_complex(complex->value, path); });
}

size_t rr_complex_count(const rr_complex* complex, int dim) {
  return complex ? complex->value.count(dim) : 0;
}

long long rr_complex_euler(const rr_complex* complex) {
  return euler_characteristic(complex->value);
}

rr_status rr_complex_components(const rr_complex* complex, size_t* out) {
  if (rr_status s = require(complex && out, "null argument")) return s;
  return guarded([&] { *out = connected_components(complex->value); });
}

rr_status rr_betti_numbers(const rr_complex* complex, int up_to,
                           char** json_out) {
  if (rr_status s = require(complex && json_out, "null argument")) return s;
  return guarded([&] {
    *json_out = copy_string(betti_numbers(complex->value, up_to).to_json());
  });
}

void rr_complex_free(rr_complex* complex) { delete complex; }

rr_status rr_delta_parameter(double rho, double kappa, double* out) {
  if (rr_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = delta_parameter(rho, kappa); });
}

rr_status rr_jung_bound(int n, double kappa, double rad, double* out) {
  if (rr_status s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = jung_bound(n, kappa, rad); });
}

rr_status rr_jung_check(const rr_cloud* cloud, char** json_out) {
  if (rr_status s = require(cloud && json_out, "null argument")) return s;
  return guarded([&] {
    const JungReport r = check_jung_euclidean(cloud->value);
    nlohmann::ordered_json j;
    j["rad"] = r.rad;
    j["diam"] = r.diam;
    j["jung_kappa0"] = r.jung_kappa0;
    j["four_thirds"] = r.four_thirds;
    j["pass"] = r.pass;
    *json_out = copy_string(j.dump());
  });
}

rr_status rr_enclosing_ball(const rr_cloud* cloud, double* center,
                            double* radius) {
  if (rr_status s = require(cloud && center && radius, "null argument"))
    return s;
  return guarded([&] {
    const Ball ball = minimal_enclosing_ball(cloud->value);
    std::memcpy(center, ball.center.data(),
                ball.center.size() * sizeof(double));
    *radius = ball.radius;
  });
}

rr_status rr_distortion(const rr_metric* da, const rr_metric* db,
                        const uint32_t* pairs, size_t pairs_len,
                        char** json_out) {
  if (rr_status s = require(da && db && json_out, "null argument")) return s;
  return guarded([&] {
    Correspondence corr =
        pairs && pairs_len > 0
            ? parse_pairs(pairs, pairs_len, da->value.size(), db->value.size())
            : [&] {
                if (da->value.size() != db->value.size())
                  throw std::invalid_argument(
                      "diagonal correspondence needs equal sizes");
                std::vector<std::pair<std::uint32_t, std::uint32_t>> diag;
                for (std::uint32_t i = 0; i < da->value.size(); ++i)
                  diag.emplace_back(i, i);
                return make_correspondence(std::move(diag), da->value.size(),
                                           db->value.size());
              }();
    const double dist = distortion(corr, da->value, db->value);
    double diam_a = 0.0, diam_b = 0.0;
    for (std::size_t i = 0; i < da->value.size(); ++i)
      for (std::size_t j = i + 1; j < da->value.size(); ++j)
        diam_a = std::max(diam_a, da->value(i, j));
    for (std::size_t i = 0; i < db->value.size(); ++i)
      for (std::size_t j = i + 1; j < db->value.size(); ++j)
        diam_b = std::max(diam_b, db->value(i, j));
    nlohmann::ordered_json j;
    j["distortion"] = dist;
    j["gh_upper_bound"] = 0.5 * dist;
    j["diam_a"] = diam_a;
    j["diam_b"] = diam_b;
    j["gh_lower_bound"] = 0.5 * std::fabs(diam_a - diam_b);
    *json_out = copy_string(j.dump());
  });
}

rr_status rr_closeness_check(const rr_metric* da, const rr_metric* db,
                             const uint32_t* pairs, size_t pairs_len,
                             double eps, double big_r, char** json_out) {
  if (rr_status s = require(da && db && pairs && json_out, "null argument"))
    return s;
  return guarded([&] {
    const Correspondence corr =
        parse_pairs(pairs, pairs_len, da->value.size(), db->value.size());
    const CheckReport r =
        check_eps_r_closeness(corr, da->value, db->value, eps, big_r);
    nlohmann::ordered_json j;
    j["quantity"] = r.quantity;
    j["value"] = r.value;
    j["witness_pair"] = r.witness_pair;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    *json_out = copy_string(j.dump());
  });
}

rr_status rr_mu_reach_table(const rr_cloud* cloud, const double* d_values,
                            size_t d_len, size_t n_probe, uint64_t seed,
                            double mu, char** json_out) {
  if (rr_status s = require(cloud && d_values && json_out, "null argument"))
    return s;
  return guarded([&] {
    const ChiTable table = critical_function_estimate(
        cloud->value, {d_values, d_len}, n_probe, seed, mu);
    nlohmann::ordered_json j;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json jr;
      jr["d"] = row.d;
      if (row.chi)
        jr["chi_estimate"] = *row.chi;
      else
        jr["warning"] = "no probe landed on this level set";
      jr["probes_landed"] = row.probes_landed;
      rows.push_back(std::move(jr));
    }
    j["mu"] = mu;
    if (table.r_mu_upper) j["r_mu_upper_bound"] = *table.r_mu_upper;
    *json_out = copy_string(j.dump());
  });
}

rr_status rr_pipeline_run(const char* config_json, char** report_json,
                          int* pass_out) {
  if (rr_status s = require(config_json && report_json, "null argument"))
    return s;
  return guarded([&] {
    const auto report = run_pipeline(nlohmann::json::parse(config_json));
    if (pass_out) *pass_out = report.at("pass").get<bool>() ? 1 : 0;
    *report_json = copy_string(report.dump(2));
  });
}

rr_status rr_sweep_run(const char* config_json, char** csv_out,
                       char** report_json, int* pass_out) {
  if (rr_status s = require(config_json != nullptr, "null argument")) return s;
  return guarded([&] {
    const SweepResult result = run_sweep(nlohmann::json::parse(config_json));
    if (csv_out) *csv_out = copy_string(result.csv);
    if (report_json) *report_json = copy_string(result.report.dump(2));
    if (pass_out) *pass_out = result.report.at("pass").get<bool>() ? 1 : 0;
  });
}

} // extern "C"
