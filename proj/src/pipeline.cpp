#include "ripsrecon/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "ripsrecon/homology.hpp"
#include "ripsrecon/invariants.hpp"
#include "ripsrecon/io.hpp"
#include "ripsrecon/pathmetric.hpp"

namespace ripsrecon {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

struct Hypothesis {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::string note;
};

ordered_json to_json(const std::vector<Hypothesis>& hs) {
  ordered_json arr = ordered_json::array();
  for (const auto& h : hs) {
    ordered_json entry;
    entry["name"] = h.name;
    entry["value"] = h.value;
    entry["bound"] = h.bound;
    entry["pass"] = h.pass;
    if (!h.note.empty()) entry["note"] = h.note;
    arr.push_back(std::move(entry));
  }
  return arr;
}

bool all_pass(const std::vector<Hypothesis>& hs) {
  for (const auto& h : hs)
    if (!h.pass) return false;
  return true;
}

ordered_json shape_summary(const Shape& shape) {
  ordered_json s;
  s["id"] = shape.id();
  s["total_length"] = shape.total_length();
  s["kappa"] = shape.kappa();
  s["convexity_radius"] = shape.convexity_radius();
  s["delta_cap"] = shape.delta_cap();
  s["betti"] = shape.betti_profile();
  return s;
}

double get_or(const json& config, const char* key, double fallback) {
  return config.contains(key) ? config[key].get<double>() : fallback;
}

/// Theorem-range checks shared by the Euclidean pipelines. Violations are
/// recorded, not thrown: out-of-range runs double as falsification probes.
void range_hypotheses(std::vector<Hypothesis>& hs, const Shape& shape,
                      double xi, double beta, double epsilon, double noise) {
  hs.push_back({"xi_in_range", xi, 1.0 / 14.0,
                xi > 0.0 && xi <= 1.0 / 14.0, ""});
  const double beta_cap = shape.delta_cap() / (1.0 + 2.0 * xi);
  hs.push_back({"beta_below_delta_cap", beta, beta_cap,
                beta > 0.0 && beta < beta_cap, ""});
  hs.push_back({"epsilon_at_most_beta", epsilon, beta,
                epsilon > 0.0 && epsilon <= beta, ""});
  hs.push_back({"noise_below_half_xi_eps", noise, 0.5 * xi * epsilon,
                noise >= 0.0 && noise < 0.5 * xi * epsilon, ""});
}

/// Certified Hausdorff bound between the shape and the perturbed grid
/// sample: the grid covers the shape within its covering radius, each point
/// moved by at most the measured displacement, and the reverse direction is
/// the exact point-to-shape distance.
Hypothesis hausdorff_hypothesis(const Shape& shape, const PointCloud& sources,
                                const PointCloud& sample, double budget) {
  double max_disp = 0.0;
  double max_to_shape = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    max_disp = std::max(max_disp, euclidean_distance(sources.point(i),
                                                     sample.point(i)));
    max_to_shape = std::max(max_to_shape, shape.distance_to(sample.point(i)));
  }
  const double bound =
      std::max(shape.grid_covering_radius(sample.size()) + max_disp,
               max_to_shape);
  return {"hausdorff_to_shape", bound, budget, bound < budget, ""};
}

struct BettiOutcome {
  ordered_json block;
  bool match = false;
  std::size_t components = 0;
};

BettiOutcome betti_block(const FlagComplex& complex,
                         const std::vector<std::size_t>& expected,
                         int max_dim) {
  BettiOutcome out;
  const int up_to = std::min<int>(max_dim - 1,
                                  static_cast<int>(expected.size()) - 1);
  const BettiProfile profile = betti_numbers(complex, up_to);
  const std::vector<std::size_t> expect_cut(
      expected.begin(), expected.begin() + up_to + 1);
  out.match = profile.betti == expect_cut;
  out.components = connected_components(complex);
  out.block["observed"] = profile.betti;
  out.block["expected"] = expect_cut;
  out.block["match"] = out.match;
  out.block["certified_up_to"] = profile.certified_up_to;
  out.block["euler"] = profile.euler;
  return out;
}

ordered_json complex_block(const FlagComplex& complex, std::size_t components) {
  ordered_json c;
  c["n_vertices"] = complex.n_vertices();
  for (int k = 1; k <= complex.max_dim(); ++k)
    c["count_dim" + std::to_string(k)] = complex.count(k);
  c["components"] = components;
  return c;
}

} // namespace

std::unique_ptr<Shape> shape_from_json(const json& spec) {
  if (!spec.contains("id"))
    throw std::invalid_argument("shape spec needs an 'id'");
  std::map<std::string, double> params;
  for (auto it = spec.begin(); it != spec.end(); ++it)
    if (it.key() != "id" && it->is_number())
      params[it.key()] = it->get<double>();
  return make_shape(spec["id"].get<std::string>(), params);
}

ordered_json run_reconstruction(const json& config) {
  Stopwatch total;
  const auto shape = shape_from_json(config.at("shape"));
  const std::size_t n_ref = config.at("n_ref").get<std::size_t>();
  const std::size_t n_sample = config.at("n_sample").get<std::size_t>();
  const double xi = get_or(config, "xi", 1.0 / 14.0);
  const double beta = config.at("beta").get<double>();
  const double epsilon = config.at("epsilon").get<double>();
  const double noise = get_or(config, "noise", 0.0);
  const std::uint64_t seed = config.at("seed").get<std::uint64_t>();
  const int max_dim = static_cast<int>(get_or(config, "max_dim", 2));

  ordered_json report;
  report["kind"] = "reconstruction";
  report["config"] = config;
  report["shape"] = shape_summary(*shape);
  ordered_json runtimes;

  std::vector<Hypothesis> hs;
  range_hypotheses(hs, *shape, xi, beta, epsilon, noise);

  // (1) dense reference and the large-scale distortion bound
  Stopwatch ref_clock;
  const ShapeSample ref = sample_shape(*shape, n_ref, SampleMode::Grid, seed);
  {
    const double bound = 1.0 + xi / (1.0 + xi);
    try {
      const double value = large_scale_distortion(*shape, ref.params,
                                                  ref.cloud, epsilon,
                                                  2.0 * xi * beta);
      hs.push_back({"large_scale_distortion", value, bound, value <= bound,
                    ""});
    } catch (const Error& e) {
      hs.push_back({"large_scale_distortion", std::nan(""), bound, false,
                    e.what()});
    }
  }
  runtimes["reference_s"] = ref_clock.seconds();

  // (2) sample with verified Hausdorff budget
  const ShapeSample sources =
      sample_shape(*shape, n_sample, SampleMode::Grid, seed);
  const PointCloud sample = perturb(sources.cloud, noise, seed);
  hs.push_back(hausdorff_hypothesis(*shape, sources.cloud, sample,
                                    0.5 * xi * epsilon));

  // (3)-(5) path metric, Rips complex, Betti certification
  bool betti_match = false;
  try {
    Stopwatch metric_clock;
    const FiniteMetricSpace deps = path_metric(sample, epsilon);
    runtimes["path_metric_s"] = metric_clock.seconds();

    Stopwatch rips_clock;
    const FlagComplex complex = rips_complex(deps, beta, max_dim);
    runtimes["rips_s"] = rips_clock.seconds();

    Stopwatch betti_clock;
    const BettiOutcome outcome =
        betti_block(complex, shape->betti_profile(), max_dim);
    runtimes["homology_s"] = betti_clock.seconds();
    betti_match = outcome.match;
    report["betti"] = outcome.block;
    report["complex"] = complex_block(complex, outcome.components);

    // optional intermediate artifacts, so every echoed check can be redone
    // from disk
    if (config.contains("artifacts")) {
      const auto& artifacts = config["artifacts"];
      if (artifacts.contains("sample"))
        save_cloud(sample, artifacts["sample"].get<std::string>());
      if (artifacts.contains("metric"))
        save_metric(deps, artifacts["metric"].get<std::string>());
      if (artifacts.contains("complex"))
        save_complex(complex, artifacts["complex"].get<std::string>());
    }
  } catch (const DisconnectedGraph& e) {
    hs.push_back({"sample_graph_connected", 0.0, 0.0, false, e.what()});
  }

  report["hypotheses"] = to_json(hs);
  report["betti_certified"] = betti_match;
  report["pass"] = all_pass(hs) && betti_match;
  runtimes["total_s"] = total.seconds();
  report["runtimes"] = std::move(runtimes);
  return report;
}

ordered_json run_closeness_check(const json& config) {
  Stopwatch total;
  const auto shape = shape_from_json(config.at("shape"));
  const std::size_t n_ref = config.at("n_ref").get<std::size_t>();
  const std::size_t n_sample = config.at("n_sample").get<std::size_t>();
  const double xi = get_or(config, "xi", 1.0 / 14.0);
  const double beta = config.at("beta").get<double>();
  const double epsilon = config.at("epsilon").get<double>();
  const double noise = get_or(config, "noise", 0.0);
  const std::uint64_t seed = config.at("seed").get<std::uint64_t>();

  ordered_json report;
  report["kind"] = "closeness";
  report["config"] = config;
  report["shape"] = shape_summary(*shape);
  ordered_json runtimes;

  std::vector<Hypothesis> hs;
  // closeness certification tolerates the full xi range (0,1)
  hs.push_back({"xi_in_range", xi, 1.0, xi > 0.0 && xi < 1.0, ""});
  hs.push_back({"epsilon_at_most_beta", epsilon, beta,
                epsilon > 0.0 && epsilon <= beta, ""});
  hs.push_back({"noise_below_half_xi_eps", noise, 0.5 * xi * epsilon,
                noise >= 0.0 && noise < 0.5 * xi * epsilon, ""});

  const ShapeSample ref = sample_shape(*shape, n_ref, SampleMode::Grid, seed);
  {
    const double bound = 1.0 + xi / (1.0 + xi);
    try {
      const double value = large_scale_distortion(*shape, ref.params,
                                                  ref.cloud, epsilon,
                                                  2.0 * xi * beta);
      hs.push_back({"large_scale_distortion", value, bound, value <= bound,
                    ""});
    } catch (const Error& e) {
      hs.push_back({"large_scale_distortion", std::nan(""), bound, false,
                    e.what()});
    }
  }

  const ShapeSample sources =
      sample_shape(*shape, n_sample, SampleMode::Grid, seed);
  const PointCloud sample = perturb(sources.cloud, noise, seed);
  hs.push_back(hausdorff_hypothesis(*shape, sources.cloud, sample,
                                    0.5 * xi * epsilon));

  bool closeness_pass = false;
  try {
    const FiniteMetricSpace deps = path_metric(sample, epsilon);
    // intrinsic oracle restricted to the reference
    std::vector<double> dl(n_ref * n_ref, 0.0);
    for (std::size_t i = 0; i < n_ref; ++i)
      for (std::size_t j = i + 1; j < n_ref; ++j) {
        const double v = shape->intrinsic_distance(ref.params[i],
                                                   ref.params[j]);
        dl[i * n_ref + j] = v;
        dl[j * n_ref + i] = v;
      }
    const FiniteMetricSpace d_ref =
        FiniteMetricSpace::unchecked(std::move(dl), n_ref);
    const Correspondence corr =
        hausdorff_correspondence(ref.cloud, sample, 0.5 * xi * epsilon);
    const CheckReport check =
        check_eps_r_closeness(corr, d_ref, deps, xi * beta, beta);
    closeness_pass = check.pass;
    ordered_json c;
    c["pairs"] = corr.pairs.size();
    c["max_gap"] = check.value;
    c["bound"] = 2.0 * xi * beta;
    c["pass"] = check.pass;
    report["closeness"] = std::move(c);
  } catch (const Error& e) {
    hs.push_back({"closeness_computable", 0.0, 0.0, false, e.what()});
  }

  report["hypotheses"] = to_json(hs);
  report["pass"] = all_pass(hs) && closeness_pass;
  runtimes["total_s"] = total.seconds();
  report["runtimes"] = std::move(runtimes);
  return report;
}

ordered_json run_latschev(const json& config) {
  Stopwatch total;
  const auto shape = shape_from_json(config.at("shape"));
  const std::size_t n_net = config.at("n_net").get<std::size_t>();
  const double xi = get_or(config, "xi", 1.0 / 14.0);
  const double beta = config.at("beta").get<double>();
  const std::string source = config.contains("source")
                                 ? config["source"].get<std::string>()
                                 : "self";
  const int max_dim = static_cast<int>(get_or(config, "max_dim", 2));

  ordered_json report;
  report["kind"] = "latschev";
  report["config"] = config;
  report["shape"] = shape_summary(*shape);

  std::vector<Hypothesis> hs;
  hs.push_back({"xi_in_range", xi, 1.0 / 14.0,
                xi > 0.0 && xi <= 1.0 / 14.0, ""});
  const double beta_cap = shape->delta_cap() / (1.0 + 2.0 * xi);
  hs.push_back({"beta_below_delta_cap", beta, beta_cap,
                beta > 0.0 && beta < beta_cap, ""});

  const ShapeSample net = sample_shape(*shape, n_net, SampleMode::Grid, 0);
  std::vector<double> dx(n_net * n_net, 0.0);
  for (std::size_t i = 0; i < n_net; ++i)
    for (std::size_t j = i + 1; j < n_net; ++j) {
      const double v = shape->intrinsic_distance(net.params[i], net.params[j]);
      dx[i * n_net + j] = v;
      dx[j * n_net + i] = v;
    }
  const FiniteMetricSpace d_net =
      FiniteMetricSpace::unchecked(std::move(dx), n_net);

  // the sample metric space (S, d_S) under test
  FiniteMetricSpace d_s = d_net;
  Correspondence corr = make_correspondence({}, 0, 0); // replaced below
  {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> diag;
    if (source == "self") {
      for (std::uint32_t i = 0; i < n_net; ++i) diag.emplace_back(i, i);
      corr = make_correspondence(std::move(diag), n_net, n_net);
    } else if (source == "scaled") {
      const double lambda = get_or(config, "lambda", xi);
      std::vector<double> scaled(d_net.data().begin(), d_net.data().end());
      for (double& v : scaled) v *= 1.0 + lambda;
      d_s = FiniteMetricSpace::unchecked(std::move(scaled), n_net);
      for (std::uint32_t i = 0; i < n_net; ++i) diag.emplace_back(i, i);
      corr = make_correspondence(std::move(diag), n_net, n_net);
    } else if (source == "subnet") {
      const std::size_t stride =
          std::max<std::size_t>(1, config.at("stride").get<std::size_t>());
      std::vector<std::uint32_t> picks;
      for (std::size_t i = 0; i < n_net; i += stride)
        picks.push_back(static_cast<std::uint32_t>(i));
      const std::size_t m = picks.size();
      std::vector<double> sub(m * m, 0.0);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
          const double v = d_net(picks[a], picks[b]);
          sub[a * m + b] = v;
          sub[b * m + a] = v;
        }
      d_s = FiniteMetricSpace::unchecked(std::move(sub), m);
      // every net point matched to its nearest subnet member
      for (std::uint32_t i = 0; i < n_net; ++i) {
        std::uint32_t best = 0;
        double best_d = d_net(i, picks[0]);
        for (std::uint32_t a = 1; a < m; ++a)
          if (d_net(i, picks[a]) < best_d) {
            best_d = d_net(i, picks[a]);
            best = a;
          }
        diag.emplace_back(i, best);
      }
      corr = make_correspondence(std::move(diag), n_net, m);
    } else {
      throw std::invalid_argument("unknown latschev source '" + source + "'");
    }
  }

  const CheckReport closeness =
      check_eps_r_closeness(corr, d_net, d_s, xi * beta, beta);
  hs.push_back({"closeness_certified", closeness.value, 2.0 * xi * beta,
                closeness.pass, ""});

  const FlagComplex complex = rips_complex(d_s, beta, max_dim);
  const BettiOutcome outcome =
      betti_block(complex, shape->betti_profile(), max_dim);
  report["betti"] = outcome.block;
  report["complex"] = complex_block(complex, outcome.components);

  report["hypotheses"] = to_json(hs);
  report["betti_certified"] = outcome.match;
  report["pass"] = all_pass(hs) && outcome.match;
  ordered_json runtimes;
  runtimes["total_s"] = total.seconds();
  report["runtimes"] = std::move(runtimes);
  return report;
}

ordered_json run_stability(const json& config) {
  Stopwatch total;
  const auto shape_a = shape_from_json(config.at("shape_a"));
  const auto shape_b = shape_from_json(config.at("shape_b"));
  const std::size_t n_net = config.at("n_net").get<std::size_t>();
  const double xi = get_or(config, "xi", 1.0 / 14.0);
  const double beta = config.at("beta").get<double>();
  const std::string matching = config.contains("matching")
                                   ? config["matching"].get<std::string>()
                                   : "aligned";
  const int max_dim = static_cast<int>(get_or(config, "max_dim", 2));

  ordered_json report;
  report["kind"] = "stability";
  report["config"] = config;
  report["shape_a"] = shape_summary(*shape_a);
  report["shape_b"] = shape_summary(*shape_b);

  std::vector<Hypothesis> hs;
  hs.push_back({"xi_in_range", xi, 1.0 / 14.0,
                xi > 0.0 && xi <= 1.0 / 14.0, ""});
  const double cap = std::min(shape_a->delta_cap(), shape_b->delta_cap()) /
                     (1.0 + 2.0 * xi);
  hs.push_back({"beta_below_min_delta_cap", beta, cap,
                beta > 0.0 && beta < cap, ""});

  const ShapeSample net_a = sample_shape(*shape_a, n_net, SampleMode::Grid, 0);
  const ShapeSample net_b = sample_shape(*shape_b, n_net, SampleMode::Grid, 0);
  auto oracle_metric = [](const Shape& shape, const ShapeSample& net) {
    const std::size_t n = net.params.size();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = shape.intrinsic_distance(net.params[i], net.params[j]);
        d[i * n + j] = v;
        d[j * n + i] = v;
      }
    return FiniteMetricSpace::unchecked(std::move(d), n);
  };
  const FiniteMetricSpace d_a = oracle_metric(*shape_a, net_a);
  const FiniteMetricSpace d_b = oracle_metric(*shape_b, net_b);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (matching == "aligned") {
    for (std::uint32_t i = 0; i < n_net; ++i) pairs.emplace_back(i, i);
  } else if (matching == "nearest") {
    for (std::uint32_t i = 0; i < n_net; ++i) {
      std::uint32_t best = 0;
      double best_d = euclidean_distance(net_a.cloud.point(i),
                                         net_b.cloud.point(0));
      for (std::uint32_t j = 1; j < n_net; ++j) {
        const double d = euclidean_distance(net_a.cloud.point(i),
                                            net_b.cloud.point(j));
        if (d < best_d) {
          best_d = d;
          best = j;
        }
      }
      pairs.emplace_back(i, best);
    }
    for (std::uint32_t j = 0; j < n_net; ++j) {
      std::uint32_t best = 0;
      double best_d = euclidean_distance(net_b.cloud.point(j),
                                         net_a.cloud.point(0));
      for (std::uint32_t i = 1; i < n_net; ++i) {
        const double d = euclidean_distance(net_b.cloud.point(j),
                                            net_a.cloud.point(i));
        if (d < best_d) {
          best_d = d;
          best = i;
        }
      }
      pairs.emplace_back(best, j);
    }
  } else {
    throw std::invalid_argument("unknown matching '" + matching + "'");
  }
  const Correspondence corr =
      make_correspondence(std::move(pairs), n_net, n_net);
  const CheckReport closeness =
      check_eps_r_closeness(corr, d_a, d_b, xi * beta, beta);
  hs.push_back({"closeness_certified", closeness.value, 2.0 * xi * beta,
                closeness.pass, ""});

  const FlagComplex complex_a = rips_complex(d_a, beta, max_dim);
  const FlagComplex complex_b = rips_complex(d_b, beta, max_dim);
  const int up_to = max_dim - 1;
  const BettiProfile betti_a = betti_numbers(complex_a, up_to);
  const BettiProfile betti_b = betti_numbers(complex_b, up_to);
  const bool match = betti_a.betti == betti_b.betti;
  ordered_json betti;
  betti["observed_a"] = betti_a.betti;
  betti["observed_b"] = betti_b.betti;
  betti["match"] = match;
  betti["certified_up_to"] = up_to;
  report["betti"] = std::move(betti);

  report["hypotheses"] = to_json(hs);
  report["betti_certified"] = match;
  report["pass"] = all_pass(hs) && match;
  ordered_json runtimes;
  runtimes["total_s"] = total.seconds();
  report["runtimes"] = std::move(runtimes);
  return report;
}

ordered_json run_pipeline(const json& config) {
  const std::string kind = config.at("kind").get<std::string>();
  if (kind == "reconstruction") return run_reconstruction(config);
  if (kind == "latschev") return run_latschev(config);
  if (kind == "closeness") return run_closeness_check(config);
  if (kind == "stability") return run_stability(config);
  throw std::invalid_argument("unknown pipeline kind '" + kind + "'");
}

namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

} // namespace

SweepResult run_sweep(const json& config) {
  const std::string kind = config.at("kind").get<std::string>();
  SweepResult result;
  ordered_json& report = result.report;
  report["kind"] = kind;
  report["config"] = config;
  std::ostringstream csv;

  if (kind == "convergence") {
    const auto shape = shape_from_json(config.at("shape"));
    const std::size_t n = config.at("n").get<std::size_t>();
    const auto eps_list = config.at("eps_list").get<std::vector<double>>();
    const auto rows = convergence_sweep(*shape, n, eps_list);
    csv << "epsilon,sup_error,connected\n";
    ordered_json jrows = ordered_json::array();
    bool nonincreasing = true;
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
      ordered_json jr;
      jr["epsilon"] = row.epsilon;
      if (row.sup_error) {
        jr["sup_error"] = *row.sup_error;
        if (*row.sup_error > prev + kRelTol * prev) nonincreasing = false;
        prev = *row.sup_error;
      } else {
        jr["error"] = row.error;
      }
      jrows.push_back(std::move(jr));
      csv << format_double(row.epsilon) << ","
          << (row.sup_error ? format_double(*row.sup_error) : "") << ","
          << (row.sup_error ? "1" : "0") << "\n";
    }
    report["rows"] = std::move(jrows);
    report["monotone_nonincreasing"] = nonincreasing;
    report["pass"] = nonincreasing;
  } else if (kind == "distortion") {
    const auto shape = shape_from_json(config.at("shape"));
    const std::size_t n = config.at("n").get<std::size_t>();
    const auto eps_list = config.at("eps_list").get<std::vector<double>>();
    const double R = config.at("R").get<double>();
    const ShapeSample ref = sample_shape(*shape, n, SampleMode::Grid, 0);
    csv << "epsilon,R,delta_hat\n";
    ordered_json jrows = ordered_json::array();
    // delta_hat is non-decreasing in epsilon; rows come in the given order
    bool monotone = true;
    bool above_one = true;
    double prev_eps = 0.0, prev_val = 0.0;
    bool have_prev = false;
    for (double eps : eps_list) {
      ordered_json jr;
      jr["epsilon"] = eps;
      jr["R"] = R;
      std::string cell;
      try {
        const double value =
            large_scale_distortion(*shape, ref.params, ref.cloud, eps, R);
        jr["delta_hat"] = value;
        cell = format_double(value);
        if (value < 1.0 - kRelTol) above_one = false;
        if (have_prev) {
          const bool increasing_eps = eps > prev_eps;
          if (increasing_eps && value < prev_val - kRelTol * prev_val)
            monotone = false;
          if (!increasing_eps && value > prev_val + kRelTol * prev_val)
            monotone = false;
        }
        prev_eps = eps;
        prev_val = value;
        have_prev = true;
      } catch (const Error& e) {
        jr["error"] = e.what();
      }
      jrows.push_back(std::move(jr));
      csv << format_double(eps) << "," << format_double(R) << "," << cell
          << "\n";
    }
    report["rows"] = std::move(jrows);
    report["monotone_in_epsilon"] = monotone;
    report["never_below_one"] = above_one;
    report["pass"] = monotone && above_one;
  } else if (kind == "mu_reach") {
    const auto shape = shape_from_json(config.at("shape"));
    const std::size_t n = config.at("n").get<std::size_t>();
    const auto d_list = config.at("d_list").get<std::vector<double>>();
    const std::size_t probes = config.at("probes").get<std::size_t>();
    const double mu = get_or(config, "mu", 0.5);
    const std::uint64_t seed =
        config.contains("seed") ? config["seed"].get<std::uint64_t>() : 0;
    const ShapeSample sampled = sample_shape(*shape, n, SampleMode::Grid, 0);
    const ChiTable table =
        critical_function_estimate(sampled.cloud, d_list, probes, seed, mu);
    csv << "d,chi_estimate,probes_landed\n";
    ordered_json jrows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json jr;
      jr["d"] = row.d;
      if (row.chi)
        jr["chi_estimate"] = *row.chi;
      else
        jr["warning"] = "no probe landed on this level set";
      jr["probes_landed"] = row.probes_landed;
      jrows.push_back(std::move(jr));
      csv << format_double(row.d) << ","
          << (row.chi ? format_double(*row.chi) : "") << ","
          << row.probes_landed << "\n";
    }
    report["rows"] = std::move(jrows);
    report["mu"] = mu;
    if (table.r_mu_upper) report["r_mu_upper_bound"] = *table.r_mu_upper;
    report["pass"] = true;
  } else {
    throw std::invalid_argument("unknown sweep kind '" + kind + "'");
  }

  result.csv = csv.str();
  return result;
}

} // namespace ripsrecon
