// Command-line front end. Everything goes through the C API in ripsrecon.h;
// this translation unit deliberately includes no core header.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ripsrecon.h"

namespace {

[[noreturn]] void die(rr_status status) {
  std::cerr << "error: " << rr_last_error() << "\n";
  std::exit(status == RR_OK ? 1 : 2);
}

void check(rr_status status) {
  if (status != RR_OK) die(status);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  rr_string_free(s);
  return out;
}

std::string shape_json(const std::string& id, double r, double length) {
  nlohmann::ordered_json j;
  j["id"] = id;
  if (r > 0.0) j["r"] = r;
  if (length > 0.0) j["length"] = length;
  return j.dump();
}

std::vector<double> read_doubles(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(2);
  }
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    values.push_back(std::stod(line));
  }
  return values;
}

void write_doubles(const std::string& path, const std::vector<double>& v) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    std::exit(2);
  }
  out.precision(17);
  for (double x : v) out << x << "\n";
}

std::vector<std::uint32_t> read_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(2);
  }
  std::vector<std::uint32_t> flat;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string a, b;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    flat.push_back(static_cast<std::uint32_t>(std::stoul(a)));
    flat.push_back(static_cast<std::uint32_t>(std::stoul(b)));
  }
  return flat;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(2);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    std::exit(2);
  }
  out << content;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text << "\n";
  else
    write_file(out_path, text + "\n");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy-type reconstruction from point samples via "
               "epsilon-path metrics and Vietoris-Rips complexes"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "sample a built-in shape");
  std::string s_shape = "circle", s_mode = "grid", s_out, s_params_out;
  double s_r = 0.0, s_length = 0.0;
  std::size_t s_n = 100;
  std::uint64_t s_seed = 0;
  sample->add_option("--shape", s_shape, "shape id")->required();
  sample->add_option("--r", s_r, "shape radius");
  sample->add_option("--length", s_length, "segment length");
  sample->add_option("-n,--n", s_n, "number of points")->required();
  sample->add_option("--mode", s_mode, "grid|uniform");
  sample->add_option("--seed", s_seed, "random seed");
  sample->add_option("-o,--out", s_out, "output cloud (.csv/.json)")->required();
  sample->add_option("--params-out", s_params_out, "write arclength params");

  // perturb
  auto* pert = app.add_subcommand("perturb", "displace points within an eta-ball");
  std::string p_in, p_out;
  double p_eta = 0.0;
  std::uint64_t p_seed = 0;
  pert->add_option("-i,--in", p_in)->required();
  pert->add_option("--eta", p_eta)->required();
  pert->add_option("--seed", p_seed);
  pert->add_option("-o,--out", p_out)->required();

  // metric
  auto* metric = app.add_subcommand("metric", "build a finite metric space");
  metric->require_subcommand(1);
  auto* m_euc = metric->add_subcommand("euclidean");
  auto* m_path = metric->add_subcommand("path");
  auto* m_intr = metric->add_subcommand("intrinsic");
  std::string m_in, m_out, m_shape, m_params;
  double m_eps = 0.0, m_r = 0.0, m_length = 0.0;
  m_euc->add_option("-i,--in", m_in)->required();
  m_euc->add_option("-o,--out", m_out)->required();
  m_path->add_option("-i,--in", m_in)->required();
  m_path->add_option("--epsilon", m_eps)->required();
  m_path->add_option("-o,--out", m_out)->required();
  m_intr->add_option("--shape", m_shape)->required();
  m_intr->add_option("--r", m_r);
  m_intr->add_option("--length", m_length);
  m_intr->add_option("--params", m_params, "arclength parameter file")->required();
  m_intr->add_option("-o,--out", m_out)->required();

  // rips
  auto* rips = app.add_subcommand("rips", "Vietoris-Rips flag complex");
  std::string r_in, r_out;
  double r_beta = 0.0;
  int r_maxdim = 2;
  rips->add_option("-i,--in", r_in, "metric file")->required();
  rips->add_option("--beta", r_beta)->required();
  rips->add_option("--max-dim", r_maxdim);
  rips->add_option("-o,--out", r_out)->required();

  // betti
  auto* betti = app.add_subcommand("betti", "Betti numbers over Z/2");
  std::string b_in, b_out;
  int b_upto = 1;
  betti->add_option("-i,--in", b_in, "complex file")->required();
  betti->add_option("--up-to", b_upto);
  betti->add_option("-o,--out", b_out);

  // hausdorff
  auto* haus = app.add_subcommand("hausdorff", "Hausdorff distance of two clouds");
  std::string h_a, h_b;
  haus->add_option("-a", h_a)->required();
  haus->add_option("-b", h_b)->required();

  // distortion
  auto* dist = app.add_subcommand("distortion",
                                  "correspondence distortion and GH bounds");
  std::string d_a, d_b, d_corr, d_out;
  dist->add_option("-a", d_a, "first metric")->required();
  dist->add_option("-b", d_b, "second metric")->required();
  dist->add_option("--corr", d_corr, "correspondence CSV (default diagonal)");
  dist->add_option("-o,--out", d_out);

  // closeness
  auto* close = app.add_subcommand("closeness", "(eps,R)-closeness check");
  std::string c_a, c_b, c_corr, c_out;
  double c_eps = 0.0, c_R = 0.0;
  close->add_option("-a", c_a)->required();
  close->add_option("-b", c_b)->required();
  close->add_option("--corr", c_corr)->required();
  close->add_option("--eps", c_eps)->required();
  close->add_option("--R", c_R)->required();
  close->add_option("-o,--out", c_out);

  // jung
  auto* jung = app.add_subcommand("jung", "Jung diameter bounds");
  std::string j_in;
  int j_n = 0;
  double j_kappa = 0.0, j_rad = -1.0;
  jung->add_option("-i,--in", j_in, "cloud to check");
  jung->add_option("--n", j_n, "point count minus one");
  jung->add_option("--kappa", j_kappa);
  jung->add_option("--rad", j_rad);

  // mureach
  auto* mur = app.add_subcommand("mureach", "critical-function estimates");
  std::string u_in, u_d, u_out;
  std::size_t u_probes = 500;
  std::uint64_t u_seed = 0;
  double u_mu = 0.5;
  mur->add_option("-i,--in", u_in, "cloud")->required();
  mur->add_option("--d", u_d, "comma-separated levels")->required();
  mur->add_option("--probes", u_probes);
  mur->add_option("--seed", u_seed);
  mur->add_option("--mu", u_mu);
  mur->add_option("-o,--out", u_out);

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "run an experiment config");
  std::string pl_config, pl_out;
  pipe->add_option("--config", pl_config, "JSON config")->required();
  pipe->add_option("-o,--out", pl_out, "report path");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
  std::string sw_config, sw_csv, sw_out;
  sweep->add_option("--config", sw_config, "JSON config")->required();
  sweep->add_option("--csv", sw_csv, "CSV table path");
  sweep->add_option("-o,--out", sw_out, "report path");

  CLI11_PARSE(app, argc, argv);

  if (*sample) {
    rr_cloud* cloud = nullptr;
    std::vector<double> params(s_n);
    check(rr_shape_sample(shape_json(s_shape, s_r, s_length).c_str(), s_n,
                          s_mode.c_str(), s_seed, &cloud, params.data()));
    check(rr_cloud_save(cloud, s_out.c_str()));
    if (!s_params_out.empty()) write_doubles(s_params_out, params);
    rr_cloud_free(cloud);
  } else if (*pert) {
    rr_cloud* in = nullptr;
    rr_cloud* out = nullptr;
    check(rr_cloud_load(p_in.c_str(), &in));
    check(rr_cloud_perturb(in, p_eta, p_seed, &out));
    check(rr_cloud_save(out, p_out.c_str()));
    rr_cloud_free(in);
    rr_cloud_free(out);
  } else if (*metric) {
    rr_metric* m = nullptr;
    if (*m_euc || *m_path) {
      rr_cloud* cloud = nullptr;
      check(rr_cloud_load(m_in.c_str(), &cloud));
      check(*m_euc ? rr_metric_euclidean(cloud, &m)
                   : rr_metric_path(cloud, m_eps, &m));
      rr_cloud_free(cloud);
    } else {
      const auto params = read_doubles(m_params);
      check(rr_metric_intrinsic(shape_json(m_shape, m_r, m_length).c_str(),
                                params.data(), params.size(), &m));
    }
    check(rr_metric_save(m, m_out.c_str()));
    rr_metric_free(m);
  } else if (*rips) {
    rr_metric* m = nullptr;
    rr_complex* cx = nullptr;
    check(rr_metric_load(r_in.c_str(), &m));
    check(rr_rips_complex(m, r_beta, r_maxdim, &cx));
    check(rr_complex_save(cx, r_out.c_str()));
    rr_metric_free(m);
    rr_complex_free(cx);
  } else if (*betti) {
    rr_complex* cx = nullptr;
    char* json = nullptr;
    check(rr_complex_load(b_in.c_str(), &cx));
    check(rr_betti_numbers(cx, b_upto, &json));
    emit(take_string(json), b_out);
    rr_complex_free(cx);
  } else if (*haus) {
    rr_cloud* a = nullptr;
    rr_cloud* b = nullptr;
    double value = 0.0;
    check(rr_cloud_load(h_a.c_str(), &a));
    check(rr_cloud_load(h_b.c_str(), &b));
    check(rr_hausdorff_distance(a, b, &value));
    nlohmann::ordered_json j;
    j["hausdorff_distance"] = value;
    std::cout << j.dump() << "\n";
    rr_cloud_free(a);
    rr_cloud_free(b);
  } else if (*dist) {
    rr_metric* a = nullptr;
    rr_metric* b = nullptr;
    char* json = nullptr;
    check(rr_metric_load(d_a.c_str(), &a));
    check(rr_metric_load(d_b.c_str(), &b));
    std::vector<std::uint32_t> pairs;
    if (!d_corr.empty()) pairs = read_pairs(d_corr);
    check(rr_distortion(a, b, pairs.empty() ? nullptr : pairs.data(),
                        pairs.size() / 2, &json));
    emit(take_string(json), d_out);
    rr_metric_free(a);
    rr_metric_free(b);
  } else if (*close) {
    rr_metric* a = nullptr;
    rr_metric* b = nullptr;
    char* json = nullptr;
    check(rr_metric_load(c_a.c_str(), &a));
    check(rr_metric_load(c_b.c_str(), &b));
    const auto pairs = read_pairs(c_corr);
    check(rr_closeness_check(a, b, pairs.data(), pairs.size() / 2, c_eps, c_R,
                             &json));
    const std::string text = take_string(json);
    emit(text, c_out);
    rr_metric_free(a);
    rr_metric_free(b);
    return nlohmann::json::parse(text)["pass"].get<bool>() ? 0 : 1;
  } else if (*jung) {
    if (!j_in.empty()) {
      rr_cloud* cloud = nullptr;
      char* json = nullptr;
      check(rr_cloud_load(j_in.c_str(), &cloud));
      check(rr_jung_check(cloud, &json));
      const std::string text = take_string(json);
      std::cout << text << "\n";
      rr_cloud_free(cloud);
      return nlohmann::json::parse(text)["pass"].get<bool>() ? 0 : 1;
    }
    if (j_n < 1 || j_rad < 0.0) {
      std::cerr << "error: need either -i <cloud> or --n/--kappa/--rad\n";
      return 2;
    }
    double value = 0.0;
    check(rr_jung_bound(j_n, j_kappa, j_rad, &value));
    nlohmann::ordered_json j;
    j["jung_bound"] = value;
    std::cout << j.dump() << "\n";
  } else if (*mur) {
    rr_cloud* cloud = nullptr;
    char* json = nullptr;
    check(rr_cloud_load(u_in.c_str(), &cloud));
    std::vector<double> ds;
    std::stringstream ss(u_d);
    std::string field;
    while (std::getline(ss, field, ','))
      if (!field.empty()) ds.push_back(std::stod(field));
    check(rr_mu_reach_table(cloud, ds.data(), ds.size(), u_probes, u_seed,
                            u_mu, &json));
    emit(take_string(json), u_out);
    rr_cloud_free(cloud);
  } else if (*pipe) {
    char* report = nullptr;
    int pass = 0;
    check(rr_pipeline_run(read_file(pl_config).c_str(), &report, &pass));
    emit(take_string(report), pl_out);
    return pass ? 0 : 1;
  } else if (*sweep) {
    char* report = nullptr;
    char* csv = nullptr;
    int pass = 0;
    check(rr_sweep_run(read_file(sw_config).c_str(), &csv, &report, &pass));
    const std::string csv_text = take_string(csv);
    if (!sw_csv.empty())
      write_file(sw_csv, csv_text);
    else
      std::cout << csv_text;
    emit(take_string(report), sw_out);
    return pass ? 0 : 1;
  }
  return 0;
}
