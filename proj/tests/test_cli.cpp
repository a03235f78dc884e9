// Drives the installed CLI as a subprocess over temp files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

const std::string kCli = RIPSRECON_CLI_PATH;

int run(const std::string& args) {
  const std::string command = kCli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string run_capture(const std::string& args) {
  const std::string out_path = "cli_capture.tmp";
  const std::string command = kCli + " " + args + " > " + out_path + " 2>&1";
  [[maybe_unused]] const int status = std::system(command.c_str());
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::remove(out_path.c_str());
  return buffer.str();
}

struct TempFile {
  explicit TempFile(std::string name) : path(std::move(name)) {}
  ~TempFile() { std::remove(path.c_str()); }
  std::string path;
};

} // namespace

TEST_CASE("sample -> metric -> rips -> betti round trip") {
  TempFile cloud("cli_c.csv"), params("cli_c.params"), metric("cli_d.fms"),
      complex("cli_cx.txt");
  CHECK(run("sample --shape circle --r 1 -n 64 --mode grid -o " + cloud.path +
            " --params-out " + params.path) == 0);
  CHECK(run("metric path -i " + cloud.path + " --epsilon 0.5 -o " +
            metric.path) == 0);
  CHECK(run("rips -i " + metric.path + " --beta 0.7 --max-dim 2 -o " +
            complex.path) == 0);
  const std::string betti = run_capture("betti -i " + complex.path + " --up-to 1");
  const auto doc = nlohmann::json::parse(betti);
  CHECK(doc["betti"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("perturb and hausdorff") {
  TempFile cloud("cli_p.csv"), noisy("cli_pn.csv");
  CHECK(run("sample --shape circle --r 1 -n 50 --mode grid -o " + cloud.path) ==
        0);
  CHECK(run("perturb -i " + cloud.path + " --eta 0.01 --seed 4 -o " +
            noisy.path) == 0);
  const auto doc = nlohmann::json::parse(
      run_capture("hausdorff -a " + cloud.path + " -b " + noisy.path));
  CHECK(doc["hausdorff_distance"].get<double>() < 0.01);
}

TEST_CASE("wedge distortion demo") {
  TempFile cloud("cli_w.csv"), params("cli_w.params"), de("cli_we.fms"),
      dl("cli_wl.fms");
  CHECK(run("sample --shape wedge -n 400 --mode grid -o " + cloud.path +
            " --params-out " + params.path) == 0);
  CHECK(run("metric euclidean -i " + cloud.path + " -o " + de.path) == 0);
  CHECK(run("metric intrinsic --shape wedge --params " + params.path +
            " -o " + dl.path) == 0);
  const auto doc = nlohmann::json::parse(
      run_capture("distortion -a " + de.path + " -b " + dl.path));
  CHECK(doc["gh_lower_bound"].get<double>() >= 1.41421356 - 1 - 0.02);
}

TEST_CASE("jung evaluator") {
  const auto doc =
      nlohmann::json::parse(run_capture("jung --n 2 --kappa 0 --rad 1"));
  CHECK(doc["jung_bound"].get<double>() == doctest::Approx(1.7320508));
}

TEST_CASE("pipeline exit codes follow the overall pass") {
  TempFile good("cli_good.json"), bad("cli_bad.json"), report("cli_report.json");
  {
    std::ofstream out(good.path);
    out << R"({"kind":"reconstruction","shape":{"id":"circle","r":1.0},
               "n_ref":500,"n_sample":400,"xi":0.0714,"beta":0.6,
               "epsilon":0.3,"noise":0.001,"seed":3,"max_dim":2})";
  }
  {
    std::ofstream out(bad.path);
    out << R"({"kind":"reconstruction","shape":{"id":"circle","r":1.0},
               "n_ref":500,"n_sample":400,"xi":0.0714,"beta":1.4,
               "epsilon":0.3,"noise":0.001,"seed":3,"max_dim":2})";
  }
  CHECK(run("pipeline --config " + good.path + " -o " + report.path) == 0);
  std::ifstream in(report.path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["pass"].get<bool>());
  CHECK(run("pipeline --config " + bad.path) == 1);
}

TEST_CASE("sweep writes a csv table") {
  TempFile config("cli_sweep.json"), csv("cli_sweep.csv"), rep("cli_sweep_report.json");
  {
    std::ofstream out(config.path);
    out << R"({"kind":"convergence","shape":{"id":"circle","r":1.0},
               "n":200,"eps_list":[0.4,0.2]})";
  }
  CHECK(run("sweep --config " + config.path + " --csv " + csv.path + " -o " +
            rep.path) == 0);
  std::ifstream in(csv.path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "epsilon,sup_error,connected");
}

TEST_CASE("mureach subcommand") {
  TempFile cloud("cli_m.csv");
  CHECK(run("sample --shape circle --r 1 -n 500 --mode grid -o " + cloud.path) ==
        0);
  const auto doc = nlohmann::json::parse(run_capture(
      "mureach -i " + cloud.path + " --d 0.1 --probes 100 --seed 2 --mu 0.5"));
  CHECK(doc["rows"][0]["chi_estimate"].get<double>() > 0.9);
}

TEST_CASE("bad inputs exit nonzero with a message") {
  CHECK(run("metric path -i does_not_exist.csv --epsilon 0.5 -o x.fms") != 0);
  const std::string text =
      run_capture("metric path -i does_not_exist.csv --epsilon 0.5 -o x.fms");
  CHECK(text.find("error") != std::string::npos);
}
