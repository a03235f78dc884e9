#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "ripsrecon/complex.hpp"
#include "ripsrecon/io.hpp"
#include "ripsrecon/shapes.hpp"

using namespace ripsrecon;

TEST_CASE("cloud CSV round trip") {
  RandomStream rng(1, "io-cloud");
  for (int trial = 0; trial < 20; ++trial) {
    const auto cloud = oracles::random_cloud(rng, 2 + trial, 2 + trial % 3, 5.0);
    std::stringstream buffer;
    write_cloud_csv(cloud, buffer);
    CHECK(read_cloud_csv(buffer) == cloud);
  }
}

TEST_CASE("cloud CSV header names the coordinates") {
  const auto cloud = PointCloud::from_rows({{1, 2, 3}});
  std::stringstream buffer;
  write_cloud_csv(cloud, buffer);
  std::string header;
  std::getline(buffer, header);
  CHECK(header == "x0,x1,x2");
}

TEST_CASE("cloud JSON round trip") {
  RandomStream rng(2, "io-json");
  const auto cloud = oracles::random_cloud(rng, 17, 3, 2.0);
  std::stringstream buffer;
  write_cloud_json(cloud, buffer);
  CHECK(read_cloud_json(buffer) == cloud);
}

TEST_CASE("metric CSV and binary round trips") {
  RandomStream rng(3, "io-metric");
  for (int trial = 0; trial < 10; ++trial) {
    const auto m =
        euclidean_metric(oracles::random_cloud(rng, 3 + trial, 2, 3.0));
    std::stringstream text;
    write_metric_csv(m, text);
    const auto from_text = read_metric_csv(text);
    REQUIRE(from_text.size() == m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        CHECK(from_text(i, j) == m(i, j)); // 17 digits reproduce doubles

    std::stringstream binary;
    write_metric_binary(m, binary);
    const std::string bytes = binary.str();
    CHECK(bytes.substr(0, 4) == "FMS1");
    CHECK(bytes.size() == 4 + 8 + 8 * m.size() * m.size());
    std::stringstream reread(bytes);
    const auto from_binary = read_metric_binary(reread);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        CHECK(from_binary(i, j) == m(i, j));
  }
}

TEST_CASE("metric loaders reject broken input") {
  std::stringstream bad("nonsense");
  CHECK_THROWS_AS(read_metric_binary(bad), Error);
  std::stringstream asym("0,1\n2,0\n");
  CHECK_THROWS_AS(read_metric_csv(asym), std::invalid_argument);
}

TEST_CASE("complex text round trip") {
  RandomStream rng(4, "io-complex");
  for (int trial = 0; trial < 10; ++trial) {
    const auto cloud = oracles::random_cloud(rng, 5 + trial % 5, 2, 1.0);
    const auto cx =
        rips_complex(euclidean_metric(cloud), rng.uniform(0.4, 1.8), 2);
    std::stringstream buffer;
    write_complex_text(cx, buffer);
    const auto back = read_complex_text(buffer);
    REQUIRE(back.max_dim() == cx.max_dim());
    for (int k = 0; k <= cx.max_dim(); ++k) {
      REQUIRE(back.count(k) == cx.count(k));
      for (std::size_t i = 0; i < cx.count(k); ++i) {
        const auto a = cx.simplex(k, i);
        const auto b = back.simplex(k, i);
        CHECK(std::equal(a.begin(), a.end(), b.begin()));
      }
    }
  }
}

TEST_CASE("complex text format has dimension headers") {
  const auto cx = rips_complex(
      euclidean_metric(PointCloud::from_rows({{0, 0}, {1, 0}})), 1.5, 1);
  std::stringstream buffer;
  write_complex_text(cx, buffer);
  std::string line;
  std::getline(buffer, line);
  CHECK(line == "#dim 0");
  std::getline(buffer, line);
  CHECK(line == "0");
  std::getline(buffer, line);
  CHECK(line == "1");
  std::getline(buffer, line);
  CHECK(line == "#dim 1");
  std::getline(buffer, line);
  CHECK(line == "0 1");
}

TEST_CASE("file helpers pick formats by extension") {
  const auto cloud = PointCloud::from_rows({{0, 0}, {1, 2}});
  const std::string dir = "io_test_tmp_";
  save_cloud(cloud, dir + "c.csv");
  save_cloud(cloud, dir + "c.json");
  CHECK(load_cloud(dir + "c.csv") == cloud);
  CHECK(load_cloud(dir + "c.json") == cloud);

  const auto m = euclidean_metric(cloud);
  save_metric(m, dir + "m.fms");
  save_metric(m, dir + "m.csv");
  CHECK(load_metric(dir + "m.fms")(0, 1) == m(0, 1));
  CHECK(load_metric(dir + "m.csv")(0, 1) == m(0, 1));
  CHECK_THROWS_AS(load_cloud(dir + "missing.csv"), Error);
  for (const char* f : {"c.csv", "c.json", "m.fms", "m.csv"})
    std::remove((dir + f).c_str());
}
