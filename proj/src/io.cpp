#include "ripsrecon/io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace ripsrecon {

namespace {

std::vector<double> parse_csv_row(const std::string& line) {
  std::vector<double> values;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    if (field.empty()) continue;
    values.push_back(std::stod(field));
  }
  return values;
}

std::uint64_t byteswap64(std::uint64_t x) {
  std::uint64_t r = 0;
  for (int i = 0; i < 8; ++i) r = (r << 8) | ((x >> (8 * i)) & 0xff);
  return r;
}

void write_f64_le(std::ostream& out, double v) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  if constexpr (std::endian::native == std::endian::big)
    bits = byteswap64(bits);
  out.write(reinterpret_cast<const char*>(&bits), 8);
}

double read_f64_le(std::istream& in) {
  std::uint64_t bits = 0;
  in.read(reinterpret_cast<char*>(&bits), 8);
  if constexpr (std::endian::native == std::endian::big)
    bits = byteswap64(bits);
  return std::bit_cast<double>(bits);
}

} // namespace

void write_cloud_csv(const PointCloud& cloud, std::ostream& out) {
  for (std::size_t k = 0; k < cloud.dim(); ++k)
    out << (k ? "," : "") << "x" << k;
  out << "\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto p = cloud.point(i);
    for (std::size_t k = 0; k < cloud.dim(); ++k)
      out << (k ? "," : "") << p[k];
    out << "\n";
  }
}

PointCloud read_cloud_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("empty point-cloud CSV");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(parse_csv_row(line));
  }
  return PointCloud::from_rows(rows);
}

void write_cloud_json(const PointCloud& cloud, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["dim"] = cloud.dim();
  auto& pts = doc["points"] = nlohmann::json::array();
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto p = cloud.point(i);
    pts.push_back(std::vector<double>(p.begin(), p.end()));
  }
  out << doc.dump();
}

PointCloud read_cloud_json(std::istream& in) {
  nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<std::vector<double>> rows;
  for (const auto& p : doc.at("points"))
    rows.push_back(p.get<std::vector<double>>());
  PointCloud cloud = PointCloud::from_rows(rows);
  if (doc.contains("dim") && doc["dim"].get<std::size_t>() != cloud.dim())
    throw Error("declared dimension does not match the points");
  return cloud;
}

void write_metric_csv(const FiniteMetricSpace& m, std::ostream& out) {
  out << std::setprecision(17);
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? "," : "") << m(i, j);
    out << "\n";
  }
}

FiniteMetricSpace read_metric_csv(std::istream& in) {
  std::vector<double> flat;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto row = parse_csv_row(line);
    if (n == 0) n = row.size();
    if (row.size() != n) throw Error("ragged distance-matrix CSV");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (flat.size() != n * n) throw Error("distance matrix is not square");
  return FiniteMetricSpace::checked(std::move(flat), n);
}

void write_metric_binary(const FiniteMetricSpace& m, std::ostream& out) {
  out.write("FMS1", 4);
  std::uint64_t n = m.size();
  if constexpr (std::endian::native == std::endian::big) n = byteswap64(n);
  out.write(reinterpret_cast<const char*>(&n), 8);
  for (double v : m.data()) write_f64_le(out, v);
}

FiniteMetricSpace read_metric_binary(std::istream& in) {
  char magic[4] = {};
  in.read(magic, 4);
  if (std::memcmp(magic, "FMS1", 4) != 0)
    throw Error("bad magic; not an FMS1 file");
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&n), 8);
  if constexpr (std::endian::native == std::endian::big) n = byteswap64(n);
  if (!in || n == 0 || n > (1ull << 20))
    throw Error("implausible point count in FMS1 header");
  std::vector<double> flat(n * n);
  for (double& v : flat) v = read_f64_le(in);
  if (!in) throw Error("truncated FMS1 file");
  return FiniteMetricSpace::checked(std::move(flat), n);
}

void write_complex_text(const FlagComplex& complex, std::ostream& out) {
  for (int k = 0; k <= complex.max_dim(); ++k) {
    out << "#dim " << k << "\n";
    for (std::size_t i = 0; i < complex.count(k); ++i) {
      auto s = complex.simplex(k, i);
      for (int v = 0; v <= k; ++v) out << (v ? " " : "") << s[v];
      out << "\n";
    }
  }
}

FlagComplex read_complex_text(std::istream& in) {
  std::string line;
  int dim = -1;
  std::vector<std::vector<std::uint32_t>> cells;
  std::uint32_t max_vertex = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("#dim", 0) == 0) {
      dim = std::stoi(line.substr(4));
      if (dim != static_cast<int>(cells.size()))
        throw Error("dimension blocks out of order in complex file");
      cells.emplace_back();
      continue;
    }
    if (dim < 0) throw Error("simplex before any #dim header");
    std::stringstream ss(line);
    std::uint32_t v;
    int count = 0;
    while (ss >> v) {
      cells[dim].push_back(v);
      max_vertex = std::max(max_vertex, v);
      ++count;
    }
    if (count != dim + 1) throw Error("simplex arity does not match its block");
  }
  if (cells.empty()) throw Error("empty complex file");
  const std::size_t n_vertices = cells[0].size();
  for (std::size_t v = 0; v < n_vertices; ++v)
    if (cells[0][v] != v) throw Error("vertex block must list 0..n-1 in order");
  FlagComplex out(static_cast<std::uint32_t>(n_vertices),
                  static_cast<int>(cells.size()) - 1);
  if (max_vertex >= n_vertices) throw Error("vertex index out of range");
  for (int k = 1; k < static_cast<int>(cells.size()); ++k)
    out.push_simplex(k, cells[k]); // bulk append, already lex-sorted on write
  return out;
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::ifstream open_in(const std::string& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

} // namespace

PointCloud load_cloud(const std::string& path) {
  auto in = open_in(path, false);
  return ends_with(path, ".json") ? read_cloud_json(in) : read_cloud_csv(in);
}

void save_cloud(const PointCloud& cloud, const std::string& path) {
  auto out = open_out(path, false);
  if (ends_with(path, ".json"))
    write_cloud_json(cloud, out);
  else
    write_cloud_csv(cloud, out);
}

FiniteMetricSpace load_metric(const std::string& path) {
  const bool binary = ends_with(path, ".fms");
  auto in = open_in(path, binary);
  return binary ? read_metric_binary(in) : read_metric_csv(in);
}

void save_metric(const FiniteMetricSpace& m, const std::string& path) {
  const bool binary = ends_with(path, ".fms");
  auto out = open_out(path, binary);
  if (binary)
    write_metric_binary(m, out);
  else
    write_metric_csv(m, out);
}

FlagComplex load_complex(const std::string& path) {
  auto in = open_in(path, false);
  return read_complex_text(in);
}

void save_complex(const FlagComplex& complex, const std::string& path) {
  auto out = open_out(path, false);
  write_complex_text(complex, out);
}

} // namespace ripsrecon
