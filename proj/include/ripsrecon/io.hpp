#pragma once

#include <iosfwd>
#include <string>

#include "ripsrecon/complex.hpp"
#include "ripsrecon/geometry.hpp"

namespace ripsrecon {

// Point clouds: CSV with header "x0,x1,...", one point per row; JSON as
// {"dim": d, "points": [[...], ...]}.
void write_cloud_csv(const PointCloud& cloud, std::ostream& out);
PointCloud read_cloud_csv(std::istream& in);
void write_cloud_json(const PointCloud& cloud, std::ostream& out);
PointCloud read_cloud_json(std::istream& in);

// Distance matrices: dense row-major CSV with 17 significant digits, and a
// compact binary form (magic "FMS1", little-endian u64 n, then n*n float64).
void write_metric_csv(const FiniteMetricSpace& m, std::ostream& out);
FiniteMetricSpace read_metric_csv(std::istream& in);
void write_metric_binary(const FiniteMetricSpace& m, std::ostream& out);
FiniteMetricSpace read_metric_binary(std::istream& in);

// Complexes: text format, one simplex per line (vertices space-separated),
// dimension blocks introduced by "#dim k" headers.
void write_complex_text(const FlagComplex& complex, std::ostream& out);
FlagComplex read_complex_text(std::istream& in);

// File-path conveniences; throw ripsrecon::Error on unreadable/unwritable
// paths. Metric files ending in ".fms" use the binary form, anything else
// CSV. Cloud files ending in ".json" use JSON.
PointCloud load_cloud(const std::string& path);
void save_cloud(const PointCloud& cloud, const std::string& path);
FiniteMetricSpace load_metric(const std::string& path);
void save_metric(const FiniteMetricSpace& m, const std::string& path);
FlagComplex load_complex(const std::string& path);
void save_complex(const FlagComplex& complex, const std::string& path);

} // namespace ripsrecon
