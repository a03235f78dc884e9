#pragma once

#include <string>

#include <json.hpp>

#include "ripsrecon/shapes.hpp"

namespace ripsrecon {

/// Experiment runners. Each takes a JSON config and produces a JSON report
/// with the config echo, one entry per hypothesis check {name, value, bound,
/// pass}, the observed vs expected Betti profile, runtimes, and an overall
/// "pass" that is true iff every hypothesis holds and the Betti profiles
/// match. Hypothesis failures never abort the run: the remaining steps still
/// execute and the report is marked, so parameter sweeps can map where the
/// sufficient conditions actually bind.
///
/// Conclusions are labeled "betti_certified": equality of Betti profiles is
/// a necessary condition for the homotopy-type claim, not a proof of it.
///
/// Reports are deterministic functions of the config: two runs produce
/// byte-identical JSON except for the "runtimes" object.
///
/// Config (reconstruction):
///   {"kind": "reconstruction",
///    "shape": {"id": "circle", "r": 1.0},
///    "n_ref": 1500, "n_sample": 1000,
///    "xi": 0.0714, "beta": 0.6, "epsilon": 0.1, "noise": 3e-4,
///    "seed": 7, "max_dim": 2}
/// Other kinds: "latschev" (fields: shape, n_net, beta, xi, source =
/// self|scaled|subnet, lambda, stride, seed), "closeness" (same fields as
/// reconstruction), "stability" (shape_a, shape_b, n_net, beta, xi,
/// matching = aligned|nearest).
nlohmann::ordered_json run_pipeline(const nlohmann::json& config);

nlohmann::ordered_json run_reconstruction(const nlohmann::json& config);
nlohmann::ordered_json run_latschev(const nlohmann::json& config);
nlohmann::ordered_json run_closeness_check(const nlohmann::json& config);
nlohmann::ordered_json run_stability(const nlohmann::json& config);

struct SweepResult {
  nlohmann::ordered_json report;
  std::string csv;
};

/// Parameter sweeps producing a CSV table and a JSON report with
/// monotonicity assertions. kind = "convergence" (shape, n, eps_list),
/// "distortion" (shape, n, eps_list, R) or "mu_reach" (shape, n, d_list,
/// probes, mu, seed). Per-cell errors are recorded inline and the sweep
/// continues.
SweepResult run_sweep(const nlohmann::json& config);

/// Parses {"id": ..., <params>} into a shape.
std::unique_ptr<Shape> shape_from_json(const nlohmann::json& spec);

} // namespace ripsrecon
