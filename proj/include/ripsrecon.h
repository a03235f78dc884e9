/*
 * ripsrecon C API.
 *
 * C bindings for the shape-reconstruction core: point clouds, finite metric
 * spaces (Euclidean and epsilon-path), Vietoris-Rips flag complexes, Betti
 * numbers, sampling-parameter checks, and the experiment pipelines.
 *
 * Conventions:
 *   - every function returns an rr_status; RR_OK is 0
 *   - output objects are opaque handles released with the matching _free
 *   - on failure, rr_last_error() returns a thread-local message
 *   - strings returned through char** are owned by the caller and released
 *     with rr_string_free
 */

#ifndef RIPSRECON_H
#define RIPSRECON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rr_status {
  RR_OK = 0,
  RR_ERR_INVALID_ARGUMENT = 1,
  RR_ERR_PRECONDITION = 2,
  RR_ERR_DISCONNECTED = 3,
  RR_ERR_IO = 4,
  RR_ERR_INTERNAL = 5
} rr_status;

/* Message describing the most recent failure on this thread. */
const char* rr_last_error(void);

void rr_string_free(char* s);

/* ---- point clouds ---- */

typedef struct rr_cloud rr_cloud;

rr_status rr_cloud_create(const double* coords, size_t n, size_t dim,
                          rr_cloud** out);
rr_status rr_cloud_load(const char* path, rr_cloud** out);
rr_status rr_cloud_save(const rr_cloud* cloud, const char* path);
size_t rr_cloud_size(const rr_cloud* cloud);
size_t rr_cloud_dim(const rr_cloud* cloud);
/* copies n*dim doubles, row-major */
rr_status rr_cloud_coords(const rr_cloud* cloud, double* buffer);
void rr_cloud_free(rr_cloud* cloud);

/* shape_json: {"id": "circle"|"wedge"|"figure_eight"|"ninja_star"|"segment",
 *              "r": ..., "length": ...}
 * mode: "grid" or "uniform". params_out (optional) receives the arclength
 * parameters, caller-allocated with n doubles. */
rr_status rr_shape_sample(const char* shape_json, size_t n, const char* mode,
                          uint64_t seed, rr_cloud** out, double* params_out);
rr_status rr_cloud_perturb(const rr_cloud* cloud, double eta, uint64_t seed,
                           rr_cloud** out);
rr_status rr_hausdorff_distance(const rr_cloud* a, const rr_cloud* b,
                                double* out);

/* ---- finite metric spaces ---- */

typedef struct rr_metric rr_metric;

rr_status rr_metric_euclidean(const rr_cloud* cloud, rr_metric** out);
/* epsilon-path metric; RR_ERR_DISCONNECTED if the graph is not connected */
rr_status rr_metric_path(const rr_cloud* cloud, double epsilon,
                         rr_metric** out);
/* oracle intrinsic metric of a shape restricted to arclength parameters */
rr_status rr_metric_intrinsic(const char* shape_json, const double* params,
                              size_t n, rr_metric** out);
rr_status rr_metric_load(const char* path, rr_metric** out);
rr_status rr_metric_save(const rr_metric* metric, const char* path);
size_t rr_metric_size(const rr_metric* metric);
double rr_metric_get(const rr_metric* metric, size_t i, size_t j);
void rr_metric_free(rr_metric* metric);

/* ---- complexes and homology ---- */

typedef struct rr_complex rr_complex;

rr_status rr_rips_complex(const rr_metric* metric, double beta, int max_dim,
                          rr_complex** out);
rr_status rr_complex_load(const char* path, rr_complex** out);
rr_status rr_complex_save(const rr_complex* complex, const char* path);
size_t rr_complex_count(const rr_complex* complex, int dim);
long long rr_complex_euler(const rr_complex* complex);
rr_status rr_complex_components(const rr_complex* complex, size_t* out);
/* JSON: {"betti":[...],"euler":...,"certified_up_to":...} */
rr_status rr_betti_numbers(const rr_complex* complex, int up_to,
                           char** json_out);
void rr_complex_free(rr_complex* complex);

/* ---- sampling parameters and comparison quantities ---- */

/* min{pi/(4 sqrt(kappa)), rho} for kappa > 0, else rho */
rr_status rr_delta_parameter(double rho, double kappa, double* out);
rr_status rr_jung_bound(int n, double kappa, double rad, double* out);
/* JSON: {"rad":..,"diam":..,"jung_kappa0":..,"four_thirds":..,"pass":..} */
rr_status rr_jung_check(const rr_cloud* cloud, char** json_out);
/* center buffer: dim doubles */
rr_status rr_enclosing_ball(const rr_cloud* cloud, double* center,
                            double* radius);

/* Distortion of the correspondence given as index pairs (pairs_len entries
 * of two uint32 each). JSON result includes the distortion, the implied
 * Gromov-Hausdorff upper bound (half of it), and the diameter-gap lower
 * bound. */
rr_status rr_distortion(const rr_metric* da, const rr_metric* db,
                        const uint32_t* pairs, size_t pairs_len,
                        char** json_out);

/* |dA - dB| <= 2*eps on pairs with min <= R; JSON report with the max gap. */
rr_status rr_closeness_check(const rr_metric* da, const rr_metric* db,
                             const uint32_t* pairs, size_t pairs_len,
                             double eps, double big_r, char** json_out);

/* Critical-function estimate table for the given levels; JSON rows of
 * {d, chi_estimate, probes_landed} plus the implied mu-reach upper bound. */
rr_status rr_mu_reach_table(const rr_cloud* cloud, const double* d_values,
                            size_t d_len, size_t n_probe, uint64_t seed,
                            double mu, char** json_out);

/* ---- pipelines ---- */

/* config/report JSON as documented in the README; pass_out (optional)
 * receives the overall pass flag */
rr_status rr_pipeline_run(const char* config_json, char** report_json,
                          int* pass_out);
/* sweep; csv_out and report_json are both optional */
rr_status rr_sweep_run(const char* config_json, char** csv_out,
                       char** report_json, int* pass_out);

#ifdef __cplusplus
}
#endif

#endif /* RIPSRECON_H */
