/*
 * leonoma — coverage probability and sum spectral efficiency of NOMA-enabled
 * LEO multi-satellite downlink networks: stochastic-geometry analytics plus a
 * seeded Monte Carlo constellation simulator.
 *
 * C API over an opaque model handle. All functions return ln_status; outputs
 * go through caller-provided buffers. Per-UT buffers must hold at least the
 * setup's UT count (never more than LN_MAX_UTS). ln_last_error() returns a
 * thread-local description of the most recent failure.
 */
#ifndef LEONOMA_H
#define LEONOMA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define LN_MAX_UTS 8

typedef enum ln_status {
  LN_OK = 0,
  LN_ERR_INVALID_ARGUMENT = 1,
  LN_ERR_BAD_CONFIG = 2,
  LN_ERR_NUMERIC = 3,
  LN_ERR_ILL_CONDITIONED = 4,
  LN_ERR_REJECTION_BUDGET = 5,
  LN_ERR_IO = 6,
  LN_ERR_INTERNAL = 7
} ln_status;

typedef enum ln_ordering { LN_ORDER_MSP = 0, LN_ORDER_ISINR = 1 } ln_ordering;
typedef enum ln_pa_scheme { LN_PA_ETPA = 0, LN_PA_ERPA = 1, LN_PA_FPA = 2 } ln_pa_scheme;
typedef enum ln_constellation { LN_CONST_SPPP = 0, LN_CONST_WALKER_DELTA = 1 } ln_constellation;
/* Analytic evaluation route: closed corollary assembly, generic jet
 * derivatives, or automatic (closed for kappa <= 2, jets above). */
typedef enum ln_path { LN_PATH_AUTO = 0, LN_PATH_CLOSED = 1, LN_PATH_JET = 2 } ln_path;
typedef enum ln_log_base { LN_LOG_BASE2 = 0, LN_LOG_NATURAL = 1 } ln_log_base;

typedef struct ln_model ln_model;
typedef struct ln_setup ln_setup;

typedef struct ln_walker_params {
  int total_satellites;
  int num_planes;
  double inclination_deg;
  int phasing_factor;
} ln_walker_params;

typedef struct ln_mc_options {
  uint64_t trials;
  uint64_t seed;
  int constellation;        /* ln_constellation */
  ln_walker_params walker;  /* used when constellation == LN_CONST_WALKER_DELTA */
  int paper_faithful_distances; /* approximate interferer distances by the distance to O */
  int threads;                  /* 0 = auto */
} ln_mc_options;

const char* ln_version(void);
const char* ln_status_message(ln_status status);
const char* ln_last_error(void);
void ln_string_free(char* s);

/* -------- model: system configuration + derived constants + fading ------- */

ln_status ln_model_create_default(ln_model** out);
/* Flat JSON object of SystemConfig fields (km / dBm / dBi / Hz) plus
 * optional "nakagami_m". Unknown keys are rejected. */
ln_status ln_model_create_from_json(const char* json_text, ln_model** out);
void ln_model_destroy(ln_model* model);

/* Settable keys: the JSON field names. Derived read-only keys:
 * "derived.orbit_radius_m", "derived.density_per_m2", "derived.pathloss_ref",
 * "derived.norm_noise", "derived.l_min_m", "derived.l_max_m",
 * "derived.r_min_m", "derived.r_max_m", "derived.gain_ratio". */
ln_status ln_model_set(ln_model* model, const char* key, double value);
ln_status ln_model_get(const ln_model* model, const char* key, double* out);
/* Resolved configuration as JSON; free with ln_string_free. */
ln_status ln_model_to_json(const ln_model* model, char** out);

ln_status ln_walker_defaults(const ln_model* model, ln_walker_params* out);
ln_status ln_mc_options_defaults(const ln_model* model, ln_mc_options* out);

/* -------- NOMA setup ------------------------------------------------------ */

/* fpa_coefficients may be NULL unless scheme == LN_PA_FPA. ERPA coefficients
 * come from the mean ordered link distances of the model. */
ln_status ln_setup_create(const ln_model* model, int num_uts, ln_ordering ordering,
                          ln_pa_scheme scheme, const double* fpa_coefficients, double theta_db,
                          double ri_factor, ln_setup** out);
void ln_setup_destroy(ln_setup* setup);
ln_status ln_setup_get_pa(const ln_setup* setup, double* pa_out);
ln_status ln_setup_effective_pa(const ln_setup* setup, double* p_tilde_out, double* q_out,
                                int* feasible_out);

/* Largest uniform threshold (linear) with all effective PA margins positive. */
ln_status ln_feasibility_boundary(const double* pa, int num_uts, double ri_factor, double* out);

/* -------- distance distributions ----------------------------------------- */

ln_status ln_pdf_link_distance(const ln_model* model, double l_m, double* out);
ln_status ln_cdf_link_distance(const ln_model* model, double l_m, double* out);
ln_status ln_pdf_ordered_link_distance(const ln_model* model, double l_m, int rank_i, int num_uts,
                                       double* out);
ln_status ln_mean_ordered_link_distance(const ln_model* model, int rank_i, int num_uts,
                                        double* out);
/* conditional != 0: normalized on [R_min, R_max]; else scaled by the
 * interferer presence probability. */
ln_status ln_pdf_nearest_interferer(const ln_model* model, double r_m, int conditional,
                                    double* out);

/* -------- interference Laplace transform --------------------------------- */

ln_status ln_laplace_inter(const ln_model* model, double s, double r_m, double* out);
ln_status ln_laplace_inter_deriv(const ln_model* model, double s, double r_m, int order,
                                 double* out);

/* -------- coverage -------------------------------------------------------- */

ln_status ln_coverage_analytic(const ln_model* model, const ln_setup* setup, ln_path path,
                               double* per_ut_out);
ln_status ln_coverage_oma_analytic(const ln_model* model, int num_uts, ln_ordering ordering,
                                   double theta_db, ln_path path, double* per_ut_out);
ln_status ln_cdf_unordered_isinr(const ln_model* model, double x_linear, double* out);
/* Conditional -> unconditional scale: 1 - exp(-lambda 2 pi (R_S - R_E) R_S). */
ln_status ln_unconditional_scale(const ln_model* model, double* out);

ln_status ln_coverage_mc(const ln_model* model, const ln_setup* setup,
                         const ln_mc_options* options, double* per_ut_out, double* stderr_out);
ln_status ln_coverage_oma_mc(const ln_model* model, int num_uts, ln_ordering ordering,
                             double theta_db, const ln_mc_options* options, double* per_ut_out,
                             double* stderr_out);
/* PA recomputed per realization for ERPA; scheme/fpa as in ln_setup_create. */
ln_status ln_coverage_mc_scheme(const ln_model* model, int num_uts, ln_ordering ordering,
                                ln_pa_scheme scheme, const double* fpa_coefficients,
                                double theta_db, double ri_factor, const ln_mc_options* options,
                                double* per_ut_out, double* stderr_out);

/* -------- spectral efficiency and optimizers ------------------------------ */

ln_status ln_sum_se_analytic(const ln_model* model, const ln_setup* setup, ln_log_base log_base,
                             double* per_ut_se_out, double* sum_se_out);
ln_status ln_sum_se_oma_analytic(const ln_model* model, int num_uts, ln_ordering ordering,
                                 double theta_db, ln_log_base log_base, double* sum_se_out);
ln_status ln_sum_se_mc(const ln_model* model, int num_uts, ln_ordering ordering,
                       ln_pa_scheme scheme, const double* fpa_coefficients, double theta_db,
                       double ri_factor, const ln_mc_options* options, ln_log_base log_base,
                       double* sum_se_out, double* sum_se_stderr_out);

ln_status ln_optimize_fpa(const ln_model* model, int num_uts, ln_ordering ordering,
                          double theta_db, double step, ln_log_base log_base, double* pa_out,
                          double* sum_se_out, int* feasible_found_out);
ln_status ln_optimize_ut_count(const ln_model* model, ln_ordering ordering, double theta_db,
                               int n_max, double step, ln_log_base log_base, int* n_out,
                               double* pa_out, double* sum_se_out);

/* -------- Monte Carlo comparisons and exports ----------------------------- */

/* Max absolute per-UT coverage gap between the options' constellation and
 * `second` across the theta grid, with common random numbers. per_theta_gap
 * may be NULL; otherwise it receives n_theta entries. */
ln_status ln_compare_constellations(const ln_model* model, int num_uts, ln_ordering ordering,
                                    ln_pa_scheme scheme, const double* fpa_coefficients,
                                    double ri_factor, const double* theta_db_grid, int n_theta,
                                    const ln_mc_options* options, ln_constellation second,
                                    double* max_gap_out, double* per_theta_gap);

/* One-line-per-satellite snapshot CSV (x_m,y_m,z_m,is_typical). */
ln_status ln_export_snapshot_csv(const ln_model* model, ln_constellation constellation,
                                 const ln_walker_params* walker, uint64_t seed, const char* path);

/* PA scheme helpers. */
ln_status ln_etpa(int num_uts, double* pa_out);
ln_status ln_erpa(const ln_model* model, int num_uts, double* pa_out);

#ifdef __cplusplus
}
#endif

#endif /* LEONOMA_H */
