#ifndef RICCI_RICCI_H
#define RICCI_RICCI_H

/* C interface to the two-summand Ricci iteration library.
 *
 * Handles are opaque and owned by the caller; every handle returned through an
 * out-parameter must be released with the matching *_free function, and is set
 * to null when the call fails. Functions
 * return a ricci_status; on failure ricci_last_error() describes the error for
 * the calling thread until the next call on that thread.
 *
 * String outputs use (buf, cap, needed): the text and its terminating NUL are
 * copied when cap suffices, *needed (if non-null) always receives the required
 * size, and RICCI_ERR_BUFFER is returned when cap is too small. */

#include <stddef.h>

#if defined(_WIN32)
#define RICCI_API __declspec(dllexport)
#else
#define RICCI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ricci_status {
  RICCI_OK = 0,
  RICCI_ERR_ARGUMENT = 1,   /* null pointer or invalid argument */
  RICCI_ERR_DOMAIN = 2,     /* outside the domain of the operation */
  RICCI_ERR_PARSE = 3,      /* unparsable space document */
  RICCI_ERR_SCHEMA = 4,     /* missing or malformed field */
  RICCI_ERR_VALIDATION = 5, /* structure data violates an invariant */
  RICCI_ERR_NUMERICAL = 6,  /* root bracketing or step-size failure */
  RICCI_ERR_IO = 7,
  RICCI_ERR_BUFFER = 8,     /* output buffer too small */
  RICCI_ERR_INTERNAL = 9
} ricci_status;

typedef struct ricci_space ricci_space;
typedef struct ricci_trajectory ricci_trajectory;
typedef struct ricci_flow ricci_flow;

RICCI_API const char* ricci_last_error(void);
RICCI_API const char* ricci_status_name(ricci_status status);

/* ---- spaces ---- */

/* Names of the fixed catalog entries, one per line. */
RICCI_API ricci_status ricci_catalog_names(char* buf, size_t cap, size_t* needed);
RICCI_API ricci_status ricci_space_from_catalog(const char* name, ricci_space** out);
/* reject_invalid != 0 refuses data that fails validation. */
RICCI_API ricci_status ricci_space_load(const char* path, int reject_invalid, ricci_space** out);
RICCI_API ricci_status ricci_space_parse(const char* json, int reject_invalid, ricci_space** out);
RICCI_API ricci_status ricci_space_save(const ricci_space* space, const char* path);
RICCI_API ricci_status ricci_space_to_json(const ricci_space* space, char* buf, size_t cap,
                                           size_t* needed);
RICCI_API void ricci_space_free(ricci_space* space);

typedef struct ricci_space_summary {
  int summands;
  int dimension;
  int dims[2];        /* first two summand dimensions */
  int is_maximal;
  int has_intermediate;
  int trivial_first_summand;
} ricci_space_summary;

RICCI_API ricci_status ricci_space_describe(const ricci_space* space, ricci_space_summary* out);
RICCI_API ricci_status ricci_space_name(const ricci_space* space, char* buf, size_t cap,
                                        size_t* needed);
/* *violations receives the count; the report text goes to buf (may be null with cap 0). */
RICCI_API ricci_status ricci_space_validate(const ricci_space* space, double tol, int* violations,
                                            char* buf, size_t cap, size_t* needed);

/* ---- curvature ---- */

RICCI_API ricci_status ricci_ricci_components(const ricci_space* space, const double* x, size_t n,
                                              double* out);
RICCI_API ricci_status ricci_scalar_curvature(const ricci_space* space, const double* x, size_t n,
                                              double* out);

/* ---- Einstein metrics and the prescribed problem ---- */

typedef struct ricci_einstein {
  int count;
  double ratios[3];
  double constants[3];
  int multiplicities[3];
  double alpha_minus; /* NaN when count == 0 */
  double alpha_plus;
} ricci_einstein;

RICCI_API ricci_status ricci_find_einstein(const ricci_space* space, ricci_einstein* out);
/* 1 when (alpha, 1) has infinite Ricci index. */
RICCI_API ricci_status ricci_membership_infinite(const ricci_space* space, double alpha, int* out);

typedef struct ricci_solution {
  int solvable;
  double alpha_g;
  double c;
  int unique;
  double residual;
  double threshold; /* solvability bound on alpha_T when not solvable */
} ricci_solution;

/* Solves Ric g = c (alpha_T, 1). Unsolvable targets are RICCI_OK with solvable = 0. */
RICCI_API ricci_status ricci_solve(const ricci_space* space, double alpha_T, ricci_solution* out);

/* ---- regimes ---- */

typedef enum ricci_regime {
  RICCI_REGIME_MAXIMAL = 0,
  RICCI_REGIME_INTERMEDIATE_TRIVIAL = 1,
  RICCI_REGIME_INTERMEDIATE_NONTRIVIAL = 2,
  RICCI_REGIME_INTERMEDIATE_NO_EINSTEIN = 3,
  RICCI_REGIME_CONSTANT_RICCI = 4,
  RICCI_REGIME_UNCLASSIFIED = 5
} ricci_regime;

typedef enum ricci_ancient_limit {
  RICCI_ANCIENT_NONE = 0,
  RICCI_ANCIENT_EINSTEIN = 1,
  RICCI_ANCIENT_COLLAPSE = 2
} ricci_ancient_limit;

typedef struct ricci_prediction {
  int regime;
  double alpha_minus;
  double alpha_plus;
  int einstein_empty;
  int trivial_first_summand;
  int forward_exists;
  double forward_limit_ratio;
  int ancient_member;
  int ancient_limit;
  double ancient_limit_ratio;
} ricci_prediction;

RICCI_API ricci_status ricci_classify(const ricci_space* space, double alpha_T,
                                      ricci_prediction* out);
RICCI_API const char* ricci_regime_name(int regime);
RICCI_API const char* ricci_ancient_limit_name(int limit);

/* ---- iterations ---- */

typedef enum ricci_outcome_tag {
  RICCI_CONVERGED_EINSTEIN = 0,
  RICCI_NO_ITERATION_EXISTS = 1,
  RICCI_STOPPED_FINITE = 2,
  RICCI_COLLAPSED_TO_SUBGROUP = 3,
  RICCI_DIVERGED_POSITIVITY_LOSS = 4,
  RICCI_INCONCLUSIVE = 5
} ricci_outcome_tag;

typedef struct ricci_outcome {
  int tag;
  double limit_ratio;
  double limit_x1; /* NaN when there is no limit */
  double limit_x2;
  int step;
  int component;
  double initial_scale_c;
} ricci_outcome;

typedef struct ricci_record {
  int step;
  double alpha, x1, x2, r1, r2, c, scalar;
} ricci_record;

RICCI_API ricci_status ricci_run_forward(const ricci_space* space, double alpha_T, int max_steps,
                                         double tol, ricci_trajectory** out);
RICCI_API ricci_status ricci_run_ancient(const ricci_space* space, double x1, double x2, int steps,
                                         double tol, ricci_trajectory** out);
RICCI_API ricci_status ricci_trajectory_outcome(const ricci_trajectory* traj, ricci_outcome* out);
RICCI_API ricci_status ricci_trajectory_reason(const ricci_trajectory* traj, char* buf, size_t cap,
                                               size_t* needed);
RICCI_API size_t ricci_trajectory_length(const ricci_trajectory* traj);
RICCI_API ricci_status ricci_trajectory_record(const ricci_trajectory* traj, size_t index,
                                               ricci_record* out);
RICCI_API ricci_status ricci_trajectory_csv(const ricci_trajectory* traj, char* buf, size_t cap,
                                            size_t* needed);
RICCI_API ricci_status ricci_trajectory_write_csv(const ricci_trajectory* traj, const char* path);
RICCI_API void ricci_trajectory_free(ricci_trajectory* traj);
RICCI_API const char* ricci_outcome_name(int tag);

typedef enum ricci_index_kind {
  RICCI_INDEX_FINITE = 0,
  RICCI_INDEX_INFINITE = 1,
  RICCI_INDEX_CAP_REACHED = 2
} ricci_index_kind;

RICCI_API ricci_status ricci_ricci_index(const ricci_space* space, double x1, double x2, int cap,
                                         int* kind, int* value);

/* ---- flow ---- */

typedef enum ricci_flow_outcome {
  RICCI_FLOW_RATIO_CONVERGED = 0,
  RICCI_FLOW_RATIO_COLLAPSED = 1,
  RICCI_FLOW_RATIO_DIVERGED = 2,
  RICCI_FLOW_EXTINCTION = 3,
  RICCI_FLOW_INCONCLUSIVE = 4
} ricci_flow_outcome;

typedef struct ricci_flow_sample {
  double t, alpha, x1, x2, scalar;
} ricci_flow_sample;

RICCI_API ricci_status ricci_flow_rhs(const ricci_space* space, const double* x, size_t n,
                                      double* out);
RICCI_API ricci_status ricci_ratio_flow_rhs(const ricci_space* space, double alpha, double* out);
RICCI_API ricci_status ricci_integrate_ratio_flow(const ricci_space* space, double alpha0,
                                                  double t_max, double dt, ricci_flow** out);
RICCI_API ricci_status ricci_integrate_flow(const ricci_space* space, double x1, double x2,
                                            double t_max, double dt, ricci_flow** out);
RICCI_API ricci_status ricci_flow_result(const ricci_flow* flow, int* outcome, double* limit_ratio);
RICCI_API size_t ricci_flow_length(const ricci_flow* flow);
RICCI_API ricci_status ricci_flow_get_sample(const ricci_flow* flow, size_t index,
                                             ricci_flow_sample* out);
RICCI_API ricci_status ricci_flow_csv(const ricci_flow* flow, char* buf, size_t cap,
                                      size_t* needed);
RICCI_API ricci_status ricci_flow_write_csv(const ricci_flow* flow, const char* path);
RICCI_API void ricci_flow_free(ricci_flow* flow);
RICCI_API const char* ricci_flow_outcome_name(int outcome);

typedef struct ricci_comparison {
  double alpha0;
  int regime;
  int iteration;
  double iteration_limit_ratio;
  int flow;
  double flow_limit_ratio;
  int agree;
  int divergence_flagged;
  int divergence_expected;
} ricci_comparison;

RICCI_API ricci_status ricci_compare_flow_iteration(const ricci_space* space, double alpha0,
                                                    double t_max, double dt,
                                                    ricci_comparison* out);

#ifdef __cplusplus
}
#endif

#endif
