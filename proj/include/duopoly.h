/*
 * duopoly — competitive seeding and quality allocation on social networks.
 *
 * C interface to the core library. Networks are opaque handles; every
 * fallible call returns a duop_status and leaves a human-readable message
 * in a thread-local buffer readable through duop_last_error(). Output
 * buffers are caller-allocated; required sizes derive from
 * duop_network_size(). Agent indices in buffers are 0-based and in agent
 * order.
 */
#ifndef DUOPOLY_H
#define DUOPOLY_H

#include <stdint.h>

#if defined(_WIN32)
#define DUOP_API __declspec(dllexport)
#else
#define DUOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum duop_status {
  DUOP_OK = 0,
  DUOP_ERR_INVALID_ARGUMENT = 1,
  DUOP_ERR_ROW_SUM = 2,
  DUOP_ERR_DIAGONAL = 3,
  DUOP_ERR_NEGATIVE_WEIGHT = 4,
  DUOP_ERR_SIZE = 5,
  DUOP_ERR_BOUNDS = 6,
  DUOP_ERR_CAPACITY = 7,
  DUOP_ERR_REGIME = 8,
  DUOP_ERR_PARSE = 9,
  DUOP_ERR_IO = 10,
  DUOP_ERR_SOLVE = 11,
  DUOP_ERR_INTERNAL = 12
} duop_status;

typedef enum duop_firm { DUOP_FIRM_A = 0, DUOP_FIRM_B = 1 } duop_firm;

typedef enum duop_regime {
  DUOP_REGIME_NONE_SEEDABLE = 0,
  DUOP_REGIME_ALL_SEEDABLE = 1,
  DUOP_REGIME_GRAPH_DEPENDENT = 2
} duop_regime;

typedef enum duop_sweep_param {
  DUOP_SWEEP_QA = 0,
  DUOP_SWEEP_QB = 1,
  DUOP_SWEEP_ALPHA = 2,
  DUOP_SWEEP_DELTA = 3,
  DUOP_SWEEP_CS = 4,
  DUOP_SWEEP_CQ = 5
} duop_sweep_param;

typedef enum duop_monotonicity {
  DUOP_MONO_INCREASING = 0,
  DUOP_MONO_DECREASING = 1,
  DUOP_MONO_CONSTANT = 2,
  DUOP_MONO_NON_MONOTONE = 3
} duop_monotonicity;

/* Model parameters. alpha in [1/2, 1], delta in [0, 1), qualities and unit
 * costs positive, budgets nonnegative. */
typedef struct duop_params {
  double alpha;
  double delta;
  double qa;
  double qb;
  double cs;
  double cq;
  double budget_a;
  double budget_b;
} duop_params;

typedef struct duop_network duop_network;

typedef struct duop_centrality_stats {
  double v_bar;
  double v_max;
  double sum;
  double sum_identity; /* 2 alpha n / (2 alpha - delta (1 - alpha)) */
} duop_centrality_stats;

typedef struct duop_allocation {
  double dq;
  double spend_seeding;
  double spend_quality;
  double seed_total; /* |S|_1 */
} duop_allocation;

DUOP_API const char* duop_version(void);

/* Message for the most recent failing call on this thread; empty string if
 * the last call succeeded. */
DUOP_API const char* duop_last_error(void);

DUOP_API const char* duop_status_name(duop_status status);

DUOP_API duop_status duop_params_validate(const duop_params* params);

/* --- networks --------------------------------------------------------- */

/* weights is n*n row-major; weights[i*n+j] is the influence of agent j on
 * agent i. With normalize nonzero every row is rescaled to sum 1 before
 * validation. */
DUOP_API duop_status duop_network_from_weights(int32_t n,
                                               const double* weights,
                                               int32_t normalize,
                                               duop_network** out);
DUOP_API duop_status duop_network_star(int32_t n, duop_network** out);
DUOP_API duop_status duop_network_balanced_ring(int32_t n, int32_t d,
                                                duop_network** out);
DUOP_API duop_status duop_network_k_star(int32_t n, int32_t k,
                                         duop_network** out);

/* Text format: '#' comment lines, a line holding n, then n lines of n
 * weights. */
DUOP_API duop_status duop_network_read(const char* path, int32_t normalize,
                                       duop_network** out);
DUOP_API duop_status duop_network_write(const duop_network* net,
                                        const char* path);

DUOP_API void duop_network_free(duop_network* net);
DUOP_API int32_t duop_network_size(const duop_network* net);
DUOP_API duop_status duop_network_weights(const duop_network* net,
                                          double* out /* n*n */);

/* Reads n whitespace-separated initial consumption offsets. */
DUOP_API duop_status duop_read_initial_state(const char* path, int32_t n,
                                             double* y0_out);

/* --- dynamics --------------------------------------------------------- */

/* Myopic best-response trajectory for t = 0..horizon. y0 may be NULL for
 * the all-zero state. trajectory holds (horizon+1)*n values, row t first. */
DUOP_API duop_status duop_simulate(const duop_network* net,
                                   const duop_params* params,
                                   const double* y0, int32_t horizon,
                                   double* trajectory);
DUOP_API duop_status duop_steady_state(const duop_network* net,
                                       const duop_params* params,
                                       double* y_out);

/* --- centrality ------------------------------------------------------- */

DUOP_API duop_status duop_centrality(const duop_network* net,
                                     const duop_params* params, double* v_out,
                                     duop_centrality_stats* stats /* opt */);
/* Independent series evaluation, truncated at absolute tolerance tol. */
DUOP_API duop_status duop_centrality_series(const duop_network* net,
                                            const duop_params* params,
                                            double tol, double* v_out);
DUOP_API duop_status duop_balanced_centrality(const duop_params* params,
                                              double* out);
DUOP_API duop_status duop_star_centralities(int32_t n,
                                            const duop_params* params,
                                            double* v_hub, double* v_leaf);

/* --- allocation ------------------------------------------------------- */

DUOP_API duop_status duop_lambda(const duop_params* params, int32_t n,
                                 double* out);
DUOP_API duop_status duop_thresholds(const duop_params* params, int32_t n,
                                     double* vc_a, double* vc_b);
DUOP_API duop_status duop_firm_utilities(const duop_network* net,
                                         const duop_params* params,
                                         const double* y0 /* opt */,
                                         double* utility_a,
                                         double* utility_b);
DUOP_API duop_status duop_marginal_utilities(
    const duop_params* params, int32_t n, const double* seeds_a,
    const double* seeds_b, double dq_a, double dq_b, const double* v,
    double* delta_a, double* delta_b);

DUOP_API duop_status duop_optimal_allocation(const duop_network* net,
                                             const duop_params* params,
                                             const double* y0 /* opt */,
                                             duop_firm firm,
                                             double* seeds_out /* n */,
                                             duop_allocation* out);

/* Pair of decoupled optima. joint_y0 (length n) and clamped are optional. */
DUOP_API duop_status duop_equilibrium(const duop_network* net,
                                      const duop_params* params,
                                      const double* y0 /* opt */,
                                      double* seeds_a, duop_allocation* alloc_a,
                                      double* seeds_b, duop_allocation* alloc_b,
                                      double* joint_y0, int32_t* clamped);

/* seeded_mask (optional, length n) receives 1 for agents above the
 * threshold. */
DUOP_API duop_status duop_seeding_capacity(const duop_network* net,
                                           const duop_params* params,
                                           const double* y0 /* opt */,
                                           duop_firm firm, double* capacity,
                                           int32_t* seeded_mask);

DUOP_API duop_status duop_max_seed_count(const duop_params* params, int32_t n,
                                         int32_t* k,
                                         duop_regime* regime /* opt */);
DUOP_API duop_status duop_classify_regime(const duop_params* params, int32_t n,
                                          duop_regime* out);
DUOP_API const char* duop_regime_name(duop_regime regime);

/* --- comparative statics ---------------------------------------------- */

/* Evaluates the firm-a optimal allocation over a strictly increasing grid
 * of the swept parameter. With use_given_budget zero each point uses the
 * generous default budget cs * (total capacity) + 1; otherwise
 * params->budget_a. jobs > 1 evaluates points concurrently. Output arrays
 * have grid_len entries. */
DUOP_API duop_status duop_sweep(const duop_network* net,
                                const duop_params* params,
                                const double* y0 /* opt */,
                                duop_sweep_param parameter, const double* grid,
                                int32_t grid_len, int32_t jobs,
                                int32_t use_given_budget, double* seed_amount,
                                double* seed_spend, double* dq,
                                duop_monotonicity* verdict /* opt */);

DUOP_API duop_status duop_classify_monotonicity(const double* xs, int32_t len,
                                                double tol,
                                                duop_monotonicity* out);
DUOP_API const char* duop_monotonicity_name(duop_monotonicity verdict);

/* holds receives 1 when the instance is consistent with "the higher-quality
 * firm seeds at least as much", 0 otherwise. Budgets must be equal. */
DUOP_API duop_status duop_check_equal_budget(const duop_network* net,
                                             const duop_params* params,
                                             const double* y0 /* opt */,
                                             int32_t* holds);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DUOPOLY_H */
