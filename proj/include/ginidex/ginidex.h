/* Copyright 2026 The ginidex Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* ginidex -- extended lower/upper Gini indices: population values,
 * exact finite-sample estimators, gamma-model fitting, goodness-of-fit
 * tests and a Monte Carlo study harness.
 *
 * Every function returns GX_OK on success or an error code; outputs are
 * written through pointers only on success.  gx_last_error() returns a
 * thread-local message describing the most recent failure on the calling
 * thread.  Samples are opaque handles created and released through this
 * API.  All functions are thread-safe; a gx_sample may be shared across
 * threads once created.
 */

#ifndef GINIDEX_GINIDEX_H_
#define GINIDEX_GINIDEX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GINIDEX_API __declspec(dllexport)
#else
#define GINIDEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gx_status {
  GX_OK = 0,
  GX_ERR_INVALID_ARGUMENT = 1, /* bad flag/parameter value */
  GX_ERR_DOMAIN = 2,           /* argument outside a function's domain */
  GX_ERR_NO_CONVERGENCE = 3,   /* iteration cap reached */
  GX_ERR_TOLERANCE = 4,        /* quadrature tolerance not met */
  GX_ERR_INSUFFICIENT_SAMPLE = 5, /* n < m or similar */
  GX_ERR_DEGENERATE_DATA = 6,  /* constant/zero-mass data */
  GX_ERR_PARSE = 7,            /* malformed input file */
  GX_ERR_INTERNAL = 8
} gx_status;

typedef enum gx_index_kind {
  GX_KIND_LOWER = 0,
  GX_KIND_UPPER = 1,
  GX_KIND_COMBINED = 2
} gx_index_kind;

typedef enum gx_representation {
  GX_REPR_SURVIVAL = 0,     /* survival integrals on [0, inf)  */
  GX_REPR_QUANTILE = 1,     /* quantile/covariance form on [0, 1] */
  GX_REPR_LORENZ = 2,       /* Lorenz-moment identities */
  GX_REPR_GAMMA_CLOSED = 3  /* reduced lambda-free gamma integral */
} gx_representation;

typedef enum gx_algorithm {
  GX_ALG_BRUTE_FORCE = 0, /* enumeration oracle, n <= 25 */
  GX_ALG_WEIGHTED = 1     /* closed-form combination weights */
} gx_algorithm;

typedef enum gx_ks_mode { GX_KS_EXACT = 0, GX_KS_ASYMPTOTIC = 1 } gx_ks_mode;

typedef enum gx_gof_method {
  GX_GOF_PLUGIN_ASYMPTOTIC = 0,
  GX_GOF_PLUGIN_EXACT = 1,
  GX_GOF_PARAMETRIC_BOOTSTRAP = 2
} gx_gof_method;

typedef struct gx_sample gx_sample; /* opaque */

typedef struct gx_fit_result {
  double alpha;          /* fitted shape */
  double lambda;         /* fitted rate */
  double log_likelihood;
  int iterations;
  int converged; /* 1 if the profile-likelihood gradient met tolerance */
} gx_fit_result;

typedef struct gx_gof_report {
  double statistic_ks;
  double p_value_ks;
  double statistic_cvm;
  double p_value_cvm;
  gx_gof_method method;
  gx_fit_result fitted;
} gx_gof_report;

typedef struct gx_sim_plan {
  double alpha;
  double lambda;
  int m;
  int i;
  const int* sample_sizes;
  size_t n_sizes;
  int replications;
  uint64_t seed;
  int threads; /* result is identical for every thread count */
} gx_sim_plan;

typedef struct gx_sim_row {
  int n;
  gx_index_kind kind;
  double bias;
  double mse;
  double mc_se;
  double truth;
  int replications;
} gx_sim_row;

typedef struct gx_heatmap_cell {
  int m;
  int i;
  double value;
} gx_heatmap_cell;

/* ---- library ---------------------------------------------------------- */

GINIDEX_API const char* gx_version(void);
GINIDEX_API const char* gx_status_name(gx_status status);
/* Thread-local message for the last failing call on this thread. */
GINIDEX_API const char* gx_last_error(void);

/* ---- samples ---------------------------------------------------------- */

GINIDEX_API gx_status gx_sample_create(const double* values, size_t n,
                                       gx_sample** out);
/* CSV reader; column may be NULL for single-column files. */
GINIDEX_API gx_status gx_sample_from_csv(const char* path, const char* column,
                                         gx_sample** out);
/* Builtin datasets shipped with the library; currently "gdp2023". */
GINIDEX_API gx_status gx_sample_builtin(const char* name, gx_sample** out);
GINIDEX_API void gx_sample_free(gx_sample* sample);
GINIDEX_API size_t gx_sample_size(const gx_sample* sample);
GINIDEX_API double gx_sample_sum(const gx_sample* sample);
/* Copies up to capacity values; returns GX_ERR_INVALID_ARGUMENT if the
 * buffer is too small. */
GINIDEX_API gx_status gx_sample_values(const gx_sample* sample, double* out,
                                       size_t capacity);

/* ---- special functions ------------------------------------------------ */

GINIDEX_API gx_status gx_log_gamma(double x, double* out);
GINIDEX_API gx_status gx_reg_lower_inc_gamma(double alpha, double x,
                                             double* out);
GINIDEX_API gx_status gx_digamma(double x, double* out);
/* Exact mode (Marsaglia-Tsang-Wang) requires n <= 1000. */
GINIDEX_API gx_status gx_kolmogorov_cdf(double d, int n, gx_ks_mode mode,
                                        double* out);
GINIDEX_API gx_status gx_cvm_asymptotic_cdf(double w2, double* out);

/* ---- gamma model ------------------------------------------------------ */

GINIDEX_API gx_status gx_gamma_cdf(double alpha, double lambda, double x,
                                   double* out);
GINIDEX_API gx_status gx_gamma_quantile(double alpha, double lambda, double p,
                                        double* out);
GINIDEX_API gx_status gx_fit_gamma(const gx_sample* sample,
                                   gx_fit_result* out);

/* ---- population indices ----------------------------------------------- */

/* Population extended Gini index of Gamma(alpha, lambda); est_error may be
 * NULL.  The value is independent of lambda and, for a given kind, of the
 * representation up to quadrature error. */
GINIDEX_API gx_status gx_gamma_index(double alpha, double lambda, int m,
                                     gx_index_kind kind,
                                     gx_representation repr, double* value,
                                     double* est_error);

/* ---- estimators -------------------------------------------------------- */

GINIDEX_API gx_status gx_estimate(const gx_sample* sample, int m, int i,
                                  gx_index_kind kind, gx_algorithm algorithm,
                                  double* value);
/* Fills cells for 2 <= m <= m_max, 1 <= i <= m (m_max(m_max+1)/2 - 1 of
 * them); count receives the number written. */
GINIDEX_API gx_status gx_heatmap(const gx_sample* sample, gx_index_kind kind,
                                 int m_max, gx_heatmap_cell* cells,
                                 size_t capacity, size_t* count);

/* ---- inference --------------------------------------------------------- */

/* Writes 2 * plan->n_sizes rows (lower then upper per size, sizes in plan
 * order).  Identical bytes for identical plans regardless of threads. */
GINIDEX_API gx_status gx_simulate(const gx_sim_plan* plan, gx_sim_row* rows,
                                  size_t capacity, size_t* count);
/* bootstrap_replications and seed are used only by the bootstrap method. */
GINIDEX_API gx_status gx_gof(const gx_sample* sample, gx_gof_method method,
                             int bootstrap_replications, uint64_t seed,
                             gx_gof_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GINIDEX_GINIDEX_H_ */
