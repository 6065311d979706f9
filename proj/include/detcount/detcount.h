// Copyright 2026 The detcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DETCOUNT_DETCOUNT_H_
#define DETCOUNT_DETCOUNT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DC_API __declspec(dllexport)
#else
#define DC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
  DC_OK = 0,
  DC_INVALID_ARGUMENT = 1,
  DC_NOT_INVERTIBLE = 2,
  DC_EMPTY_RANGE = 3,
  DC_QUADRATURE_NOT_CONVERGED = 4,
  DC_EVEN_MODULUS = 5,
  DC_COMPOSITE_MODULUS = 6,
  DC_OUT_OF_VALIDATED_RANGE = 7,
  DC_POLE_AT_NONPOSITIVE_INTEGER = 8,
  DC_INVALID_R = 9,
  DC_INTERNAL = 100
} dc_status;

/* Weight, quadrature and thread settings shared by all calls. */
typedef struct dc_context dc_context;
/* Result of error_scan / r_scan. */
typedef struct dc_report dc_report;

/* Message of the last failed call on this thread; "" after success. */
DC_API const char* dc_last_error_message(void);
DC_API const char* dc_status_name(dc_status status);

DC_API dc_status dc_context_create(dc_context** out);
DC_API void dc_context_destroy(dc_context* ctx);
DC_API dc_status dc_context_set_amplitude(dc_context* ctx, double amplitude);
DC_API dc_status dc_context_set_quadrature(dc_context* ctx, int panels, int nodes,
                                           double abs_tolerance, double rel_tolerance,
                                           int max_depth);
/* 0 selects DETCOUNT_THREADS or the hardware concurrency. */
DC_API dc_status dc_context_set_threads(dc_context* ctx, unsigned threads);

/* weights */
DC_API dc_status dc_weight_eval(const dc_context* ctx, double x, double* out);
DC_API dc_status dc_weight_integral(const dc_context* ctx, double* out);
DC_API dc_status dc_weight_fourier(const dc_context* ctx, double xi, double* re, double* im);
DC_API dc_status dc_poisson_check(const dc_context* ctx, double scale, double* residual);

/* counting */
typedef struct dc_count_result {
  double weighted_sum;
  uint64_t solution_count;
  double elapsed_ms;
} dc_count_result;

DC_API dc_status dc_count(const dc_context* ctx, double X, int64_t r, int naive,
                          dc_count_result* out);

/* main term */
typedef struct dc_main_term {
  double alpha;
  double I_alpha;
  int64_t divisor_num;
  int64_t divisor_den;
  double zeta2_inv;
  double closed_form;
  int has_truncated;
  double truncated_value;
  int64_t k_truncation;
  double tail_bound;
} dc_main_term;

/* k_truncation = 0 evaluates the closed form only. */
DC_API dc_status dc_main_term_eval(const dc_context* ctx, double X, int64_t r,
                                   int64_t k_truncation, dc_main_term* out);
DC_API dc_status dc_k_constant(const dc_context* ctx, int64_t r, double* out);
DC_API dc_status dc_mean_value_constant(const dc_context* ctx, double* out);

/* scans */
typedef struct dc_scaling_row {
  double X;
  int64_t r;
  double S;
  double M;
  double E;
  double abs_E;
  double ratio;
} dc_scaling_row;

DC_API dc_status dc_error_scan(const dc_context* ctx, int64_t r, const double* X_list,
                               size_t count, dc_report** out);
DC_API dc_status dc_r_scan(const dc_context* ctx, double X, const int64_t* r_list,
                           size_t count, dc_report** out);
DC_API size_t dc_report_size(const dc_report* report);
DC_API dc_status dc_report_row(const dc_report* report, size_t index, dc_scaling_row* out);
/* NaN when fewer than two rows have |E| > 1e-9. */
DC_API double dc_report_fitted_slope(const dc_report* report);
DC_API double dc_report_fit_intercept(const dc_report* report);
DC_API double dc_report_max_abs_E(const dc_report* report);
DC_API void dc_report_destroy(dc_report* report);

/* exponential sums */
DC_API dc_status dc_kloosterman(int64_t m, int64_t n, int64_t c, double* out);
DC_API dc_status dc_ramanujan(int64_t q, int64_t n, int64_t* out);
DC_API dc_status dc_salie(int64_t m, int64_t n, int64_t c, double* re, double* im);
DC_API dc_status dc_weil_gap(int64_t m, int64_t n, int64_t c, double* gap, int* degenerate);
DC_API dc_status dc_twisted_poisson(const dc_context* ctx, int64_t a, int64_t q, double scale,
                                    double* residual);

/* mod p */
typedef struct dc_modp_row {
  int64_t p;
  double X;
  double S;
  double M;
  double E;
  double E_over_X2;
} dc_modp_row;

DC_API dc_status dc_modp(const dc_context* ctx, int64_t p, double X, dc_modp_row* out);
/* x_rule as "2sqrt" (X = ceil(2 sqrt p)); rows must hold `count` entries. */
DC_API dc_status dc_modp_scan(const dc_context* ctx, const int64_t* primes, size_t count,
                              const char* x_rule, dc_modp_row* rows);

/* oscillatory weights and Bessel transforms */
typedef struct dc_osc_params {
  int64_t m;
  int64_t n;
  int64_t r1;
  int64_t l;
  double X;
  double x;
  double y;
} dc_osc_params;

/* r1 = r/l, x = 1.5 X, y = 1.5 X / l. */
DC_API dc_status dc_osc_params_default(double X, int64_t r, int64_t m, int64_t n, int64_t l,
                                       dc_osc_params* out);
DC_API dc_status dc_f_support(const dc_osc_params* p, double* lo, double* hi);
DC_API dc_status dc_f_check(const dc_context* ctx, const dc_osc_params* p, double eta,
                            double* re, double* im);
DC_API dc_status dc_f_ddot(const dc_context* ctx, const dc_osc_params* p, double eta,
                           double* re, double* im);
DC_API dc_status dc_f_tilde(const dc_context* ctx, const dc_osc_params* p, int k, double* re,
                            double* im);
DC_API dc_status dc_weighted_kloosterman(const dc_context* ctx, const dc_osc_params* p,
                                         int64_t c_max, double* re, double* im,
                                         double* absolute);
DC_API dc_status dc_bessel_identity(const dc_context* ctx, double x, double y, int k_max,
                                    double* product_residual, double* alternating_residual);
DC_API dc_status dc_j_bessel(int k, double x, double* out);
DC_API dc_status dc_k_bessel_imag(double eta, double t, double* out);

#ifdef __cplusplus
}
#endif

#endif  // DETCOUNT_DETCOUNT_H_
