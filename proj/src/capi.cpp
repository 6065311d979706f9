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

#include "detcount/detcount.h"

#include <cmath>
#include <new>
#include <string>
#include <vector>

#include "detcount/counting.hpp"
#include "detcount/expsums.hpp"
#include "detcount/mainterm.hpp"
#include "detcount/modp.hpp"
#include "detcount/scan.hpp"
#include "detcount/spectral.hpp"
#include "detcount/weights.hpp"

struct dc_context {
  detcount::WeightSpec weight;
  detcount::QuadratureSpec quad;
  unsigned threads = 0;
};

struct dc_report {
  detcount::ScalingReport report;
};

namespace {

using namespace detcount;

thread_local std::string g_last_error;

template <class Fn>
dc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return DC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<dc_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return DC_INTERNAL;
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) fail(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

OscWeightParams to_params(const dc_context* ctx, const dc_osc_params* p) {
  require(p, "params");
  OscWeightParams out;
  out.m = p->m;
  out.n = p->n;
  out.r1 = p->r1;
  out.l = p->l;
  out.X = p->X;
  out.x = p->x;
  out.y = p->y;
  if (ctx != nullptr) out.weight = ctx->weight;
  out.validate();
  return out;
}

void write_complex(cplx z, double* re, double* im) {
  require(re, "re");
  require(im, "im");
  *re = z.real();
  *im = z.imag();
}

}  // namespace

extern "C" {

const char* dc_last_error_message(void) { return g_last_error.c_str(); }

const char* dc_status_name(dc_status status) {
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
}

dc_status dc_context_create(dc_context** out) {
  return guarded([&] {
    require(out, "out");
    *out = new dc_context();
  });
}

void dc_context_destroy(dc_context* ctx) { delete ctx; }

dc_status dc_context_set_amplitude(dc_context* ctx, double amplitude) {
  return guarded([&] {
    require(ctx, "context");
    if (!std::isfinite(amplitude)) fail(ErrorCode::kInvalidArgument, "amplitude must be finite");
    ctx->weight.amplitude = amplitude;
  });
}

dc_status dc_context_set_quadrature(dc_context* ctx, int panels, int nodes, double abs_tolerance,
                                    double rel_tolerance, int max_depth) {
  return guarded([&] {
    require(ctx, "context");
    QuadratureSpec q{panels, nodes, abs_tolerance, rel_tolerance, max_depth};
    q.validate();
    ctx->quad = q;
  });
}

dc_status dc_context_set_threads(dc_context* ctx, unsigned threads) {
  return guarded([&] {
    require(ctx, "context");
    ctx->threads = threads;
  });
}

dc_status dc_weight_eval(const dc_context* ctx, double x, double* out) {
  return guarded([&] {
    require(ctx, "context");
    require(out, "out");
    *out = eval_weight(ctx->weight, x);
  });
}

dc_status dc_weight_integral(const dc_context* ctx, double* out) {
  return guarded([&] {
    require(ctx, "context");
    require(out, "out");
    *out = integral(ctx->weight, ctx->quad);
  });
}

dc_status dc_weight_fourier(const dc_context* ctx, double xi, double* re, double* im) {
  return guarded([&] {
    require(ctx, "context");
    write_complex(fourier(ctx->weight, xi, ctx->quad), re, im);
  });
}

dc_status dc_poisson_check(const dc_context* ctx, double scale, double* residual) {
  return guarded([&] {
    require(ctx, "context");
    require(residual, "residual");
    *residual = poisson_check(ctx->weight, scale, ctx->quad);
  });
}

dc_status dc_count(const dc_context* ctx, double X, int64_t r, int naive, dc_count_result* out) {
  return guarded([&] {
    require(ctx, "context");
    require(out, "out");
    const CountQuery q{X, r};
    const CountResult res = naive ? count_naive(ctx->weight, q, ctx->threads)
                                  : count_fast(ctx->weight, q, ctx->threads);
    *out = {res.weighted_sum, res.solution_count, res.elapsed_ms};
  });
}

dc_status dc_main_term_eval(const dc_context* ctx, double X, int64_t r, int64_t k_truncation,
                            dc_main_term* out) {
  return guarded([&] {
    require(ctx, "context");
    require(out, "out");
    if (k_truncation < 0) fail(ErrorCode::kInvalidArgument, "truncation must be >= 0");
    const CountQuery q{X, r};
    const MainTermBreakdown b = k_truncation > 0
                                    ? main_term_truncated(ctx->weight, q, k_truncation, ctx->quad)
                                    : main_term_closed(ctx->weight, q, ctx->quad);
    dc_main_term m{};
    m.alpha = b.alpha;
    m.I_alpha = b.I_alpha;
    m.divisor_num = b.divisor_factor.num;
    m.divisor_den = b.divisor_factor.den;
    m.zeta2_inv = b.zeta2_inv;
    m.closed_form = b.closed_form;
    m.has_truncated = b.truncated_value.has_value() ? 1 : 0;
    m.truncated_value = b.truncated_value.value_or(0.0);
    m.k_truncation = b.k_truncation.value_or(0);
    m.tail_bound = b.tail_bound.value_or(0.0);
    *out = m;
  });
}

dc_status dc_k_constant(const dc_context* ctx, int64_t r, double* out) {
  return guarded([&] {
    require(ctx, "context");
    require(out, "out");
    *out = k_constant(ctx->weight, r, ctx->quad);
  });
}

dc_status dc_mean_value_constant(const dc_context* ctx, double* out) {
  return guarded([&] {
    require(ctx, "context");
    require(out, "out");
    *out = mean_value_constant(ctx->weight, ctx->quad);
  });
}

dc_status dc_error_scan(const dc_context* ctx, int64_t r, const double* X_list, size_t count,
                        dc_report** out) {
  return guarded([&] {
    require(ctx, "context");
    require(out, "out");
    if (count > 0) require(X_list, "X_list");
    std::vector<double> xs(X_list, X_list + count);
    auto* rep = new dc_report{error_scan(ctx->weight, r, xs, ctx->quad, ctx->threads)};
    *out = rep;
  });
}

dc_status dc_r_scan(const dc_context* ctx, double X, const int64_t* r_list, size_t count,
                    dc_report** out) {
  return guarded([&] {
    require(ctx, "context");
    require(out, "out");
    if (count > 0) require(r_list, "r_list");
    std::vector<i64> rs(r_list, r_list + count);
    auto* rep = new dc_report{r_scan(ctx->weight, X, rs, ctx->quad, ctx->threads)};
    *out = rep;
  });
}

size_t dc_report_size(const dc_report* report) {
  return report == nullptr ? 0 : report->report.rows.size();
}

dc_status dc_report_row(const dc_report* report, size_t index, dc_scaling_row* out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    if (index >= report->report.rows.size()) fail(ErrorCode::kInvalidArgument, "row index");
    const ScalingRow& row = report->report.rows[index];
    *out = {row.X, row.r, row.S, row.M, row.E, row.abs_E, row.ratio};
  });
}

double dc_report_fitted_slope(const dc_report* report) { return report->report.fitted_slope; }
double dc_report_fit_intercept(const dc_report* report) { return report->report.fit_intercept; }
double dc_report_max_abs_E(const dc_report* report) { return report->report.max_abs_E; }
void dc_report_destroy(dc_report* report) { delete report; }

dc_status dc_kloosterman(int64_t m, int64_t n, int64_t c, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = kloosterman({m, n, c});
  });
}

dc_status dc_ramanujan(int64_t q, int64_t n, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = ramanujan(q, n);
  });
}

dc_status dc_salie(int64_t m, int64_t n, int64_t c, double* re, double* im) {
  return guarded([&] { write_complex(salie(m, n, c), re, im); });
}

dc_status dc_weil_gap(int64_t m, int64_t n, int64_t c, double* gap, int* degenerate) {
  return guarded([&] {
    require(gap, "gap");
    require(degenerate, "degenerate");
    const WeilGap w = weil_gap({m, n, c});
    *gap = w.gap;
    *degenerate = w.degenerate ? 1 : 0;
  });
}

dc_status dc_twisted_poisson(const dc_context* ctx, int64_t a, int64_t q, double scale,
                             double* residual) {
  return guarded([&] {
    require(ctx, "context");
    require(residual, "residual");
    *residual = twisted_poisson_residual(ctx->weight, a, q, scale, ctx->quad);
  });
}

dc_status dc_modp(const dc_context* ctx, int64_t p, double X, dc_modp_row* out) {
  return guarded([&] {
    require(ctx, "context");
    require(out, "out");
    const ModPQuery q{p, X, 1.0};
    const double S = count_modp(ctx->weight, q, ctx->threads).weighted_sum;
    const double M = modp_main(ctx->weight, q, ctx->quad);
    *out = {p, X, S, M, S - M, (S - M) / (X * X)};
  });
}

dc_status dc_modp_scan(const dc_context* ctx, const int64_t* primes, size_t count,
                       const char* x_rule, dc_modp_row* rows) {
  return guarded([&] {
    require(ctx, "context");
    require(x_rule, "x_rule");
    if (count == 0) return;
    require(primes, "primes");
    require(rows, "rows");
    const std::vector<i64> ps(primes, primes + count);
    const auto out = modp_error_scan(ctx->weight, ps, XRule::parse(x_rule), ctx->quad,
                                     ctx->threads);
    for (size_t i = 0; i < out.size(); ++i) {
      rows[i] = {out[i].p, out[i].X, out[i].S, out[i].M, out[i].E, out[i].E_over_X2};
    }
  });
}

dc_status dc_osc_params_default(double X, int64_t r, int64_t m, int64_t n, int64_t l,
                                dc_osc_params* out) {
  return guarded([&] {
    require(out, "out");
    const auto p = OscWeightParams::make_default(X, r, m, n, l);
    *out = {p.m, p.n, p.r1, p.l, p.X, p.x, p.y};
  });
}

dc_status dc_f_support(const dc_osc_params* p, double* lo, double* hi) {
  return guarded([&] {
    require(lo, "lo");
    require(hi, "hi");
    const Interval iv = f_support(to_params(nullptr, p));
    *lo = iv.lo;
    *hi = iv.hi;
  });
}

dc_status dc_f_check(const dc_context* ctx, const dc_osc_params* p, double eta, double* re,
                     double* im) {
  return guarded([&] {
    require(ctx, "context");
    write_complex(f_check(to_params(ctx, p), eta, ctx->quad), re, im);
  });
}

dc_status dc_f_ddot(const dc_context* ctx, const dc_osc_params* p, double eta, double* re,
                    double* im) {
  return guarded([&] {
    require(ctx, "context");
    write_complex(f_ddot(to_params(ctx, p), eta, ctx->quad), re, im);
  });
}

dc_status dc_f_tilde(const dc_context* ctx, const dc_osc_params* p, int k, double* re,
                     double* im) {
  return guarded([&] {
    require(ctx, "context");
    write_complex(f_tilde(to_params(ctx, p), k, ctx->quad), re, im);
  });
}

dc_status dc_weighted_kloosterman(const dc_context* ctx, const dc_osc_params* p, int64_t c_max,
                                  double* re, double* im, double* absolute) {
  return guarded([&] {
    require(ctx, "context");
    require(absolute, "absolute");
    const auto pair = weighted_kloosterman_sum(to_params(ctx, p), c_max);
    write_complex(pair.signed_sum, re, im);
    *absolute = pair.absolute_sum;
  });
}

dc_status dc_bessel_identity(const dc_context* ctx, double x, double y, int k_max,
                             double* product_residual, double* alternating_residual) {
  return guarded([&] {
    require(ctx, "context");
    require(product_residual, "product_residual");
    require(alternating_residual, "alternating_residual");
    const auto res = bessel_identity_residuals(x, y, k_max, ctx->quad);
    *product_residual = res.product_sum;
    *alternating_residual = res.alternating_sum;
  });
}

dc_status dc_j_bessel(int k, double x, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = j_bessel(k, x);
  });
}

dc_status dc_k_bessel_imag(double eta, double t, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = k_bessel_imag(eta, t);
  });
}

}  // extern "C"
