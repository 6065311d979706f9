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

#include "detcount/mainterm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "detcount/reduce.hpp"

namespace detcount {

double zeta2_inv() { return 6.0 / (std::numbers::pi * std::numbers::pi); }

double reduced_integral(const WeightSpec& spec, double alpha, const QuadratureSpec& quad) {
  quad.validate();
  if (std::fabs(alpha) >= 3.0 || spec.amplitude == 0.0) return 0.0;
  const auto& rule = gauss_legendre(quad.nodes);

  // Outer (u, v) tensor rule; for each (u, v) the t-integral runs over the
  // exact support of V(t) V((alpha + uv)/t), i.e. t in (1,2) and
  // (alpha+uv)/2 < t < alpha+uv.
  auto level = [&](int panels) {
    const auto g = composite_nodes(kSupportLo, kSupportHi, panels, rule);
    std::vector<double> vw(g.x.size());
    for (std::size_t i = 0; i < g.x.size(); ++i) vw[i] = spec(g.x[i]) * g.w[i];
    CompensatedSum total;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      const double u = g.x[i];
      for (std::size_t j = 0; j < g.x.size(); ++j) {
        const double s = alpha + u * g.x[j];
        const double t_lo = std::max(kSupportLo, 0.5 * s);
        const double t_hi = std::min(kSupportHi, s);
        if (!(t_hi > t_lo)) continue;
        const double h = (t_hi - t_lo) / panels;
        double inner = 0.0;
        for (int p = 0; p < panels; ++p) {
          const double mid = t_lo + (p + 0.5) * h;
          for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double t = mid + 0.5 * h * rule.nodes[k];
            inner += rule.weights[k] * spec(t) * spec(s / t) / t;
          }
        }
        total += vw[i] * vw[j] * inner * 0.5 * h;
      }
    }
    return total.value();
  };
  return refine_until_converged(level, quad, "reduced integral");
}

MainTermBreakdown main_term_closed(const WeightSpec& spec, const CountQuery& q,
                                   const QuadratureSpec& quad) {
  q.validate();
  MainTermBreakdown out;
  out.alpha = static_cast<double>(q.r) / (q.X * q.X);
  out.I_alpha = reduced_integral(spec, out.alpha, quad);
  out.divisor_factor = divisor_ratio(q.r);
  out.zeta2_inv = zeta2_inv();
  out.closed_form = q.X * q.X * out.divisor_factor.to_double() * out.zeta2_inv * out.I_alpha;
  return out;
}

double mobius_square_partial_sum(i64 K) {
  CompensatedSum s;
  for (i64 k = 1; k <= K; ++k) {
    const int mu = mobius(k);
    if (mu != 0) s += mu / (static_cast<double>(k) * static_cast<double>(k));
  }
  return s.value();
}

MainTermBreakdown main_term_truncated(const WeightSpec& spec, const CountQuery& q, i64 K,
                                      const QuadratureSpec& quad) {
  if (K < 1) fail(ErrorCode::kInvalidArgument, "truncation K must be >= 1");
  MainTermBreakdown out = main_term_closed(spec, q, quad);
  const double X2 = q.X * q.X;
  std::vector<int> mu(static_cast<std::size_t>(K) + 1);
  for (i64 k = 1; k <= K; ++k) mu[static_cast<std::size_t>(k)] = mobius(k);
  CompensatedSum sum;
  for (const i64 l : divisors(q.r < 0 ? -q.r : q.r)) {
    for (i64 k = 1; k <= K; ++k) {
      const int m = mu[static_cast<std::size_t>(k)];
      if (m == 0) continue;
      const double kk = static_cast<double>(k);
      sum += X2 * m / (static_cast<double>(l) * kk * kk) * out.I_alpha;
    }
  }
  out.truncated_value = sum.value();
  out.k_truncation = K;
  out.tail_bound = X2 * out.divisor_factor.to_double() / static_cast<double>(K);
  return out;
}

double k_constant(const WeightSpec& spec, i64 r, const QuadratureSpec& quad) {
  return divisor_ratio(r).to_double() * zeta2_inv() * reduced_integral(spec, 0.0, quad);
}

double mean_value_constant(const WeightSpec& spec, const QuadratureSpec& quad) {
  const double v = integral(spec, quad);
  const double inv_t2 = spec.amplitude == 0.0
                            ? 0.0
                            : integrate<double>([&](double t) { return spec(t) / (t * t); },
                                                kSupportLo, kSupportHi, quad);
  return zeta2_inv() * sup_derivative(spec) * v * v * inv_t2;
}

double error_term(const WeightSpec& spec, const CountQuery& q, const QuadratureSpec& quad,
                  unsigned threads) {
  const double s = count_fast(spec, q, threads).weighted_sum;
  return s - main_term_closed(spec, q, quad).closed_form;
}

}  // namespace detcount
