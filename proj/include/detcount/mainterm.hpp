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

#pragma once

#include <optional>

#include "detcount/arith.hpp"
#include "detcount/counting.hpp"
#include "detcount/weights.hpp"

namespace detcount {

/// Ramanujan-Petersson exponent currently known (Kim-Sarnak).
inline constexpr double kTheta = 7.0 / 64.0;

struct MainTermBreakdown {
  double alpha = 0.0;
  double I_alpha = 0.0;
  Rational divisor_factor;  // sigma(|r|)/|r|
  double zeta2_inv = 0.0;
  double closed_form = 0.0;
  std::optional<double> truncated_value;
  std::optional<i64> k_truncation;
  std::optional<double> tail_bound;
};

/// 1/zeta(2) = 6/pi^2.
double zeta2_inv();

/// I(alpha) = \iiint_{[1,2]^3} V(u) V(v) V(t) V((alpha + uv)/t) du dv dt / t.
/// Exactly zero for |alpha| >= 3.
double reduced_integral(const WeightSpec& spec, double alpha, const QuadratureSpec& quad);

/// X^2 * sigma(|r|)/|r| * zeta(2)^{-1} * I(r/X^2).
MainTermBreakdown main_term_closed(const WeightSpec& spec, const CountQuery& q,
                                   const QuadratureSpec& quad);

/// The divisor/Moebius double sum evaluated literally for k <= K. Each
/// (l, k) term is X^2 mu(k)/(l k^2) * I(r/X^2).
MainTermBreakdown main_term_truncated(const WeightSpec& spec, const CountQuery& q, i64 K,
                                      const QuadratureSpec& quad);

/// sum_{k <= K} mu(k)/k^2.
double mobius_square_partial_sum(i64 K);

/// K(V, r) = zeta(2)^{-1} * sigma(|r|)/|r| * I(0).
double k_constant(const WeightSpec& spec, i64 r, const QuadratureSpec& quad);

/// Mean-value constant C with |M_V(X,r)/X^2 - K(V,r)| <= (sigma(|r|)/|r|) C |r|/X^2:
///   C = zeta(2)^{-1} sup|V'| (\int V)^2 \int V(t)/t^2 dt.
double mean_value_constant(const WeightSpec& spec, const QuadratureSpec& quad);

/// S_V(X, r) - M_V(X, r) using count_fast and the closed form.
double error_term(const WeightSpec& spec, const CountQuery& q, const QuadratureSpec& quad,
                  unsigned threads = 0);

}  // namespace detcount
