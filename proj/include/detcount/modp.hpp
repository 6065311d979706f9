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

#include <vector>

#include "detcount/arith.hpp"
#include "detcount/counting.hpp"
#include "detcount/weights.hpp"

namespace detcount {

/// Smoothed count of ad - bc = 1 (mod p) over (X, 2X)^4.
struct ModPQuery {
  i64 p = 0;
  double X = 0.0;
  /// Slack factor g(p) >= 1; only used when reporting.
  double g_scale = 1.0;

  /// p must be an odd prime and p^{1/100} < X < p/2.
  void validate() const;
};

CountResult count_modp(const WeightSpec& spec, const ModPQuery& q, unsigned threads = 0);

/// X^4/p * (\int V)^4; cross-checked against X^4/p * V^(0)^4.
double modp_main(const WeightSpec& spec, const ModPQuery& q, const QuadratureSpec& quad);
double modp_main_fourier(const WeightSpec& spec, const ModPQuery& q, const QuadratureSpec& quad);

/// X as a function of p: X = ceil(factor * sqrt(p)) (or unrounded).
struct XRule {
  double factor = 2.0;
  bool round_up = true;

  double operator()(i64 p) const;
  /// Parses "2sqrt", "1.5sqrt"; a trailing "-exact" keeps X unrounded.
  static XRule parse(const std::string& text);
};

struct ModPRow {
  i64 p = 0;
  double X = 0.0;
  double S = 0.0;
  double M = 0.0;
  double E = 0.0;
  double E_over_X2 = 0.0;
};

std::vector<ModPRow> modp_error_scan(const WeightSpec& spec, const std::vector<i64>& primes,
                                     const XRule& rule, const QuadratureSpec& quad,
                                     unsigned threads = 0);

/// sum_{n != 0} V^(n/x), bounded by O(x) for V in C^2.
double fourier_tail_sum(const WeightSpec& spec, double x, const QuadratureSpec& quad);

}  // namespace detcount
