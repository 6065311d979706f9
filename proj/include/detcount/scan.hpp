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
#include "detcount/weights.hpp"

namespace detcount {

struct ScalingRow {
  double X = 0.0;
  i64 r = 0;
  double S = 0.0;
  double M = 0.0;
  double E = 0.0;
  double abs_E = 0.0;
  double ratio = 0.0;  // |E| / X^1.2
};

struct ScalingReport {
  std::vector<ScalingRow> rows;
  /// Least squares of log|E| on log X over rows with |E| > 1e-9; NaN when
  /// fewer than two rows qualify.
  double fitted_slope = 0.0;
  double fit_intercept = 0.0;
  double max_abs_E = 0.0;
};

inline constexpr double kRowExponent = 1.2;
inline constexpr double kFitFloor = 1e-9;

/// One row per X at fixed r. X_list must be strictly ascending with
/// |r| < 3 min(X)^2.
ScalingReport error_scan(const WeightSpec& spec, i64 r, const std::vector<double>& X_list,
                         const QuadratureSpec& quad, unsigned threads = 0);

/// One row per distinct r (first occurrence order) at fixed X.
ScalingReport r_scan(const WeightSpec& spec, double X, const std::vector<i64>& r_list,
                     const QuadratureSpec& quad, unsigned threads = 0);

/// Least-squares line through (x_i, y_i); NaN slope for fewer than 2 points.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace detcount
