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

#include "detcount/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "detcount/counting.hpp"
#include "detcount/mainterm.hpp"
#include "detcount/reduce.hpp"

namespace detcount {

namespace {

ScalingRow make_row(const WeightSpec& spec, double X, i64 r, const QuadratureSpec& quad) {
  const CountQuery q{X, r};
  ScalingRow row;
  row.X = X;
  row.r = r;
  row.S = count_fast(spec, q, 1).weighted_sum;
  row.M = main_term_closed(spec, q, quad).closed_form;
  row.E = row.S - row.M;
  row.abs_E = std::fabs(row.E);
  row.ratio = row.abs_E / std::pow(X, kRowExponent);
  return row;
}

template <class Fn>
std::vector<ScalingRow> run_rows(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = default_thread_count();
  return ordered_map<ScalingRow>(n, threads, fn);
}

void finish(ScalingReport& report) {
  std::vector<double> lx, ly;
  for (const auto& row : report.rows) {
    report.max_abs_E = std::max(report.max_abs_E, row.abs_E);
    if (row.abs_E > kFitFloor) {
      lx.push_back(std::log(row.X));
      ly.push_back(std::log(row.abs_E));
    }
  }
  const LineFit fit = least_squares(lx, ly);
  report.fitted_slope = fit.slope;
  report.fit_intercept = fit.intercept;
}

}  // namespace

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (x.size() != y.size() || x.size() < 2) return {nan, nan};
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) return {nan, nan};
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

ScalingReport error_scan(const WeightSpec& spec, i64 r, const std::vector<double>& X_list,
                         const QuadratureSpec& quad, unsigned threads) {
  if (r == 0) fail(ErrorCode::kInvalidR, "r must be nonzero");
  if (X_list.empty()) fail(ErrorCode::kInvalidArgument, "X_list is empty");
  for (std::size_t i = 0; i < X_list.size(); ++i) {
    if (!(X_list[i] > 0.0) || !std::isfinite(X_list[i])) {
      fail(ErrorCode::kInvalidArgument, "X values must be positive and finite");
    }
    if (i > 0 && !(X_list[i] > X_list[i - 1])) {
      fail(ErrorCode::kInvalidArgument, "X_list must be strictly ascending");
    }
  }
  const double xmin = X_list.front();
  if (!(std::fabs(static_cast<double>(r)) < 3.0 * xmin * xmin)) {
    fail(ErrorCode::kInvalidArgument, "error_scan needs |r| < 3 min(X)^2");
  }
  quad.validate();
  ScalingReport report;
  report.rows = run_rows(X_list.size(), threads,
                         [&](std::size_t i) { return make_row(spec, X_list[i], r, quad); });
  finish(report);
  return report;
}

ScalingReport r_scan(const WeightSpec& spec, double X, const std::vector<i64>& r_list,
                     const QuadratureSpec& quad, unsigned threads) {
  if (!(X > 0.0) || !std::isfinite(X)) fail(ErrorCode::kInvalidArgument, "X must be > 0");
  std::vector<i64> rs;
  std::unordered_set<i64> seen;
  for (i64 r : r_list) {
    if (r == 0) fail(ErrorCode::kInvalidR, "r_list contains 0");
    if (!(std::fabs(static_cast<double>(r)) < 3.0 * X * X)) {
      fail(ErrorCode::kInvalidArgument, "r_scan needs |r| < 3 X^2");
    }
    if (seen.insert(r).second) rs.push_back(r);
  }
  if (rs.empty()) fail(ErrorCode::kInvalidArgument, "r_list is empty");
  quad.validate();
  ScalingReport report;
  report.rows =
      run_rows(rs.size(), threads, [&](std::size_t i) { return make_row(spec, X, rs[i], quad); });
  finish(report);
  return report;
}

}  // namespace detcount
