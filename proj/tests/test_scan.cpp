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

#include <cmath>

#include "detcount/counting.hpp"
#include "detcount/mainterm.hpp"
#include "detcount/scan.hpp"
#include "doctest.h"

using namespace detcount;

TEST_CASE("least squares") {
  const auto fit = least_squares({0.0, 1.0, 2.0}, {1.0, 3.0, 5.0});
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(std::isnan(least_squares({1.0}, {2.0}).slope));
  CHECK(std::isnan(least_squares({1.0, 1.0}, {2.0, 3.0}).slope));
}

TEST_CASE("error scan rows") {
  const QuadratureSpec q;
  const WeightSpec v;
  const auto rep = error_scan(v, 1, {40.0, 60.0}, q);
  REQUIRE(rep.rows.size() == 2);
  for (const auto& row : rep.rows) {
    CHECK(row.S == count_fast(v, {row.X, 1}).weighted_sum);
    CHECK(row.M == main_term_closed(v, {row.X, 1}, q).closed_form);
    CHECK(row.E == row.S - row.M);
    CHECK(row.abs_E == std::fabs(row.E));
    CHECK(row.ratio == doctest::Approx(row.abs_E / std::pow(row.X, 1.2)));
  }
  const double expected = (std::log(rep.rows[1].abs_E) - std::log(rep.rows[0].abs_E)) /
                          (std::log(60.0) - std::log(40.0));
  CHECK(rep.fitted_slope == doctest::Approx(expected));
  CHECK(rep.max_abs_E == std::max(rep.rows[0].abs_E, rep.rows[1].abs_E));
}

TEST_CASE("single-row scan has no slope") {
  const auto rep = error_scan(WeightSpec{}, 1, {40.0}, QuadratureSpec{});
  CHECK(rep.rows.size() == 1);
  CHECK(std::isnan(rep.fitted_slope));
}

TEST_CASE("r and -r scans share the S column") {
  const QuadratureSpec q;
  const auto plus = error_scan(WeightSpec{}, 7, {30.0, 45.0}, q);
  const auto minus = error_scan(WeightSpec{}, -7, {30.0, 45.0}, q);
  for (std::size_t i = 0; i < plus.rows.size(); ++i) CHECK(plus.rows[i].S == minus.rows[i].S);
}

TEST_CASE("scan validation") {
  const QuadratureSpec q;
  const WeightSpec v;
  CHECK_THROWS_AS(error_scan(v, 1, {60.0, 40.0}, q), Error);
  CHECK_THROWS_AS(error_scan(v, 1, {}, q), Error);
  CHECK_THROWS_AS(error_scan(v, 3 * 100, {10.0}, q), Error);
  try {
    r_scan(v, 50.0, {1, 0, 2}, q);
    FAIL("expected InvalidR");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidR);
  }
}

TEST_CASE("r scan deduplicates in first-seen order") {
  const QuadratureSpec q;
  const auto rep = r_scan(WeightSpec{}, 40.0, {3, 1, 3, -2, 1}, q);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0].r == 3);
  CHECK(rep.rows[1].r == 1);
  CHECK(rep.rows[2].r == -2);
  double worst = 0.0;
  for (const auto& row : rep.rows) worst = std::max(worst, row.abs_E);
  CHECK(rep.max_abs_E == worst);
}

TEST_CASE("scans are independent of the thread count") {
  const QuadratureSpec q;
  const auto a = error_scan(WeightSpec{}, 2, {30.0, 41.0, 55.0}, q, 1);
  const auto b = error_scan(WeightSpec{}, 2, {30.0, 41.0, 55.0}, q, 3);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].S == b.rows[i].S);
    CHECK(a.rows[i].M == b.rows[i].M);
  }
  CHECK(a.fitted_slope == b.fitted_slope);
}
