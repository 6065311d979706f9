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
#include <complex>
#include <numeric>
#include <random>

#include "detcount/expsums.hpp"
#include "doctest.h"

using namespace detcount;

namespace {

// Direct O(c^2) oracle: units found by scanning, inverses by search.
std::complex<double> kloosterman_brute(i64 m, i64 n, i64 c) {
  std::complex<double> s = 0.0;
  for (i64 b = 0; b < c; ++b) {
    if (std::gcd(b, c) != 1) continue;
    i64 inv = 0;
    for (i64 t = 0; t < c; ++t) {
      if ((b * t) % c == 1 % c) {
        inv = t;
        break;
      }
    }
    const i64 k = (((m * b + n * inv) % c) + c) % c;
    s += std::polar(1.0, 2.0 * M_PI * double(k) / double(c));
  }
  return s;
}

}  // namespace

TEST_CASE("kloosterman examples") {
  CHECK(kloosterman({1, 1, 2}) == doctest::Approx(1.0));
  CHECK(kloosterman({1, 1, 3}) == doctest::Approx(-1.0));
  for (i64 m : {-3, 0, 5}) CHECK(kloosterman({m, 7, 1}) == 1.0);
}

TEST_CASE("kloosterman matches direct enumeration") {
  for (i64 c = 1; c <= 60; ++c) {
    const KloostermanTable table(c);
    for (i64 m = -4; m <= 6; ++m) {
      for (i64 n = -3; n <= 5; ++n) {
        const auto ref = kloosterman_brute(m, n, c);
        REQUIRE(std::fabs(table.sum(m, n) - ref.real()) <= 1e-12 * std::fabs(ref.real()) + 1e-11);
        REQUIRE(std::fabs(ref.imag()) < 1e-9);
        REQUIRE(std::fabs(table.sum_complex(m, n).imag()) < 1e-9);
      }
    }
  }
}

TEST_CASE("kloosterman symmetry in m and n") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<i64> cd(1, 300), md(-1000, 1000);
  for (int i = 0; i < 1000; ++i) {
    const i64 c = cd(rng), m = md(rng), n = md(rng);
    REQUIRE(std::fabs(kloosterman({m, n, c}) - kloosterman({n, m, c})) <= 1e-11);
  }
}

TEST_CASE("twisted multiplicativity") {
  for (i64 c1 = 1; c1 <= 50; ++c1) {
    for (i64 c2 = 1; c2 <= 50; ++c2) {
      if (std::gcd(c1, c2) != 1) continue;
      const KloostermanTable t1(c1), t2(c2), t12(c1 * c2);
      const i64 inv2 = c1 == 1 ? 0 : mod_inverse(c2, Modulus(c1));
      const i64 inv1 = c2 == 1 ? 0 : mod_inverse(c1, Modulus(c2));
      for (i64 m = 1; m <= 10; ++m) {
        for (i64 n = 1; n <= 10; ++n) {
          const i64 n1 = (n * inv2 % c1) * inv2 % c1;
          const i64 n2 = (n * inv1 % c2) * inv1 % c2;
          const double lhs = t12.sum(m, n);
          const double rhs = t1.sum(m, n1) * t2.sum(m, n2);
          REQUIRE(std::fabs(lhs - rhs) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("ramanujan sums") {
  for (i64 q = 1; q <= 50; ++q) CHECK(ramanujan(q, 1) == mobius(q));
  CHECK(ramanujan(4, 2) == -2);
  CHECK(ramanujan(6, 6) == 2);
  CHECK(ramanujan(6, 6) == doctest::Approx(kloosterman_brute(6, 0, 6).real()));
  for (i64 q = 1; q <= 200; ++q) {
    for (i64 n = -50; n <= 50; ++n) {
      REQUIRE(std::fabs(double(ramanujan(q, n)) - kloosterman({n, 0, q})) <= 1e-9);
    }
  }
  for (i64 q = 1; q <= 500; ++q) {
    for (i64 n = -100; n <= 100; ++n) {
      REQUIRE(std::abs(ramanujan(q, n)) <= gcd(q, n));
    }
  }
}

TEST_CASE("salie sums") {
  CHECK(salie(3, 4, 1) == std::complex<double>(1.0, 0.0));
  try {
    salie(1, 1, 10);
    FAIL("expected EvenModulus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEvenModulus);
  }
  for (i64 p = 3; p <= 200; ++p) {
    if (!is_prime(p)) continue;
    REQUIRE(std::abs(salie(1, 1, p)) <= 2.0 * std::sqrt(double(p)) + 1e-9);
  }
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<i64> cd(0, 99), md(-500, 500);
  for (int i = 0; i < 100; ++i) {
    const i64 c = 2 * cd(rng) + 1, m = md(rng), n = md(rng);
    const auto a = salie(m, n, c), b = salie(n, m, c);
    REQUIRE(std::abs(a - b) < 1e-9);
  }
}

TEST_CASE("weil gap") {
  CHECK(weil_gap({1, 1, 2}).gap == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))));
  for (i64 c = 1; c <= 500; ++c) REQUIRE(weil_gap({1, 1, c}).gap <= 1.0);
  const auto deg = weil_gap({0, 0, 12});
  CHECK(deg.degenerate);
  CHECK_FALSE(weil_gap({1, 0, 12}).degenerate);
}

TEST_CASE("twisted poisson") {
  const QuadratureSpec q;
  const WeightSpec v;
  CHECK(twisted_poisson_residual(v, 1, 5, 20.0, q) < 1e-6);
  CHECK(twisted_poisson_residual(v, 7, 12, 30.0, q) < 1e-6);
  CHECK(twisted_poisson_residual(v, 13, 101, 50.0, q) < 1e-6);
  WeightSpec zero;
  zero.amplitude = 0.0;
  CHECK(twisted_poisson_residual(zero, 1, 5, 20.0, q) == 0.0);
  CHECK_THROWS_AS(twisted_poisson_residual(v, 1, 1, 20.0, q), Error);
}
