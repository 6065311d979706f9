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

#include <numeric>
#include <random>

#include "detcount/arith.hpp"
#include "detcount/status.hpp"
#include "doctest.h"

using namespace detcount;

TEST_CASE("gcd on absolute values") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(-4, 6) == 2);
  CHECK(gcd(0, 0) == 0);
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, Modulus(7)) == 5);
  for (i64 q = 2; q < 50; ++q) CHECK(mod_inverse(1, Modulus(q)) == 1);
  try {
    mod_inverse(2, Modulus(4));
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotInvertible);
  }
  CHECK(mod_inverse(-3, Modulus(7)) == 2);
}

TEST_CASE("mod_inverse round trip for large moduli") {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<i64> qdist(2, i64{1} << 62);
  int checked = 0;
  while (checked < 10000) {
    const i64 q = qdist(rng);
    const i64 a = std::uniform_int_distribution<i64>(1, q - 1)(rng);
    if (std::gcd(a, q) != 1) continue;
    const i64 inv = mod_inverse(a, Modulus(q));
    REQUIRE(inv >= 0);
    REQUIRE(inv < q);
    REQUIRE(static_cast<i64>((static_cast<i128>(a) * inv) % q) == 1);
    ++checked;
  }
}

TEST_CASE("mobius examples") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(7) == -1);
}

TEST_CASE("divisors and sigma examples") {
  CHECK(divisors(1) == std::vector<i64>{1});
  CHECK(divisors(6) == std::vector<i64>{1, 2, 3, 6});
  CHECK(divisors(49) == std::vector<i64>{1, 7, 49});
  CHECK(sigma(1) == 1);
  CHECK(sigma(6) == 12);
  CHECK(sigma(10) == 18);
}

TEST_CASE("nonpositive arguments are rejected") {
  CHECK_THROWS_AS(mobius(0), Error);
  CHECK_THROWS_AS(divisors(-6), Error);
  CHECK_THROWS_AS(sigma(0), Error);
  CHECK_THROWS_AS(Modulus(0), Error);
}

TEST_CASE("mobius sums over divisors vanish except at 1") {
  for (i64 n = 1; n <= 10000; ++n) {
    int s = 0;
    for (i64 d : divisors(n)) s += mobius(d);
    REQUIRE(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("sigma equals the divisor sum; tau the divisor count") {
  for (i64 n = 1; n <= 10000; ++n) {
    const auto ds = divisors(n);
    i64 s = 0;
    for (i64 d : ds) s += d;
    REQUIRE(sigma(n) == s);
    REQUIRE(tau(n) == static_cast<i64>(ds.size()));
  }
}

TEST_CASE("divisors agree with a brute-force scan") {
  for (i64 n = 1; n <= 2000; ++n) {
    std::vector<i64> brute;
    for (i64 d = 1; d <= n; ++d) {
      if (n % d == 0) brute.push_back(d);
    }
    REQUIRE(divisors(n) == brute);
  }
}

TEST_CASE("multiplicativity on random coprime pairs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> dist(1, 30000);
  int checked = 0;
  while (checked < 1000) {
    const i64 m = dist(rng), n = dist(rng);
    if (std::gcd(m, n) != 1) continue;
    REQUIRE(sigma(m * n) == sigma(m) * sigma(n));
    REQUIRE(mobius(m * n) == mobius(m) * mobius(n));
    REQUIRE(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
    ++checked;
  }
}

TEST_CASE("euler_phi counts units") {
  for (i64 n = 1; n <= 500; ++n) {
    i64 count = 0;
    for (i64 a = 0; a < n; ++a) {
      if (std::gcd(a, n) == 1) ++count;
    }
    REQUIRE(euler_phi(n) == count);
  }
}

TEST_CASE("is_prime and factorize") {
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(10007));
  CHECK_FALSE(is_prime(10001));
  for (i64 n = 2; n <= 3000; ++n) {
    i64 back = 1;
    for (const auto& pp : factorize(n)) {
      REQUIRE(is_prime(pp.prime));
      for (int e = 0; e < pp.exponent; ++e) back *= pp.prime;
    }
    REQUIRE(back == n);
  }
}

TEST_CASE("jacobi symbol matches Euler's criterion at primes") {
  for (i64 p : {3, 5, 7, 11, 13, 101}) {
    for (i64 a = 0; a < p; ++a) {
      i64 pw = 1;
      for (i64 k = 0; k < (p - 1) / 2; ++k) pw = pw * a % p;
      const int euler = pw == 0 ? 0 : (pw == 1 ? 1 : -1);
      REQUIRE(jacobi(a, p) == euler);
    }
  }
  CHECK(jacobi(2, 15) == 1);
  CHECK(jacobi(7, 15) == -1);
}

TEST_CASE("divisor_ratio is exact") {
  CHECK(divisor_ratio(1) == Rational::make(1, 1));
  CHECK(divisor_ratio(6) == Rational::make(2, 1));
  CHECK(divisor_ratio(-10) == Rational::make(9, 5));
  CHECK(divisor_ratio(25).to_double() == doctest::Approx(31.0 / 25.0));
  try {
    divisor_ratio(0);
    FAIL("expected InvalidR");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidR);
  }
}
