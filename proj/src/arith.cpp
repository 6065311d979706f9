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

#include "detcount/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "detcount/status.hpp"

namespace detcount {

namespace {

i64 abs64(i64 a) { return a < 0 ? -a : a; }

void require_positive(i64 n, const char* what) {
  if (n <= 0) {
    fail(ErrorCode::kInvalidArgument,
         std::string(what) + ": argument must be >= 1, got " + std::to_string(n));
  }
}

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kEmptyRange: return "EmptyRange";
    case ErrorCode::kQuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::kEvenModulus: return "EvenModulus";
    case ErrorCode::kCompositeModulus: return "CompositeModulus";
    case ErrorCode::kOutOfValidatedRange: return "OutOfValidatedRange";
    case ErrorCode::kPoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorCode::kInvalidR: return "InvalidR";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

Modulus::Modulus(i64 q) : q_(q) {
  if (q < 1) fail(ErrorCode::kInvalidArgument, "modulus must be >= 1");
}

i64 Modulus::reduce(i64 a) const noexcept {
  i64 r = a % q_;
  return r < 0 ? r + q_ : r;
}

i64 Modulus::reduce(i128 a) const noexcept {
  i128 r = a % static_cast<i128>(q_);
  if (r < 0) r += q_;
  return static_cast<i64>(r);
}

i64 Modulus::mul(i64 a, i64 b) const noexcept {
  return reduce(static_cast<i128>(a) * static_cast<i128>(b));
}

i64 gcd(i64 a, i64 b) noexcept {
  a = abs64(a);
  b = abs64(b);
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 mod_inverse(i64 a, const Modulus& q) {
  const i64 m = q.value();
  if (m == 1) return 0;
  // Extended Euclid on (a mod m, m); coefficients stay bounded by m.
  i64 old_r = q.reduce(a), r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i64 quot = old_r / r;
    i64 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    i128 tmp_s = old_s - static_cast<i128>(quot) * s;
    old_s = s;
    s = tmp_s;
  }
  if (old_r != 1) {
    fail(ErrorCode::kNotInvertible,
         std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return q.reduce(old_s);
}

std::vector<PrimePower> factorize(i64 n) {
  require_positive(n, "factorize");
  std::vector<PrimePower> out;
  for (i64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int mobius(i64 n) {
  int mu = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> divs{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t base = divs.size();
    i64 pk = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

i64 sigma(i64 n) {
  i64 s = 1;
  for (const auto& pp : factorize(n)) {
    i64 term = 1, pk = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      pk *= pp.prime;
      term += pk;
    }
    s *= term;
  }
  return s;
}

i64 tau(i64 n) {
  i64 t = 1;
  for (const auto& pp : factorize(n)) t *= pp.exponent + 1;
  return t;
}

i64 euler_phi(i64 n) {
  i64 phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int jacobi(i64 a, i64 n) {
  if (n <= 0 || n % 2 == 0) {
    fail(ErrorCode::kInvalidArgument, "jacobi: modulus must be odd and positive");
  }
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const i64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Rational Rational::make(i64 num, i64 den) {
  if (den == 0) fail(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i64 g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Rational Rational::operator+(const Rational& o) const {
  const i64 g = gcd(den, o.den);
  const i128 n = static_cast<i128>(num) * (o.den / g) + static_cast<i128>(o.num) * (den / g);
  const i128 d = static_cast<i128>(den) * (o.den / g);
  const i128 h = [](i128 x, i128 y) {
    if (x < 0) x = -x;
    while (y != 0) {
      i128 t = x % y;
      x = y;
      y = t;
    }
    return x;
  }(n, d);
  return {static_cast<i64>(n / h), static_cast<i64>(d / h)};
}

Rational divisor_ratio(i64 r) {
  if (r == 0) fail(ErrorCode::kInvalidR, "r must be nonzero");
  const i64 n = abs64(r);
  return Rational::make(sigma(n), n);
}

}  // namespace detcount
