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

#include <cstdint>
#include <vector>

namespace detcount {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

/// Positive modulus q >= 1. Arithmetic modulo q goes through 128-bit
/// intermediates so any q below 2^63 is safe.
class Modulus {
 public:
  explicit Modulus(i64 q);
  i64 value() const noexcept { return q_; }
  /// Canonical residue in [0, q).
  i64 reduce(i64 a) const noexcept;
  i64 reduce(i128 a) const noexcept;
  i64 mul(i64 a, i64 b) const noexcept;

 private:
  i64 q_;
};

i64 gcd(i64 a, i64 b) noexcept;

/// Inverse of a modulo q in [0, q). Throws kNotInvertible if gcd(a, q) > 1.
/// For q == 1 the only residue is 0.
i64 mod_inverse(i64 a, const Modulus& q);

struct PrimePower {
  i64 prime;
  int exponent;
};

/// Trial-division factorization of n >= 1, primes ascending.
std::vector<PrimePower> factorize(i64 n);

int mobius(i64 n);
std::vector<i64> divisors(i64 n);
i64 sigma(i64 n);
/// Number of divisors.
i64 tau(i64 n);
i64 euler_phi(i64 n);
bool is_prime(i64 n);

/// Jacobi symbol (a | n) for odd n >= 1.
int jacobi(i64 a, i64 n);

/// Exact rational with positive denominator, always reduced.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  static Rational make(i64 num, i64 den);
  Rational operator+(const Rational& o) const;
  bool operator==(const Rational& o) const = default;
  double to_double() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

/// sigma(|r|)/|r| as a reduced fraction, r != 0.
Rational divisor_ratio(i64 r);

}  // namespace detcount
