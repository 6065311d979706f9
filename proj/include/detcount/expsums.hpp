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

#include <complex>
#include <vector>

#include "detcount/arith.hpp"
#include "detcount/weights.hpp"

namespace detcount {

struct KloostermanQuery {
  i64 m = 0;
  i64 n = 0;
  i64 c = 1;
};

/// Units modulo c with their inverses and a cosine table, reused across
/// many (m, n) at a fixed modulus.
class KloostermanTable {
 public:
  explicit KloostermanTable(i64 c);

  i64 modulus() const noexcept { return c_; }
  /// S(m, n; c) through the cosine pairing (the sum is real).
  double sum(i64 m, i64 n) const;
  /// Same sum with complex exponentials; the imaginary part is rounding noise.
  std::complex<double> sum_complex(i64 m, i64 n) const;

 private:
  i64 c_;
  std::vector<i64> units_;
  std::vector<i64> inverses_;
  std::vector<double> cos_table_;
};

double kloosterman(const KloostermanQuery& q);

/// r_q(n) = sum_{d | (q, n)} d mu(q/d).
i64 ramanujan(i64 q, i64 n);

/// Jacobi-twisted Kloosterman sum for odd c; throws kEvenModulus otherwise.
std::complex<double> salie(i64 m, i64 n, i64 c);

struct WeilGap {
  double gap = 0.0;
  /// m = n = 0 (mod c): S = phi(c) and the bound is not the interesting one.
  bool degenerate = false;
};

/// |S(m,n;c)| / (tau(c) sqrt(c) sqrt(gcd(m,n,c))).
WeilGap weil_gap(const KloostermanQuery& q);

/// |sum_{(n,q)=1} g(n) e(a nbar/q) - (1/q) sum_n g^(n/q) S(n,a,q)| with
/// g(x) = V(x/scale).
double twisted_poisson_residual(const WeightSpec& spec, i64 a, i64 q, double scale,
                                const QuadratureSpec& quad);

}  // namespace detcount
