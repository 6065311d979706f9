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
#include <utility>

#include "detcount/arith.hpp"
#include "detcount/weights.hpp"

namespace detcount {

using cplx = std::complex<double>;

/// Parameters (m, n, r1, l, X, x, y) of the oscillatory weights
///   v(u) = X/(l u) V(l u/X) V((r1 + y x)/(u X)) e(-n x/u) e(-m y/u),
///   f(t) = v(4 pi sqrt|m n r1| / t).
struct OscWeightParams {
  i64 m = 1;
  i64 n = 1;
  i64 r1 = 1;
  i64 l = 1;
  double X = 100.0;
  double x = 150.0;
  double y = 150.0;
  WeightSpec weight;

  void validate() const;
  /// T = l sqrt|m n r1| / X.
  double scale_T() const;
  /// 4 pi sqrt|m n r1|, the numerator of the argument map t <-> u.
  double argument_numerator() const;

  /// r1 = r/l, x = 1.5 X and y = 1.5 X / l.
  static OscWeightParams make_default(double X, i64 r, i64 m, i64 n, i64 l,
                                      const WeightSpec& weight = {});
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty() const noexcept { return !(hi > lo); }
};

/// u-interval where both V factors of v are nonzero.
Interval v_support(const OscWeightParams& p);
/// The image of v_support under u -> 4 pi sqrt|m n r1| / u.
Interval f_support(const OscWeightParams& p);

cplx v_weight(const OscWeightParams& p, double u);
/// Analytic dv/du.
cplx v_weight_derivative(const OscWeightParams& p, double u);
cplx f_weight(const OscWeightParams& p, double t);

/// K_{2 i eta}(t), the kernel of f-check. Real for real eta.
double k_bessel_imag(double eta, double t);
/// The cosh-integral route \int_0^inf e^{-t cosh u} cos(2 eta u) du alone.
double k_bessel_imag_cosh(double eta, double t);
/// The power-series route -pi Im I_{2 i eta}(t) / sinh(2 pi eta) alone.
double k_bessel_imag_series(double eta, double t);

/// J_k(x) for 0 <= k <= 200, |x| <= 100.
double j_bessel(int k, double x);

cplx complex_gamma(cplx z);
/// Principal log Gamma for Re z >= 0.5 (continued by reflection below).
cplx complex_log_gamma(cplx z);

/// J_{2 i eta}(x) by its power series, 0 < x <= 30, |eta| <= 30.
cplx j_bessel_imag_order(double eta, double x);

cplx f_check(const OscWeightParams& p, double eta, const QuadratureSpec& quad);
cplx f_ddot(const OscWeightParams& p, double eta, const QuadratureSpec& quad);
cplx f_tilde(const OscWeightParams& p, int k, const QuadratureSpec& quad);

struct KloostermanSumPair {
  cplx signed_sum;
  double absolute_sum = 0.0;
};

/// sum_{c <= C_max} S(n r1, -m, c)/c * f(4 pi sqrt|m n r1| / c) together with
/// the companion sum of |S| |f| / c.
KloostermanSumPair weighted_kloosterman_sum(const OscWeightParams& p, i64 C_max);

struct BesselIdentityResiduals {
  double product_sum = 0.0;      // sum 2(k-1) J J  vs  xy \int u J0 J0
  double alternating_sum = 0.0;  // sum (k-1) i^{-k} J  vs  -x/2 J0
};

BesselIdentityResiduals bessel_identity_residuals(double x, double y, int k_max,
                                                  const QuadratureSpec& quad);

}  // namespace detcount
