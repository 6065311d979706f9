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

#include "detcount/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "detcount/expsums.hpp"
#include "detcount/reduce.hpp"

namespace detcount {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

cplx e(double theta) { return {std::cos(kTwoPi * theta), std::sin(kTwoPi * theta)}; }

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Quadrature used by the Bessel kernels; tighter than the default because
// the results feed cancellation-sensitive transforms.
QuadratureSpec kernel_quad() {
  QuadratureSpec q;
  q.rel_tolerance = 1e-13;
  q.abs_tolerance = 1e-15;
  q.max_depth = 12;
  return q;
}

}  // namespace

void OscWeightParams::validate() const {
  if (m == 0 || n == 0 || r1 == 0) {
    fail(ErrorCode::kInvalidArgument, "m, n and r1 must be nonzero");
  }
  if (l < 1) fail(ErrorCode::kInvalidArgument, "l must be >= 1");
  if (!(X > 0.0)) fail(ErrorCode::kInvalidArgument, "X must be > 0");
  const double ly = static_cast<double>(l) * y;
  if (!(x > X && x < 2.0 * X) || !(ly > X && ly < 2.0 * X)) {
    fail(ErrorCode::kInvalidArgument, "need X < x < 2X and X < l y < 2X");
  }
}

double OscWeightParams::scale_T() const {
  return static_cast<double>(l) * std::sqrt(std::fabs(static_cast<double>(m) * n * r1)) / X;
}

double OscWeightParams::argument_numerator() const {
  return 4.0 * kPi * std::sqrt(std::fabs(static_cast<double>(m) * n * r1));
}

OscWeightParams OscWeightParams::make_default(double X, i64 r, i64 m, i64 n, i64 l,
                                              const WeightSpec& weight) {
  if (l < 1 || r % l != 0) fail(ErrorCode::kInvalidArgument, "l must be a positive divisor of r");
  OscWeightParams p;
  p.m = m;
  p.n = n;
  p.r1 = r / l;
  p.l = l;
  p.X = X;
  p.x = 1.5 * X;
  p.y = 1.5 * X / static_cast<double>(l);
  p.weight = weight;
  p.validate();
  return p;
}

Interval v_support(const OscWeightParams& p) {
  const double ld = static_cast<double>(p.l);
  const double s = static_cast<double>(p.r1) + p.y * p.x;
  Interval iv{p.X / ld, 2.0 * p.X / ld};
  if (s <= 0.0) return {0.0, 0.0};
  iv.lo = std::max(iv.lo, s / (2.0 * p.X));
  iv.hi = std::min(iv.hi, s / p.X);
  return iv;
}

Interval f_support(const OscWeightParams& p) {
  const Interval u = v_support(p);
  if (u.empty()) return {0.0, 0.0};
  const double num = p.argument_numerator();
  return {num / u.hi, num / u.lo};
}

cplx v_weight(const OscWeightParams& p, double u) {
  if (!(u > 0.0)) fail(ErrorCode::kInvalidArgument, "v_weight: u must be > 0");
  const double ld = static_cast<double>(p.l);
  const double s = static_cast<double>(p.r1) + p.y * p.x;
  const double amp = p.X / (ld * u) * p.weight(ld * u / p.X) * p.weight(s / (u * p.X));
  if (amp == 0.0) return {0.0, 0.0};
  return amp * e(-(static_cast<double>(p.n) * p.x + static_cast<double>(p.m) * p.y) / u);
}

cplx v_weight_derivative(const OscWeightParams& p, double u) {
  if (!(u > 0.0)) fail(ErrorCode::kInvalidArgument, "v_weight: u must be > 0");
  const double ld = static_cast<double>(p.l);
  const double s = static_cast<double>(p.r1) + p.y * p.x;
  const double freq = static_cast<double>(p.n) * p.x + static_cast<double>(p.m) * p.y;
  const double a = p.X / (ld * u), da = -p.X / (ld * u * u);
  const double b = p.weight(ld * u / p.X), db = p.weight.derivative(ld * u / p.X) * ld / p.X;
  const double c = p.weight(s / (u * p.X));
  const double dc = p.weight.derivative(s / (u * p.X)) * (-s / (u * u * p.X));
  const cplx phase = e(-freq / u);
  const cplx dphase = phase * cplx(0.0, kTwoPi * freq / (u * u));
  return (da * b * c + a * db * c + a * b * dc) * phase + a * b * c * dphase;
}

cplx f_weight(const OscWeightParams& p, double t) {
  if (!(t > 0.0)) fail(ErrorCode::kInvalidArgument, "f_weight: t must be > 0");
  return v_weight(p, p.argument_numerator() / t);
}

cplx complex_log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    fail(ErrorCode::kPoleAtNonpositiveInteger, "Gamma has a pole at nonpositive integers");
  }
  if (z.real() < 0.5) {
    return std::log(kPi) - std::log(std::sin(kPi * z)) - complex_log_gamma(1.0 - z);
  }
  z -= 1.0;
  cplx series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(kTwoPi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

cplx complex_gamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    fail(ErrorCode::kPoleAtNonpositiveInteger, "Gamma has a pole at nonpositive integers");
  }
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
  return std::exp(complex_log_gamma(z));
}

double k_bessel_imag_cosh(double eta, double t) {
  if (!(t >= 1e-3)) {
    fail(ErrorCode::kQuadratureNotConverged, "K_{2i eta}(t) needs t >= 1e-3");
  }
  const double mu = 2.0 * std::fabs(eta);
  // e^{-t cosh u} < 1e-18 beyond u_max.
  const double u_max = std::acosh(std::max(1.0, 41.5 / t)) + 0.5;
  const int min_panels = std::max(4, static_cast<int>(std::ceil(u_max * mu / kPi)));
  return integrate<double>(
      [&](double u) { return std::exp(-t * std::cosh(u)) * std::cos(mu * u); }, 0.0, u_max,
      kernel_quad(), min_panels);
}

double k_bessel_imag_series(double eta, double t) {
  if (!(t > 0.0)) fail(ErrorCode::kInvalidArgument, "t must be > 0");
  const double mu = 2.0 * std::fabs(eta);
  if (mu == 0.0) fail(ErrorCode::kInvalidArgument, "series route needs eta != 0");
  // I_{i mu}(t) = sum_k (t/2)^{2k + i mu} / (k! Gamma(k + 1 + i mu)).
  const double half = 0.5 * t;
  cplx term = std::exp(cplx(0.0, mu * std::log(half))) / complex_gamma(cplx(1.0, mu));
  cplx sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= half * half / (static_cast<double>(k) * cplx(k, mu));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return -kPi * sum.imag() / std::sinh(kPi * mu);
}

double k_bessel_imag(double eta, double t) {
  // The series has no cancellation for small t, while the cosh integral
  // loses ~pi|eta| digits there; the cosh integral is used otherwise.
  if (t <= 2.0 && 2.0 * std::fabs(eta) >= 0.5) return k_bessel_imag_series(eta, t);
  return k_bessel_imag_cosh(eta, t);
}

double j_bessel(int k, double x) {
  if (k < 0 || k > 200 || !(std::fabs(x) <= 100.0)) {
    fail(ErrorCode::kOutOfValidatedRange, "j_bessel: need 0 <= k <= 200 and |x| <= 100");
  }
  const double sign = (x < 0.0 && k % 2 == 1) ? -1.0 : 1.0;
  const double ax = std::fabs(x);
  if (ax == 0.0) return k == 0 ? 1.0 : 0.0;

  if (ax <= 1.0) {
    // Power series; terms decrease monotonically for |x| <= 1.
    const double half = 0.5 * ax;
    double term = std::exp(k * std::log(half) - std::lgamma(k + 1.0));
    double sum = term;
    for (int m = 1; m < 100; ++m) {
      term *= -half * half / (static_cast<double>(m) * (m + k));
      sum += term;
      if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sign * sum;
  }

  // Miller's downward recurrence normalized by J0 + 2 sum J_{2j} = 1.
  const int base = std::max(k, static_cast<int>(std::ceil(ax)));
  const int start = 2 * ((base + 30 + static_cast<int>(std::sqrt(60.0 * base))) / 2);
  double jp = 0.0, jc = 1e-30, result = 0.0, norm = 0.0;
  for (int j = start; j > 0; --j) {
    const double jm = (2.0 * j / ax) * jc - jp;
    jp = jc;
    jc = jm;
    if (j - 1 == k) result = jc;
    if ((j - 1) % 2 == 0 && j - 1 > 0) norm += 2.0 * jc;
    if (std::fabs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      result *= 1e-250;
      norm *= 1e-250;
    }
  }
  norm += jc;
  return sign * result / norm;
}

cplx j_bessel_imag_order(double eta, double x) {
  if (!(x > 0.0 && x <= 30.0) || !(std::fabs(eta) <= 30.0)) {
    fail(ErrorCode::kOutOfValidatedRange, "J_{2i eta}(x) needs 0 < x <= 30, |eta| <= 30");
  }
  const double mu = 2.0 * eta;
  const double half = 0.5 * x;
  const cplx lead = std::exp(cplx(0.0, mu) * std::log(half)) / complex_gamma(cplx(1.0, mu));
  // Terms reach e^x / x before the alternating sum settles near 1; summing in
  // binary128 keeps that cancellation below double precision for x <= 30.
  using quad = __float128;
  const quad h2 = static_cast<quad>(half) * static_cast<quad>(half);
  const quad qmu = mu;
  quad tr = 1, ti = 0, sr = 1, si = 0;
  for (int m = 1; m < 1000; ++m) {
    // term *= -h^2 / (m (m + i mu)) = -h^2 (m - i mu) / (m (m^2 + mu^2))
    const quad qm = m;
    const quad scale = -h2 / (qm * (qm * qm + qmu * qmu));
    const quad nr = (tr * qm + ti * qmu) * scale;
    const quad ni = (ti * qm - tr * qmu) * scale;
    tr = nr;
    ti = ni;
    sr += tr;
    si += ti;
    const quad tmag = (tr < 0 ? -tr : tr) + (ti < 0 ? -ti : ti);
    const quad smag = (sr < 0 ? -sr : sr) + (si < 0 ? -si : si);
    if (m > half && tmag < static_cast<quad>(1e-32) * smag) break;
  }
  return lead * cplx(static_cast<double>(sr), static_cast<double>(si));
}

cplx f_check(const OscWeightParams& p, double eta, const QuadratureSpec& quad) {
  p.validate();
  if (eta == 0.0) fail(ErrorCode::kInvalidArgument, "f_check needs eta != 0");
  const Interval sup = f_support(p);
  if (sup.empty() || p.weight.amplitude == 0.0) return {0.0, 0.0};
  const cplx integral = integrate<cplx>(
      [&](double t) { return k_bessel_imag(eta, t) * f_weight(p, t) / t; }, sup.lo, sup.hi,
      quad);
  return 4.0 / kPi * integral;
}

cplx f_ddot(const OscWeightParams& p, double eta, const QuadratureSpec& quad) {
  p.validate();
  if (eta == 0.0) fail(ErrorCode::kInvalidArgument, "f_ddot needs eta != 0");
  const Interval sup = f_support(p);
  if (sup.empty() || p.weight.amplitude == 0.0) return {0.0, 0.0};
  if (sup.hi > 30.0) {
    fail(ErrorCode::kOutOfValidatedRange, "support of f exceeds the validated J range");
  }
  const cplx integral = integrate<cplx>(
      [&](double x) {
        const cplx diff = j_bessel_imag_order(eta, x) - j_bessel_imag_order(-eta, x);
        return diff * f_weight(p, x) / x;
      },
      sup.lo, sup.hi, quad);
  return cplx(0.0, kPi) / std::sinh(kTwoPi * eta) * integral;
}

cplx f_tilde(const OscWeightParams& p, int k, const QuadratureSpec& quad) {
  p.validate();
  if (k < 2 || k > 100 || k % 2 != 0) {
    fail(ErrorCode::kInvalidArgument, "f_tilde needs even k in [2, 100]");
  }
  const Interval sup = f_support(p);
  if (sup.empty() || p.weight.amplitude == 0.0) return {0.0, 0.0};
  if (sup.hi > 100.0) fail(ErrorCode::kOutOfValidatedRange, "support of f exceeds |x| <= 100");
  // 4 (k-1)! / (4 pi i)^k with i^{-k} = (-1)^{k/2} for even k; the factorial
  // ratio is formed in log space.
  const double magnitude = 4.0 * std::exp(std::lgamma(static_cast<double>(k)) -
                                          k * std::log(4.0 * kPi));
  const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
  const cplx integral = integrate<cplx>(
      [&](double x) { return j_bessel(k - 1, x) * f_weight(p, x) / x; }, sup.lo, sup.hi, quad);
  return sign * magnitude * integral;
}

KloostermanSumPair weighted_kloosterman_sum(const OscWeightParams& p, i64 C_max) {
  p.validate();
  if (C_max < 1) fail(ErrorCode::kInvalidArgument, "C_max must be >= 1");
  KloostermanSumPair out;
  const Interval u = v_support(p);
  if (u.empty()) return out;
  // f(4 pi sqrt|m n r1| / c) vanishes unless c lies in the support of v.
  const i64 c_lo = std::max<i64>(1, static_cast<i64>(std::floor(u.lo)));
  const i64 c_hi = std::min<i64>(C_max, static_cast<i64>(std::ceil(u.hi)));
  const double num = p.argument_numerator();
  CompensatedSum re, im, abs_sum;
  for (i64 c = c_lo; c <= c_hi; ++c) {
    const cplx fv = f_weight(p, num / static_cast<double>(c));
    if (fv == cplx(0.0, 0.0)) continue;
    const double s = KloostermanTable(c).sum(p.n * p.r1, -p.m);
    const cplx term = s * fv / static_cast<double>(c);
    re += term.real();
    im += term.imag();
    abs_sum += std::fabs(s) * std::abs(fv) / static_cast<double>(c);
  }
  out.signed_sum = {re.value(), im.value()};
  out.absolute_sum = abs_sum.value();
  return out;
}

BesselIdentityResiduals bessel_identity_residuals(double x, double y, int k_max,
                                                  const QuadratureSpec& quad) {
  if (!(x > 0.0 && x <= 20.0) || !(y > 0.0 && y <= 20.0)) {
    fail(ErrorCode::kOutOfValidatedRange, "identity check needs 0 < x, y <= 20");
  }
  if (k_max < 40 || k_max % 2 != 0) {
    fail(ErrorCode::kInvalidArgument, "k_max must be even and >= 40");
  }
  CompensatedSum product, alternating;
  for (int k = 2; k <= k_max; k += 2) {
    const double jx = j_bessel(k - 1, x);
    product += 2.0 * (k - 1) * jx * j_bessel(k - 1, y);
    // i^{-k} = (-1)^{k/2} for even k.
    alternating += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * (k - 1) * jx;
  }
  QuadratureSpec q = quad;
  q.abs_tolerance = std::min(q.abs_tolerance, 1e-16);
  q.rel_tolerance = std::min(q.rel_tolerance, 1e-13);
  const double rhs_a =
      x * y *
      integrate<double>([&](double u) { return u * j_bessel(0, u * x) * j_bessel(0, u * y); },
                        0.0, 1.0, q);
  const double rhs_b = -0.5 * x * j_bessel(0, x);
  return {std::fabs(product.value() - rhs_a), std::fabs(alternating.value() - rhs_b)};
}

}  // namespace detcount
