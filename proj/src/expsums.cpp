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

#include "detcount/expsums.hpp"

#include <cmath>
#include <numbers>

#include "detcount/reduce.hpp"

namespace detcount {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTermFloor = 1e-14;
constexpr double kMaxFrequency = 5000.0;

std::complex<double> e(double theta) {
  return {std::cos(kTwoPi * theta), std::sin(kTwoPi * theta)};
}

}  // namespace

KloostermanTable::KloostermanTable(i64 c) : c_(c) {
  const Modulus q(c);
  if (c == 1) {
    // Single residue 0 with inverse 0.
    units_.push_back(0);
    inverses_.push_back(0);
  } else {
    for (i64 b = 1; b < c; ++b) {
      if (gcd(b, c) != 1) continue;
      units_.push_back(b);
      inverses_.push_back(mod_inverse(b, q));
    }
  }
  cos_table_.resize(static_cast<std::size_t>(c));
  for (i64 k = 0; k < c; ++k) {
    cos_table_[static_cast<std::size_t>(k)] =
        std::cos(kTwoPi * static_cast<double>(k) / static_cast<double>(c));
  }
}

double KloostermanTable::sum(i64 m, i64 n) const {
  const Modulus q(c_);
  const i64 mr = q.reduce(m), nr = q.reduce(n);
  CompensatedSum s;
  for (std::size_t i = 0; i < units_.size(); ++i) {
    const i64 k = q.reduce(static_cast<i128>(mr) * units_[i] + static_cast<i128>(nr) * inverses_[i]);
    s += cos_table_[static_cast<std::size_t>(k)];
  }
  return s.value();
}

std::complex<double> KloostermanTable::sum_complex(i64 m, i64 n) const {
  const Modulus q(c_);
  std::complex<double> s{};
  for (std::size_t i = 0; i < units_.size(); ++i) {
    const i64 k = q.reduce(static_cast<i128>(m) * units_[i] + static_cast<i128>(n) * inverses_[i]);
    s += e(static_cast<double>(k) / static_cast<double>(c_));
  }
  return s;
}

double kloosterman(const KloostermanQuery& q) {
  return KloostermanTable(q.c).sum(q.m, q.n);
}

i64 ramanujan(i64 q, i64 n) {
  if (q < 1) fail(ErrorCode::kInvalidArgument, "ramanujan: q must be >= 1");
  i64 s = 0;
  for (const i64 d : divisors(gcd(q, n))) s += d * mobius(q / d);
  return s;
}

std::complex<double> salie(i64 m, i64 n, i64 c) {
  if (c < 1) fail(ErrorCode::kInvalidArgument, "salie: c must be >= 1");
  if (c % 2 == 0) fail(ErrorCode::kEvenModulus, "salie: modulus must be odd");
  if (c == 1) return {1.0, 0.0};
  const Modulus q(c);
  std::complex<double> s{};
  for (i64 b = 1; b < c; ++b) {
    if (gcd(b, c) != 1) continue;
    const i64 k = q.reduce(static_cast<i128>(m) * b + static_cast<i128>(n) * mod_inverse(b, q));
    s += static_cast<double>(jacobi(b, c)) * e(static_cast<double>(k) / static_cast<double>(c));
  }
  return s;
}

WeilGap weil_gap(const KloostermanQuery& q) {
  const double s = std::fabs(kloosterman(q));
  const i64 g = gcd(gcd(q.m, q.n), q.c);
  const double bound = static_cast<double>(tau(q.c)) * std::sqrt(static_cast<double>(q.c)) *
                       std::sqrt(static_cast<double>(g));
  return {s / bound, q.m % q.c == 0 && q.n % q.c == 0};
}

double twisted_poisson_residual(const WeightSpec& spec, i64 a, i64 q, double scale,
                                const QuadratureSpec& quad) {
  if (q < 2) fail(ErrorCode::kInvalidArgument, "twisted Poisson needs q >= 2");
  if (!(scale > 0.0)) fail(ErrorCode::kInvalidArgument, "scale must be > 0");
  if (spec.amplitude == 0.0) return 0.0;
  const Modulus mod(q);
  const double qd = static_cast<double>(q);

  std::complex<double> lhs{};
  const auto lo = static_cast<i64>(std::floor(scale * kSupportLo));
  const auto hi = static_cast<i64>(std::ceil(scale * kSupportHi));
  for (i64 n = lo; n <= hi; ++n) {
    if (gcd(n, q) != 1) continue;
    const double g = spec(static_cast<double>(n) / scale);
    if (g == 0.0) continue;
    const i64 k = mod.mul(mod.reduce(a), mod_inverse(n, mod));
    lhs += g * e(static_cast<double>(k) / qd);
  }

  // g^(xi) = scale * V^(scale xi); g^(-xi) = conj(g^(xi)).
  const KloostermanTable table(q);
  const double phi_over_q = static_cast<double>(euler_phi(q)) / qd;
  std::complex<double> rhs = scale * fourier(spec, 0.0, quad) * table.sum(0, a) / qd;
  // Stop after the dual frequency has stayed negligible across a window of
  // width >= 2 in xi.
  const int quiet_needed = std::max(3, static_cast<int>(std::ceil(2.0 * qd / scale)));
  int quiet = 0;
  for (i64 n = 1; quiet < quiet_needed; ++n) {
    const double xi = scale * static_cast<double>(n) / qd;
    if (xi > kMaxFrequency) {
      fail(ErrorCode::kQuadratureNotConverged, "twisted Poisson: dual sum did not decay");
    }
    const std::complex<double> gh = scale * fourier(spec, xi, quad);
    rhs += (gh * table.sum(n, a) + std::conj(gh) * table.sum(-n, a)) / qd;
    quiet = std::abs(gh) * phi_over_q < kTermFloor ? quiet + 1 : 0;
  }
  return std::abs(lhs - rhs);
}

}  // namespace detcount
