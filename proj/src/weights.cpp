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

#include "detcount/weights.hpp"

#include <cmath>
#include <numbers>

#include "detcount/reduce.hpp"

namespace detcount {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Truncation threshold for dual-side sums.
constexpr double kTermFloor = 1e-14;
constexpr int kQuietTermsToStop = 3;
constexpr double kMaxFrequency = 5000.0;

}  // namespace

double WeightSpec::operator()(double x) const noexcept {
  if (!(x > kSupportLo && x < kSupportHi) || amplitude == 0.0) return 0.0;
  const double g = (x - 1.0) * (2.0 - x);
  // exp underflows to +0 quietly near the endpoints.
  return amplitude * std::exp(-1.0 / g);
}

double WeightSpec::derivative(double x) const noexcept {
  if (!(x > kSupportLo && x < kSupportHi) || amplitude == 0.0) return 0.0;
  const double g = (x - 1.0) * (2.0 - x);
  return amplitude * std::exp(-1.0 / g) * (3.0 - 2.0 * x) / (g * g);
}

double eval_weight(const WeightSpec& spec, double x) noexcept { return spec(x); }

double integral(const WeightSpec& spec, const QuadratureSpec& quad) {
  if (spec.amplitude == 0.0) return 0.0;
  return integrate<double>(spec, kSupportLo, kSupportHi, quad);
}

std::complex<double> fourier(const WeightSpec& spec, double xi, const QuadratureSpec& quad) {
  if (spec.amplitude == 0.0) return {0.0, 0.0};
  const int min_panels = static_cast<int>(std::ceil(10.0 * std::fabs(xi)));
  auto integrand = [&](double x) {
    const double phase = -kTwoPi * xi * x;
    return spec(x) * std::complex<double>(std::cos(phase), std::sin(phase));
  };
  // Below ~1e-16 |amplitude| successive levels differ only by roundoff.
  QuadratureSpec q = quad;
  q.abs_tolerance = std::max(q.abs_tolerance, 1e-16 * std::fabs(spec.amplitude));
  return integrate<std::complex<double>>(integrand, kSupportLo, kSupportHi, q,
                                         std::max(1, min_panels));
}

double poisson_check(const WeightSpec& spec, double scale, const QuadratureSpec& quad) {
  if (!(scale > 0.0)) fail(ErrorCode::kInvalidArgument, "poisson_check: scale must be > 0");
  if (spec.amplitude == 0.0) return 0.0;

  CompensatedSum lhs;
  const auto lo = static_cast<long long>(std::floor(scale * kSupportLo));
  const auto hi = static_cast<long long>(std::ceil(scale * kSupportHi));
  for (long long n = lo; n <= hi; ++n) lhs += spec(static_cast<double>(n) / scale);

  // f(x) = V(x/scale) has f^(n) = scale * V^(scale n); V real, so the +-n
  // terms pair to 2 Re.
  CompensatedSum rhs;
  rhs += scale * fourier(spec, 0.0, quad).real();
  int quiet = 0;
  for (long long n = 1; quiet < kQuietTermsToStop; ++n) {
    const double xi = scale * static_cast<double>(n);
    if (xi > kMaxFrequency) {
      fail(ErrorCode::kQuadratureNotConverged, "poisson_check: dual sum did not decay");
    }
    const double term = 2.0 * scale * fourier(spec, xi, quad).real();
    rhs += term;
    quiet = std::fabs(term) < kTermFloor ? quiet + 1 : 0;
  }
  return std::fabs(lhs.value() - rhs.value());
}

double integrate_3d(const std::function<double(double, double, double)>& f,
                    const QuadratureSpec& quad) {
  return integrate_cube(f, kSupportLo, kSupportHi, quad);
}

double sup_derivative(const WeightSpec& spec) {
  constexpr int kGrid = 20000;
  double best_x = 1.5, best = 0.0;
  for (int i = 1; i < kGrid; ++i) {
    const double x = kSupportLo + static_cast<double>(i) / kGrid;
    const double d = std::fabs(spec.derivative(x));
    if (d > best) {
      best = d;
      best_x = x;
    }
  }
  // Golden-section polish on the bracketing grid cell.
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = best_x - 1.0 / kGrid, b = best_x + 1.0 / kGrid;
  for (int it = 0; it < 80; ++it) {
    const double c = b - phi * (b - a), d = a + phi * (b - a);
    if (std::fabs(spec.derivative(c)) > std::fabs(spec.derivative(d))) {
      b = d;
    } else {
      a = c;
    }
  }
  return std::max(best, std::fabs(spec.derivative(0.5 * (a + b))));
}

}  // namespace detcount
