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
#include <functional>

#include "detcount/quadrature.hpp"

namespace detcount {

enum class WeightKind { kCanonicalBump };

/// The smooth weight V: amplitude * exp(-1/((x-1)(2-x))) on (1, 2), zero
/// elsewhere.
struct WeightSpec {
  WeightKind kind = WeightKind::kCanonicalBump;
  double amplitude = 1.0;

  double operator()(double x) const noexcept;
  /// Analytic first derivative V'(x).
  double derivative(double x) const noexcept;
};

inline constexpr double kSupportLo = 1.0;
inline constexpr double kSupportHi = 2.0;

double eval_weight(const WeightSpec& spec, double x) noexcept;

/// \int_1^2 V(t) dt.
double integral(const WeightSpec& spec, const QuadratureSpec& quad);

/// Fourier transform with e(theta) = exp(2 pi i theta):
///   V^(xi) = \int V(x) e(-xi x) dx.
/// Panels are at most 1/(10|xi|) wide.
std::complex<double> fourier(const WeightSpec& spec, double xi, const QuadratureSpec& quad);

/// |sum_n V(n/scale) - scale * sum_n V^(scale n)|; both sides truncated once
/// terms drop below 1e-14.
double poisson_check(const WeightSpec& spec, double scale, const QuadratureSpec& quad);

/// \iiint_{[1,2]^3} f(u, v, t).
double integrate_3d(const std::function<double(double, double, double)>& f,
                    const QuadratureSpec& quad);

/// sup |V'| on (1, 2), located by golden-section refinement of a dense scan.
double sup_derivative(const WeightSpec& spec);

}  // namespace detcount
