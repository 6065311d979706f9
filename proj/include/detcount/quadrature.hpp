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

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "detcount/status.hpp"

namespace detcount {

/// Composite Gauss-Legendre rule with uniform panels. Each refinement level
/// doubles the panel count; integration stops once two successive levels
/// agree to within max(abs_tolerance, rel_tolerance * |value|).
struct QuadratureSpec {
  int panels = 4;
  int nodes = 16;
  double abs_tolerance = 1e-18;
  double rel_tolerance = 1e-10;
  int max_depth = 10;

  void validate() const;
};

/// Nodes and weights on [-1, 1], cached per order.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int order);

namespace detail {

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const std::complex<double>& z) { return std::abs(z); }

inline bool converged(double diff, double value, const QuadratureSpec& q) {
  return diff <= q.abs_tolerance || diff <= q.rel_tolerance * value;
}

// Fixed composite rule with `panels` equal panels over [a, b]. Panel sums
// are added in ascending order.
template <class T, class F>
T composite(F& f, double a, double b, int panels, const GaussLegendreRule& rule) {
  const double h = (b - a) / panels;
  T total{};
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    T part{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      part += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    total += part * (0.5 * h);
  }
  return total;
}

}  // namespace detail

/// Integrates f over [a, b] with at least `min_panels` panels. T is double
/// or std::complex<double>.
template <class T, class F>
T integrate(F&& f, double a, double b, const QuadratureSpec& q, int min_panels = 1) {
  q.validate();
  const auto& rule = gauss_legendre(q.nodes);
  int panels = std::max(q.panels, min_panels);
  T prev = detail::composite<T>(f, a, b, panels, rule);
  for (int depth = 1; depth <= q.max_depth; ++depth) {
    panels *= 2;
    T cur = detail::composite<T>(f, a, b, panels, rule);
    if (detail::converged(detail::magnitude(cur - prev), detail::magnitude(cur), q)) {
      return cur;
    }
    prev = cur;
  }
  fail(ErrorCode::kQuadratureNotConverged,
       "1-D quadrature did not converge on [" + std::to_string(a) + ", " +
           std::to_string(b) + "]");
}

/// Flattened composite nodes/weights for `panels` equal panels over [a, b].
struct CompositeNodes {
  std::vector<double> x;
  std::vector<double> w;
};
CompositeNodes composite_nodes(double a, double b, int panels, const GaussLegendreRule& rule);

/// Runs level(panels) with doubling panel counts until two successive levels
/// agree. Shared by the multi-dimensional rules.
template <class Level>
double refine_until_converged(Level&& level, const QuadratureSpec& q, const char* what) {
  int panels = q.panels;
  double prev = level(panels);
  for (int depth = 1; depth <= q.max_depth; ++depth) {
    panels *= 2;
    const double cur = level(panels);
    if (detail::converged(std::fabs(cur - prev), std::fabs(cur), q)) return cur;
    prev = cur;
  }
  fail(ErrorCode::kQuadratureNotConverged, std::string(what) + " did not converge");
}

/// Tensor-product rule over the cube [a, b]^3 with the same refinement policy.
template <class F>
double integrate_cube(F&& f, double a, double b, const QuadratureSpec& q) {
  q.validate();
  const auto& rule = gauss_legendre(q.nodes);
  auto level = [&](int panels) {
    const auto g = composite_nodes(a, b, panels, rule);
    const std::size_t n = g.x.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double plane = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        double line = 0.0;
        for (std::size_t k = 0; k < n; ++k) line += g.w[k] * f(g.x[i], g.x[j], g.x[k]);
        plane += g.w[j] * line;
      }
      total += g.w[i] * plane;
    }
    return total;
  };
  return refine_until_converged(level, q, "3-D quadrature");
}

}  // namespace detcount
