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

#include <cmath>
#include <random>

#include "detcount/quadrature.hpp"
#include "detcount/weights.hpp"
#include "doctest.h"

using namespace detcount;

namespace {

struct MeanAndError {
  double mean;
  double stderr_;
};

// Plain Monte Carlo over [1,2]^dim with a fixed seed.
template <class F>
MeanAndError monte_carlo(F&& f, int dim, long samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(1.0, 2.0);
  double s = 0.0, s2 = 0.0;
  double x[3];
  for (long i = 0; i < samples; ++i) {
    for (int d = 0; d < dim; ++d) x[d] = u(rng);
    const double v = f(x);
    s += v;
    s2 += v * v;
  }
  const double mean = s / samples;
  const double var = s2 / samples - mean * mean;
  return {mean, std::sqrt(var / samples)};
}

}  // namespace

TEST_CASE("eval_weight point values") {
  const WeightSpec v;
  CHECK(eval_weight(v, 0.5) == 0.0);
  CHECK(eval_weight(v, 1.5) == doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
  CHECK(eval_weight(v, 2.0) == 0.0);
  CHECK(eval_weight(v, 1.0) == 0.0);
  WeightSpec w;
  w.amplitude = 3.0;
  CHECK(eval_weight(w, 1.5) == doctest::Approx(3.0 * std::exp(-4.0)));
}

TEST_CASE("eval_weight vanishes outside the support") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> left(-10.0, 1.0), right(2.0, 10.0);
  const WeightSpec v;
  for (int i = 0; i < 500; ++i) {
    REQUIRE(eval_weight(v, left(rng)) == 0.0);
    REQUIRE(eval_weight(v, right(rng)) == 0.0);
  }
}

TEST_CASE("derivatives are bounded and flat at the endpoints") {
  const WeightSpec v;
  const double h = 1e-5;
  double max_d1 = 0.0, max_d2 = 0.0;
  for (int i = 1; i < 1000; ++i) {
    const double x = 1.0 + i / 1000.0;
    const double d1 = (v(x + h) - v(x - h)) / (2 * h);
    const double d2 = (v(x + h) - 2 * v(x) + v(x - h)) / (h * h);
    max_d1 = std::max(max_d1, std::fabs(d1));
    max_d2 = std::max(max_d2, std::fabs(d2));
    REQUIRE(std::fabs(v.derivative(x) - d1) <= 1e-5 * std::fabs(d1) + 1e-9);
  }
  CHECK(std::isfinite(max_d1));
  CHECK(max_d2 < 1.0);
  for (double x : {1.0 + 1e-3, 2.0 - 1e-3}) {
    CHECK(std::fabs((v(x + 1e-4) - v(x - 1e-4)) / 2e-4) < 1e-6);
  }
}

TEST_CASE("integral of the bump") {
  const QuadratureSpec q;
  const WeightSpec v;
  const double value = integral(v, q);
  // Independent high-precision value.
  CHECK(value == doctest::Approx(0.0070298584066097198).epsilon(1e-10));

  const auto mc = monte_carlo([&](const double* x) { return v(x[0]); }, 1, 10000000, 1234);
  CHECK(std::fabs(value - mc.mean) <= 3.0 * mc.stderr_);

  WeightSpec zero;
  zero.amplitude = 0.0;
  CHECK(integral(zero, q) == 0.0);
  WeightSpec twice;
  twice.amplitude = 2.0;
  CHECK(integral(twice, q) == 2.0 * value);
}

TEST_CASE("fourier transform") {
  const QuadratureSpec q;
  const WeightSpec v;
  CHECK(fourier(v, 0.0, q).real() == doctest::Approx(integral(v, q)).epsilon(1e-12));
  CHECK(fourier(v, 0.0, q).imag() == 0.0);
  for (double xi : {0.3, 1.7, 5.0, 12.5}) {
    const auto a = fourier(v, xi, q), b = fourier(v, -xi, q);
    CHECK(std::fabs(a.real() - b.real()) <= 1e-9 * std::fabs(b.real()) + 1e-18);
    CHECK(std::fabs(a.imag() + b.imag()) <= 1e-9 * std::fabs(b.imag()) + 1e-18);
  }
  // V symmetric about 3/2: V^(xi) = e(-3 xi/2) * real.
  const auto f = fourier(v, 0.8, q);
  const std::complex<double> rot = std::polar(1.0, 2 * M_PI * 0.8 * 1.5);
  CHECK(std::fabs((f * rot).imag()) < 1e-15);

  const double c = std::abs(fourier(v, 10.0, q)) * 100.0;
  for (double xi : {20.0, 40.0}) CHECK(std::abs(fourier(v, xi, q)) <= c / (xi * xi));
}

TEST_CASE("poisson summation residuals") {
  const QuadratureSpec q;
  const WeightSpec v;
  for (double scale : {1.0, 5.0, 10.0, 50.0}) CHECK(poisson_check(v, scale, q) < 1e-8);
  WeightSpec zero;
  zero.amplitude = 0.0;
  CHECK(poisson_check(zero, 10.0, q) == 0.0);
  CHECK_THROWS_AS(poisson_check(v, 0.0, q), Error);
}

TEST_CASE("integrate_3d") {
  const QuadratureSpec q;
  CHECK(integrate_3d([](double, double, double) { return 1.0; }, q) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(integrate_3d([](double u, double v, double t) { return u * v * t; }, q) ==
        doctest::Approx(3.375).epsilon(1e-14));

  const WeightSpec v;
  const double one = integral(v, q);
  const double cube =
      integrate_3d([&](double a, double b, double c) { return v(a) * v(b) * v(c); }, q);
  CHECK(cube == doctest::Approx(one * one * one).epsilon(1e-9));

  const auto mc = monte_carlo([&](const double* x) { return v(x[0]) * v(x[1]) * v(x[2]); }, 3,
                              2000000, 99);
  CHECK(std::fabs(cube - mc.mean) <= 3.0 * mc.stderr_);
}

TEST_CASE("gauss_legendre rule integrates polynomials exactly") {
  for (int order : {4, 8, 16}) {
    const auto& rule = gauss_legendre(order);
    for (int deg = 0; deg < 2 * order; ++deg) {
      double s = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        s += rule.weights[i] * std::pow(rule.nodes[i], deg);
      }
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      REQUIRE(std::fabs(s - exact) <= 1e-13 * exact + 1e-14);
    }
  }
}

TEST_CASE("quadrature spec validation and non-convergence") {
  QuadratureSpec bad;
  bad.nodes = 2;
  CHECK_THROWS_AS(bad.validate(), Error);
  QuadratureSpec shallow;
  shallow.max_depth = 0;
  shallow.rel_tolerance = 1e-16;
  shallow.abs_tolerance = 1e-30;
  try {
    integrate<double>([](double x) { return std::sin(200 * x); }, 0.0, 10.0, shallow);
    FAIL("expected QuadratureNotConverged");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kQuadratureNotConverged);
  }
}

TEST_CASE("sup of the derivative") {
  const WeightSpec v;
  double brute = 0.0;
  for (int i = 1; i < 200000; ++i) brute = std::max(brute, std::fabs(v.derivative(1.0 + i / 200000.0)));
  CHECK(sup_derivative(v) == doctest::Approx(brute).epsilon(1e-8));
}
