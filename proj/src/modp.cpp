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

#include "detcount/modp.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>

#include "detcount/reduce.hpp"

namespace detcount {

void ModPQuery::validate() const {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    fail(ErrorCode::kCompositeModulus, "p = " + std::to_string(p) + " is not an odd prime");
  }
  const double pd = static_cast<double>(p);
  if (!(X > std::pow(pd, 0.01)) || !(X < pd / 2.0)) {
    fail(ErrorCode::kInvalidArgument, "need p^(1/100) < X < p/2");
  }
  if (!(g_scale >= 1.0)) fail(ErrorCode::kInvalidArgument, "g_scale must be >= 1");
}

CountResult count_modp(const WeightSpec& spec, const ModPQuery& q, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  q.validate();
  const IntRange range = enumerate_range(q.X);
  const Modulus mod(q.p);
  std::vector<double> w(static_cast<std::size_t>(range.size()));
  for (i64 n = range.lo; n <= range.hi; ++n) {
    w[static_cast<std::size_t>(n - range.lo)] = spec(static_cast<double>(n) / q.X);
  }
  auto at = [&](i64 n) { return w[static_cast<std::size_t>(n - range.lo)]; };
  if (threads == 0) threads = default_thread_count();

  struct Partial {
    CompensatedSum sum;
    std::uint64_t count = 0;
  };
  auto partials = ordered_map<Partial>(
      static_cast<std::size_t>(range.size()), threads, [&](std::size_t i) {
        Partial part;
        const i64 a = range.lo + static_cast<i64>(i);
        // X < p/2 keeps a in (0, p), hence invertible.
        const i64 a_inv = mod_inverse(a, mod);
        for (i64 b = range.lo; b <= range.hi; ++b) {
          for (i64 c = range.lo; c <= range.hi; ++c) {
            const i64 d = mod.mul(mod.reduce(1 + b * c), a_inv);
            // The range is shorter than p, so d and d + p cannot both land.
            assert(!(range.contains(d) && range.contains(d + q.p)));
            const i64 hit = range.contains(d) ? d : (range.contains(d + q.p) ? d + q.p : -1);
            if (hit < 0) continue;
            assert(mod.reduce(a * hit - b * c) == 1);
            part.sum += at(a) * at(b) * at(c) * at(hit);
            ++part.count;
          }
        }
        return part;
      });

  CountResult result;
  CompensatedSum total;
  for (const auto& p : partials) {
    total.add(p.sum);
    result.solution_count += p.count;
  }
  result.weighted_sum = total.value();
  result.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

double modp_main(const WeightSpec& spec, const ModPQuery& q, const QuadratureSpec& quad) {
  q.validate();
  const double v = integral(spec, quad);
  const double vhat = fourier(spec, 0.0, quad).real();
  if (std::fabs(v - vhat) > std::max(quad.abs_tolerance, 1e-10 * std::fabs(v))) {
    fail(ErrorCode::kInternal, "integral and V^(0) disagree");
  }
  return std::pow(q.X, 4) / static_cast<double>(q.p) * std::pow(v, 4);
}

double modp_main_fourier(const WeightSpec& spec, const ModPQuery& q, const QuadratureSpec& quad) {
  q.validate();
  return std::pow(q.X, 4) / static_cast<double>(q.p) *
         std::pow(fourier(spec, 0.0, quad).real(), 4);
}

double XRule::operator()(i64 p) const {
  const double x = factor * std::sqrt(static_cast<double>(p));
  return round_up ? std::ceil(x) : x;
}

XRule XRule::parse(const std::string& text) {
  XRule rule;
  std::string body = text;
  const std::string exact = "-exact";
  if (body.size() > exact.size() && body.ends_with(exact)) {
    rule.round_up = false;
    body.resize(body.size() - exact.size());
  }
  if (!body.ends_with("sqrt")) fail(ErrorCode::kInvalidArgument, "unknown X rule: " + text);
  body.resize(body.size() - 4);
  if (!body.empty()) {
    char* end = nullptr;
    rule.factor = std::strtod(body.c_str(), &end);
    if (end != body.c_str() + body.size() || !(rule.factor > 0.0)) {
      fail(ErrorCode::kInvalidArgument, "unknown X rule: " + text);
    }
  } else {
    rule.factor = 1.0;
  }
  return rule;
}

std::vector<ModPRow> modp_error_scan(const WeightSpec& spec, const std::vector<i64>& primes,
                                     const XRule& rule, const QuadratureSpec& quad,
                                     unsigned threads) {
  std::vector<ModPRow> rows;
  rows.reserve(primes.size());
  for (const i64 p : primes) {
    ModPRow row;
    row.p = p;
    row.X = rule(p);
    const ModPQuery q{p, row.X, 1.0};
    row.S = count_modp(spec, q, threads).weighted_sum;
    row.M = modp_main(spec, q, quad);
    row.E = row.S - row.M;
    row.E_over_X2 = row.E / (row.X * row.X);
    rows.push_back(row);
  }
  return rows;
}

double fourier_tail_sum(const WeightSpec& spec, double x, const QuadratureSpec& quad) {
  if (!(x > 0.0)) fail(ErrorCode::kInvalidArgument, "x must be > 0");
  if (spec.amplitude == 0.0) return 0.0;
  CompensatedSum s;
  int quiet = 0;
  const int quiet_needed = std::max(3, static_cast<int>(std::ceil(2.0 * x)));
  for (i64 n = 1; quiet < quiet_needed; ++n) {
    const double xi = static_cast<double>(n) / x;
    if (xi > 5000.0) fail(ErrorCode::kQuadratureNotConverged, "tail sum did not decay");
    const std::complex<double> vh = fourier(spec, xi, quad);
    s += 2.0 * vh.real();
    quiet = std::abs(vh) < 1e-16 ? quiet + 1 : 0;
  }
  return s.value();
}

}  // namespace detcount
