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

#include "detcount/counting.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "detcount/reduce.hpp"

namespace detcount {

void CountQuery::validate() const {
  if (!(X > 0.0) || !std::isfinite(X)) {
    fail(ErrorCode::kInvalidArgument, "X must be a positive finite real");
  }
  if (r == 0) fail(ErrorCode::kInvalidR, "r must be nonzero");
}

IntRange enumerate_range(double X) {
  if (!(X > 0.0) || !std::isfinite(X)) {
    fail(ErrorCode::kInvalidArgument, "X must be a positive finite real");
  }
  IntRange range{static_cast<i64>(std::floor(X)) + 1,
                 static_cast<i64>(std::ceil(2.0 * X)) - 1};
  if (range.size() == 0) {
    fail(ErrorCode::kEmptyRange, "no integers in (X, 2X) for X = " + std::to_string(X));
  }
  return range;
}

namespace {

struct Partial {
  CompensatedSum sum;
  std::uint64_t count = 0;
};

// V(n/X) for n across the range; index n - lo.
std::vector<double> weight_table(const WeightSpec& spec, double X, const IntRange& range) {
  std::vector<double> table(static_cast<std::size_t>(range.size()));
  for (i64 n = range.lo; n <= range.hi; ++n) {
    table[static_cast<std::size_t>(n - range.lo)] = spec(static_cast<double>(n) / X);
  }
  return table;
}

template <class PerA>
CountResult run_by_a(const WeightSpec& spec, const CountQuery& q, unsigned threads,
                     PerA&& per_a) {
  const auto start = std::chrono::steady_clock::now();
  q.validate();
  const IntRange range = enumerate_range(q.X);
  const auto table = weight_table(spec, q.X, range);
  if (threads == 0) threads = default_thread_count();

  auto partials = ordered_map<Partial>(
      static_cast<std::size_t>(range.size()), threads,
      [&](std::size_t i) { return per_a(range.lo + static_cast<i64>(i), range, table); });

  // Combine in ascending a regardless of thread count.
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

inline double w_at(const std::vector<double>& table, const IntRange& range, i64 n) {
  return table[static_cast<std::size_t>(n - range.lo)];
}

}  // namespace

CountResult count_naive(const WeightSpec& spec, const CountQuery& q, unsigned threads) {
  const i64 r = q.r;
  return run_by_a(spec, q, threads, [r](i64 a, const IntRange& range, const auto& table) {
    Partial part;
    const double wa = w_at(table, range, a);
    for (i64 b = range.lo; b <= range.hi; ++b) {
      const double wab = wa * w_at(table, range, b);
      for (i64 c = range.lo; c <= range.hi; ++c) {
        const i64 num = r + b * c;
        if (num % a != 0) continue;
        const i64 d = num / a;
        if (!range.contains(d)) continue;
        part.sum += wab * w_at(table, range, c) * w_at(table, range, d);
        ++part.count;
      }
    }
    return part;
  });
}

CountResult count_fast(const WeightSpec& spec, const CountQuery& q, unsigned threads) {
  const i64 r = q.r;
  return run_by_a(spec, q, threads, [r](i64 a, const IntRange& range, const auto& table) {
    Partial part;
    const double wa = w_at(table, range, a);
    for (i64 b = range.lo; b <= range.hi; ++b) {
      const i64 g = gcd(a, b);
      if (r % g != 0) continue;
      const Modulus step(a / g);
      const i64 residue = step.mul(step.reduce(-(r / g)), mod_inverse(b / g, step));
      // First c >= lo in the residue class.
      i64 c = range.lo + step.reduce(residue - range.lo);
      const double wab = wa * w_at(table, range, b);
      for (; c <= range.hi; c += step.value()) {
        const i64 num = r + b * c;
        assert(num % a == 0);
        const i64 d = num / a;
        if (!range.contains(d)) continue;
        assert(a * d - b * c == r);
        part.sum += wab * w_at(table, range, c) * w_at(table, range, d);
        ++part.count;
      }
    }
    return part;
  });
}

}  // namespace detcount
