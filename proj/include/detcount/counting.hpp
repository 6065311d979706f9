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

#include <cstdint>

#include "detcount/arith.hpp"
#include "detcount/weights.hpp"

namespace detcount {

/// Smoothed-count request: integers a, b, c, d weighted by V(./X) with
/// ad - bc = r. Counts for |r| >= 3X^2 are legitimately zero.
struct CountQuery {
  double X = 0.0;
  i64 r = 0;

  void validate() const;
};

struct CountResult {
  double weighted_sum = 0.0;
  /// Tuples with every coordinate strictly inside (X, 2X).
  std::uint64_t solution_count = 0;
  double elapsed_ms = 0.0;
};

/// Integers n with X < n < 2X, i.e. [floor(X)+1, ceil(2X)-1].
struct IntRange {
  i64 lo = 0;
  i64 hi = -1;
  i64 size() const noexcept { return hi >= lo ? hi - lo + 1 : 0; }
  bool contains(i64 n) const noexcept { return n >= lo && n <= hi; }
};

IntRange enumerate_range(double X);

/// O(X^3): triple loop over (a, b, c), d solved from a | (r + bc).
CountResult count_naive(const WeightSpec& spec, const CountQuery& q, unsigned threads = 0);

/// For each (a, b) with g = gcd(a, b) | r, c runs over the progression
/// c = -(r/g) * inv(b/g) (mod a/g). Same summands, same order as
/// count_naive.
CountResult count_fast(const WeightSpec& spec, const CountQuery& q, unsigned threads = 0);

}  // namespace detcount
