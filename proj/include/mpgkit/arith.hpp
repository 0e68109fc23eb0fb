// Copyright 2026 The mpgkit Authors
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
#include <limits>
#include <optional>

#include "mpgkit/error.hpp"

namespace mpgkit {

using Weight = std::int64_t;

inline Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("weight sum overflows int64");
  return r;
}

inline Weight checked_mul(Weight a, Weight b) {
  Weight r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("weight product overflows int64");
  return r;
}

/// Exact integer power; throws OverflowError rather than wrapping.
inline Weight checked_pow(Weight base, unsigned exp) {
  Weight r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

/// Smallest b >= 1 with b^n >= x, found by binary search on integers.
inline Weight ceil_root(Weight x, unsigned n) {
  if (n == 0) throw std::invalid_argument("ceil_root: n must be positive");
  if (x <= 1) return 1;
  auto reaches = [&](Weight b) {
    // b^n >= x without overflow: stop multiplying once the product passes x.
    Weight r = 1;
    for (unsigned i = 0; i < n; ++i) {
      if (r > x / b) return true;
      r *= b;
    }
    return r >= x;
  };
  Weight lo = 1, hi = x;
  while (lo < hi) {
    Weight mid = lo + (hi - lo) / 2;
    if (reaches(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace mpgkit
