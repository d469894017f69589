// Copyright 2026 The CTI-MHE Authors.
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

#ifndef CTI_SRC_SIMD_KERNELS_INTERNAL_H_
#define CTI_SRC_SIMD_KERNELS_INTERNAL_H_

#include <cstdint>

#include "cti/simd/kernels.h"

namespace cti::simd::internal {

using u128 = unsigned __int128;

inline uint64_t MulHi(uint64_t a, uint64_t b) {
  return static_cast<uint64_t>((static_cast<u128>(a) * b) >> 64);
}

// x mod q for any 128-bit x, q < 2^61. Quotient estimate is off by at most
// one, so a single conditional subtraction finishes the reduction.
inline uint64_t BarrettReduce128(u128 x, uint64_t q, BarrettRatio r) {
  const uint64_t x0 = static_cast<uint64_t>(x);
  const uint64_t x1 = static_cast<uint64_t>(x >> 64);
  // Round 1: x0 * ratio.
  uint64_t carry = MulHi(x0, r.lo);
  u128 t2 = static_cast<u128>(x0) * r.hi;
  uint64_t t1 = static_cast<uint64_t>(t2) + carry;
  uint64_t t3 = static_cast<uint64_t>(t2 >> 64) + (t1 < carry ? 1 : 0);
  // Round 2: x1 * ratio.lo.
  t2 = static_cast<u128>(x1) * r.lo;
  uint64_t lo2 = static_cast<uint64_t>(t2);
  uint64_t sum = t1 + lo2;
  carry = static_cast<uint64_t>(t2 >> 64) + (sum < t1 ? 1 : 0);
  uint64_t quotient = x1 * r.hi + t3 + carry;
  uint64_t rem = x0 - quotient * q;
  return rem >= q ? rem - q : rem;
}

// a * w mod q using the precomputed w_shoup = floor(w * 2^64 / q); q < 2^63.
inline uint64_t ShoupMul(uint64_t a, uint64_t w, uint64_t w_shoup, uint64_t q) {
  uint64_t hi = MulHi(a, w_shoup);
  uint64_t r = a * w - hi * q;
  return r >= q ? r - q : r;
}

}  // namespace cti::simd::internal

#endif  // CTI_SRC_SIMD_KERNELS_INTERNAL_H_
