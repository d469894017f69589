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


#include "cti/mhe/primes.h"

#include <algorithm>

#include "cti/common/error.h"

namespace cti::mhe {

using u128 = unsigned __int128;

uint64_t MulModU64(uint64_t a, uint64_t b, uint64_t q) {
  return static_cast<uint64_t>(static_cast<u128>(a) * b % q);
}

uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t q) {
  uint64_t result = 1 % q;
  base %= q;
  while (exp > 0) {
    if (exp & 1) result = MulModU64(result, base, q);
    base = MulModU64(base, base, q);
    exp >>= 1;
  }
  return result;
}

uint64_t InvMod(uint64_t a, uint64_t q) {
  if (a % q == 0) throw Error(ErrorCode::kInvalidArgument, "zero has no inverse");
  return PowMod(a, q - 2, q);
}

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are sufficient for all n < 3.3e24.
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = MulModU64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<uint64_t> FindNttPrimes(int bits, uint64_t step, size_t count,
                                    const std::vector<uint64_t>& exclude) {
  if (bits < 4 || bits > 61 || step == 0 || (step & (step - 1)) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad prime search bounds");
  }
  std::vector<uint64_t> out;
  uint64_t candidate = ((uint64_t{1} << bits) - 1) / step * step + 1;
  if (candidate >= (uint64_t{1} << bits)) candidate -= step;
  while (out.size() < count) {
    if (candidate <= step) {
      throw Error(ErrorCode::kInvalidArgument, "not enough NTT primes");
    }
    if (IsPrime(candidate) &&
        std::find(exclude.begin(), exclude.end(), candidate) == exclude.end()) {
      out.push_back(candidate);
    }
    candidate -= step;
  }
  return out;
}

uint64_t FindPrimitiveRoot(uint64_t order, uint64_t q) {
  if ((q - 1) % order != 0) {
    throw Error(ErrorCode::kInvalidArgument, "order does not divide q - 1");
  }
  for (uint64_t g = 2; g < q; ++g) {
    uint64_t root = PowMod(g, (q - 1) / order, q);
    // For a power-of-two order, primitive iff root^(order/2) = -1.
    if (PowMod(root, order / 2, q) == q - 1) return root;
  }
  throw Error(ErrorCode::kInvalidArgument, "no primitive root");
}

}  // namespace cti::mhe
