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


#ifndef CTI_MHE_PRIMES_H_
#define CTI_MHE_PRIMES_H_

#include <cstdint>
#include <vector>

namespace cti::mhe {

uint64_t MulModU64(uint64_t a, uint64_t b, uint64_t q);
uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t q);
// Inverse of a modulo prime q; a must be nonzero mod q.
uint64_t InvMod(uint64_t a, uint64_t q);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool IsPrime(uint64_t n);

// The `count` largest primes below 2^bits that are congruent to 1 mod
// `step` (a power of two), skipping any listed in `exclude`. Descending.
std::vector<uint64_t> FindNttPrimes(int bits, uint64_t step, size_t count,
                                    const std::vector<uint64_t>& exclude = {});

// A primitive `order`-th root of unity mod q (order a power of two dividing
// q - 1). Deterministic: the smallest generator candidate wins.
uint64_t FindPrimitiveRoot(uint64_t order, uint64_t q);

}  // namespace cti::mhe

#endif  // CTI_MHE_PRIMES_H_
