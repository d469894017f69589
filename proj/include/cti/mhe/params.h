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


#ifndef CTI_MHE_PARAMS_H_
#define CTI_MHE_PARAMS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cti::mhe {

// Ring and scheme parameters. The ciphertext modulus Q is the product of
// `q_primes`; `special_prime` (P) only appears in key material, where it
// scales the key-switching gadget so that switching noise is divided by P.
struct RingParams {
  size_t n = 0;
  std::vector<uint64_t> q_primes;
  uint64_t special_prime = 0;
  int log_delta = 30;
  // Nominal error std-dev; realized by a centered binomial with
  // cbd_k = 2 sigma^2 rounded (k = 21 gives 3.24).
  double sigma = 3.2;
  int cbd_k = 21;
  // Statistical masking for refresh masks.
  int lambda_smudge = 30;
  // Absolute bound (bits, in coefficient units) of the flooding noise added
  // to decryption and key-switch shares.
  int decrypt_smudge_bits = 8;
  // Declared bound on |slot value| (bits) and on the party count, used by
  // the headroom inequality.
  int value_bound_bits = 8;
  int max_parties = 16;
  std::string preset_name;
  bool reduced_security = false;
  // Allows N < 2^12 for downscaled test rings.
  bool test_ring = false;
};

// "toy" or "standard" (case-insensitive). Throws kInvalidArgument on any
// other name and kHeadroom if the preset fails the headroom inequality.
RingParams GenParams(std::string_view preset);

// Custom parameter set with `q_count` primes of `prime_bits` bits, each
// congruent to 1 mod 2^17 (so valid for every N up to 2^16).
RingParams MakeParams(size_t n, size_t q_count, int log_delta,
                      int prime_bits = 54, bool check_headroom = true);

// Throws on structural problems; optionally on a headroom violation.
void ValidateParams(const RingParams& params, bool check_headroom = true);

double LogQ(const RingParams& params);
double LogQP(const RingParams& params);

// log2 of Delta^3 * value_bound * 2^lambda * max_parties; must stay below
// log2(Q/4).
double HeadroomRequirementBits(const RingParams& params);

// Stable 64-bit identifier of the algebraic parameters (N, primes, Delta).
uint64_t ParamsId(const RingParams& params);

// (degree + 1) * N * limbs * 8 bytes.
constexpr size_t PolyPayloadBytes(size_t n, size_t limbs, size_t degree) {
  return (degree + 1) * n * limbs * 8;
}

}  // namespace cti::mhe

#endif  // CTI_MHE_PARAMS_H_
