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


#ifndef CTI_MHE_KEYS_H_
#define CTI_MHE_KEYS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cti/mhe/ring.h"
#include "cti/mhe/xof.h"

namespace cti::mhe {

// Key material lives over QP (#q_i + 1 limbs, NTT form).
struct SecretKey {
  std::vector<int64_t> coeffs;
  RingElement s;
};

struct PublicKey {
  RingElement p0;
  RingElement p1;
  bool operator==(const PublicKey& other) const = default;
};

// k0[j] + s * k1[j] ~= P * g_j * s^2 with the RNS gadget g_j.
struct RelinKey {
  std::vector<RingElement> k0;
  std::vector<RingElement> k1;
  bool operator==(const RelinKey& other) const = default;
};

// Uniform ternary secret.
SecretKey KeygenSecret(const Context& ctx, Xof& xof);
SecretKey SecretFromCoeffs(const Context& ctx, std::vector<int64_t> coeffs);
// s = sum of shares (debug and test use).
SecretKey SumSecrets(const Context& ctx, std::span<const SecretKey> shares);

// Single-party key pair (p0, p1) = (-s a + e, a) with a drawn from `xof`;
// used for the querier's own key.
PublicKey KeygenPublic(const Context& ctx, const SecretKey& sk, Xof& xof);

}  // namespace cti::mhe

#endif  // CTI_MHE_KEYS_H_
