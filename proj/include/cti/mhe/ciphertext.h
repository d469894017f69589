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


#ifndef CTI_MHE_CIPHERTEXT_H_
#define CTI_MHE_CIPHERTEXT_H_

#include <cstdint>
#include <vector>

#include "cti/mhe/ring.h"

namespace cti::mhe {

// Encoded slot vector; the scale is 2^log_scale.
struct Plaintext {
  RingElement poly;
  int log_scale = 0;
};

// Degree 1 (two parts) or degree 2 (three parts) ciphertext over Q, parts in
// NTT form. Decrypts as sum_k parts[k] * s^k.
struct Ciphertext {
  std::vector<RingElement> parts;
  int log_scale = 0;
  uint64_t params_id = 0;

  size_t degree() const { return parts.empty() ? 0 : parts.size() - 1; }
  bool operator==(const Ciphertext& other) const = default;
};

}  // namespace cti::mhe

#endif  // CTI_MHE_CIPHERTEXT_H_
