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


#ifndef CTI_MHE_XOF_H_
#define CTI_MHE_XOF_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cti/mhe/ring.h"

namespace cti::mhe {

using SessionId = std::array<uint8_t, 16>;

// Deterministic byte stream from SHAKE-128 in counter mode: block k is
// SHAKE-128(seed || k as u64 LE), 1344 bytes each. Used both for CRS
// derivation and as the seeded RNG of every sampler, so outputs are
// identical across platforms.
class Xof {
 public:
  explicit Xof(std::span<const uint8_t> seed);
  // Convenience: seed from an integer and a domain label.
  Xof(uint64_t seed, std::string_view domain);

  void Read(std::span<uint8_t> out);
  uint64_t NextU64();
  // Uniform in [0, bound) by rejection.
  uint64_t UniformBelow(uint64_t bound);
  // Child stream keyed by this stream's seed and a label.
  Xof Fork(std::string_view label, uint64_t index = 0) const;

 private:
  void Refill();

  std::vector<uint8_t> seed_;
  uint64_t counter_ = 0;
  std::array<uint8_t, 1344> block_{};
  size_t pos_ = block_.size();
};

using Prng = Xof;

// Uniform element with `limbs` limbs, returned in NTT form.
RingElement SampleUniform(const Context& ctx, Xof& xof, size_t limbs);

// Common reference element bound to (params-id, session-id, round label,
// index). Every party derives the same value.
RingElement DeriveCrs(const Context& ctx, const SessionId& session,
                      std::string_view label, uint32_t index, size_t limbs);

}  // namespace cti::mhe

#endif  // CTI_MHE_XOF_H_
