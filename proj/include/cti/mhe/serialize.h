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


#ifndef CTI_MHE_SERIALIZE_H_
#define CTI_MHE_SERIALIZE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cti/mhe/ciphertext.h"
#include "cti/mhe/keys.h"
#include "cti/mhe/ring.h"

namespace cti::mhe {

// Polynomial wire format, little-endian:
//   "MHE1" | version u16 | N u32 | limbs u8 | degree u8 | scale-exp i16
// followed by (degree + 1) parts, each limb-major, each limb N u64 residues
// in coefficient form.
inline constexpr uint16_t kPolyFormatVersion = 1;
inline constexpr size_t kPolyHeaderBytes = 14;

struct PolyBundle {
  std::vector<RingElement> parts;  // NTT form
  int log_scale = 0;
};

std::vector<uint8_t> SerializePolys(const Context& ctx,
                                    std::span<const RingElement> parts,
                                    int log_scale);
// Parses one bundle starting at bytes[0]. If `consumed` is null the input
// must contain exactly one bundle.
PolyBundle DeserializePolys(const Context& ctx, std::span<const uint8_t> bytes,
                            size_t* consumed = nullptr);

std::vector<uint8_t> SerializeCiphertext(const Context& ctx, const Ciphertext& ct);
Ciphertext DeserializeCiphertext(const Context& ctx, std::span<const uint8_t> bytes);

std::vector<uint8_t> SerializePublicKey(const Context& ctx, const PublicKey& pk);
PublicKey DeserializePublicKey(const Context& ctx, std::span<const uint8_t> bytes);

std::vector<uint8_t> SerializeRelinKey(const Context& ctx, const RelinKey& rlk);
RelinKey DeserializeRelinKey(const Context& ctx, std::span<const uint8_t> bytes);

std::vector<uint8_t> SerializeSecretKey(const Context& ctx, const SecretKey& sk);
SecretKey DeserializeSecretKey(const Context& ctx, std::span<const uint8_t> bytes);

}  // namespace cti::mhe

#endif  // CTI_MHE_SERIALIZE_H_
