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


#include "cti/mhe/serialize.h"

#include <cstring>
#include <string_view>

#include "cti/common/error.h"

namespace cti::mhe {
namespace {

template <typename T>
void Put(std::vector<uint8_t>& out, T v) {
  using U = std::make_unsigned_t<T>;
  U u = static_cast<U>(v);
  for (size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<uint8_t>(u >> (8 * i)));
  }
}

template <typename T>
T Get(std::span<const uint8_t> in, size_t offset) {
  using U = std::make_unsigned_t<T>;
  U u = 0;
  for (size_t i = 0; i < sizeof(T); ++i) {
    u |= static_cast<U>(static_cast<U>(in[offset + i]) << (8 * i));
  }
  return static_cast<T>(u);
}

}  // namespace

std::vector<uint8_t> SerializePolys(const Context& ctx,
                                    std::span<const RingElement> parts,
                                    int log_scale) {
  if (parts.empty() || parts.size() > 256) {
    throw Error(ErrorCode::kInvalidArgument, "bad part count");
  }
  const size_t limbs = parts[0].limbs();
  std::vector<uint8_t> out;
  out.reserve(kPolyHeaderBytes + parts.size() * limbs * ctx.n() * 8);
  for (char c : std::string_view("MHE1")) out.push_back(static_cast<uint8_t>(c));
  Put<uint16_t>(out, kPolyFormatVersion);
  Put<uint32_t>(out, static_cast<uint32_t>(ctx.n()));
  Put<uint8_t>(out, static_cast<uint8_t>(limbs));
  Put<uint8_t>(out, static_cast<uint8_t>(parts.size() - 1));
  Put<int16_t>(out, static_cast<int16_t>(log_scale));
  for (const RingElement& part : parts) {
    if (part.limbs() != limbs || part.n() != ctx.n()) {
      throw Error(ErrorCode::kInvalidArgument, "parts differ in shape");
    }
    RingElement coeff = part;
    FromNtt(ctx, coeff);
    for (uint64_t v : coeff.data()) Put<uint64_t>(out, v);
  }
  return out;
}

PolyBundle DeserializePolys(const Context& ctx, std::span<const uint8_t> bytes,
                            size_t* consumed) {
  if (bytes.size() < kPolyHeaderBytes || std::memcmp(bytes.data(), "MHE1", 4) != 0) {
    throw Error(ErrorCode::kParse, "missing MHE1 header");
  }
  if (Get<uint16_t>(bytes, 4) != kPolyFormatVersion) {
    throw Error(ErrorCode::kParse, "unsupported poly format version");
  }
  const uint32_t n = Get<uint32_t>(bytes, 6);
  const size_t limbs = bytes[10];
  const size_t parts = static_cast<size_t>(bytes[11]) + 1;
  const int16_t log_scale = Get<int16_t>(bytes, 12);
  if (n != ctx.n() || (limbs != ctx.q_count() && limbs != ctx.qp_count())) {
    throw Error(ErrorCode::kParamsMismatch, "poly shape does not match parameters");
  }
  const size_t total = kPolyHeaderBytes + parts * limbs * n * 8;
  if (bytes.size() < total || (consumed == nullptr && bytes.size() != total)) {
    throw Error(ErrorCode::kParse, "poly payload length mismatch");
  }
  PolyBundle bundle;
  bundle.log_scale = log_scale;
  size_t offset = kPolyHeaderBytes;
  for (size_t p = 0; p < parts; ++p) {
    RingElement e(n, limbs, false);
    for (size_t j = 0; j < limbs; ++j) {
      const uint64_t q = ctx.modulus(j);
      for (uint64_t& v : e.limb(j)) {
        v = Get<uint64_t>(bytes, offset);
        offset += 8;
        if (v >= q) throw Error(ErrorCode::kParse, "residue out of range");
      }
    }
    ToNtt(ctx, e);
    bundle.parts.push_back(std::move(e));
  }
  if (consumed != nullptr) *consumed = total;
  return bundle;
}

std::vector<uint8_t> SerializeCiphertext(const Context& ctx, const Ciphertext& ct) {
  if (ct.params_id != ctx.params_id()) {
    throw Error(ErrorCode::kParamsMismatch, "ciphertext from another parameter set");
  }
  return SerializePolys(ctx, ct.parts, ct.log_scale);
}

Ciphertext DeserializeCiphertext(const Context& ctx, std::span<const uint8_t> bytes) {
  PolyBundle b = DeserializePolys(ctx, bytes);
  if (b.parts.size() < 2 || b.parts.size() > 3 || b.parts[0].limbs() != ctx.q_count()) {
    throw Error(ErrorCode::kParse, "not a ciphertext");
  }
  Ciphertext ct;
  ct.parts = std::move(b.parts);
  ct.log_scale = b.log_scale;
  ct.params_id = ctx.params_id();
  return ct;
}

std::vector<uint8_t> SerializePublicKey(const Context& ctx, const PublicKey& pk) {
  const RingElement parts[] = {pk.p0, pk.p1};
  return SerializePolys(ctx, parts, 0);
}

PublicKey DeserializePublicKey(const Context& ctx, std::span<const uint8_t> bytes) {
  PolyBundle b = DeserializePolys(ctx, bytes);
  if (b.parts.size() != 2) throw Error(ErrorCode::kParse, "not a public key");
  return {std::move(b.parts[0]), std::move(b.parts[1])};
}

std::vector<uint8_t> SerializeRelinKey(const Context& ctx, const RelinKey& rlk) {
  std::vector<RingElement> parts;
  for (size_t j = 0; j < rlk.k0.size(); ++j) {
    parts.push_back(rlk.k0[j]);
    parts.push_back(rlk.k1[j]);
  }
  return SerializePolys(ctx, parts, 0);
}

RelinKey DeserializeRelinKey(const Context& ctx, std::span<const uint8_t> bytes) {
  PolyBundle b = DeserializePolys(ctx, bytes);
  if (b.parts.size() != 2 * ctx.q_count()) {
    throw Error(ErrorCode::kParse, "not a relin key");
  }
  RelinKey rlk;
  for (size_t j = 0; j < ctx.q_count(); ++j) {
    rlk.k0.push_back(std::move(b.parts[2 * j]));
    rlk.k1.push_back(std::move(b.parts[2 * j + 1]));
  }
  return rlk;
}

std::vector<uint8_t> SerializeSecretKey(const Context& ctx, const SecretKey& sk) {
  const RingElement parts[] = {sk.s};
  return SerializePolys(ctx, parts, 0);
}

SecretKey DeserializeSecretKey(const Context& ctx, std::span<const uint8_t> bytes) {
  PolyBundle b = DeserializePolys(ctx, bytes);
  if (b.parts.size() != 1 || b.parts[0].limbs() != ctx.qp_count()) {
    throw Error(ErrorCode::kParse, "not a secret key");
  }
  RingElement coeff = b.parts[0];
  FromNtt(ctx, coeff);
  const uint64_t q0 = ctx.modulus(0);
  std::vector<int64_t> coeffs(ctx.n());
  for (size_t i = 0; i < ctx.n(); ++i) {
    const uint64_t v = coeff.limb(0)[i];
    coeffs[i] = v > q0 / 2 ? -static_cast<int64_t>(q0 - v) : static_cast<int64_t>(v);
  }
  return SecretFromCoeffs(ctx, std::move(coeffs));
}

}  // namespace cti::mhe
