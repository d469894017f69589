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


#include "cti/mhe/xof.h"

#include <openssl/evp.h>

#include <bit>
#include <cstring>
#include <memory>

#include "cti/common/error.h"

namespace cti::mhe {
namespace {

void AppendU64(std::vector<uint8_t>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void AppendLabel(std::vector<uint8_t>& out, std::string_view s) {
  out.push_back(static_cast<uint8_t>(s.size()));
  out.insert(out.end(), s.begin(), s.end());
}

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};

}  // namespace

Xof::Xof(std::span<const uint8_t> seed) : seed_(seed.begin(), seed.end()) {}

Xof::Xof(uint64_t seed, std::string_view domain) {
  AppendLabel(seed_, domain);
  AppendU64(seed_, seed);
}

void Xof::Refill() {
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> md(EVP_MD_CTX_new());
  std::vector<uint8_t> input = seed_;
  AppendU64(input, counter_++);
  if (!md || EVP_DigestInit_ex(md.get(), EVP_shake128(), nullptr) != 1 ||
      EVP_DigestUpdate(md.get(), input.data(), input.size()) != 1 ||
      EVP_DigestFinalXOF(md.get(), block_.data(), block_.size()) != 1) {
    throw Error(ErrorCode::kFailedPrecondition, "SHAKE-128 unavailable");
  }
  pos_ = 0;
}

void Xof::Read(std::span<uint8_t> out) {
  size_t done = 0;
  while (done < out.size()) {
    if (pos_ == block_.size()) Refill();
    const size_t take = std::min(out.size() - done, block_.size() - pos_);
    std::memcpy(out.data() + done, block_.data() + pos_, take);
    pos_ += take;
    done += take;
  }
}

uint64_t Xof::NextU64() {
  uint8_t b[8];
  Read(b);
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

uint64_t Xof::UniformBelow(uint64_t bound) {
  if (bound <= 1) return 0;
  const int bits = std::bit_width(bound - 1);
  const uint64_t mask = bits == 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
  while (true) {
    const uint64_t v = NextU64() & mask;
    if (v < bound) return v;
  }
}

Xof Xof::Fork(std::string_view label, uint64_t index) const {
  std::vector<uint8_t> child;
  AppendLabel(child, "fork");
  child.insert(child.end(), seed_.begin(), seed_.end());
  AppendLabel(child, label);
  AppendU64(child, index);
  return Xof(child);
}

RingElement SampleUniform(const Context& ctx, Xof& xof, size_t limbs) {
  RingElement r(ctx.n(), limbs, true);
  for (size_t j = 0; j < limbs; ++j) {
    const uint64_t q = ctx.modulus(j);
    for (uint64_t& x : r.limb(j)) x = xof.UniformBelow(q);
  }
  return r;
}

RingElement DeriveCrs(const Context& ctx, const SessionId& session,
                      std::string_view label, uint32_t index, size_t limbs) {
  std::vector<uint8_t> seed;
  AppendLabel(seed, "crs");
  AppendU64(seed, ctx.params_id());
  seed.insert(seed.end(), session.begin(), session.end());
  AppendLabel(seed, label);
  AppendU64(seed, index);
  Xof xof(seed);
  return SampleUniform(ctx, xof, limbs);
}

}  // namespace cti::mhe
