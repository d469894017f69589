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


#include "cti/mhe/sampler.h"

#include <bit>

#include "cti/common/error.h"

namespace cti::mhe {

std::vector<int64_t> SampleTernary(Xof& xof, size_t n) {
  std::vector<int64_t> out(n);
  uint8_t buf[64];
  size_t pos = sizeof(buf);
  for (size_t i = 0; i < n;) {
    if (pos == sizeof(buf)) {
      xof.Read(buf);
      pos = 0;
    }
    const uint8_t b = buf[pos++];
    if (b >= 255) continue;  // 255 = 3 * 85
    out[i++] = static_cast<int64_t>(b % 3) - 1;
  }
  return out;
}

std::vector<int64_t> SampleCbd(Xof& xof, size_t n, int k) {
  if (k < 1 || k > 32) throw Error(ErrorCode::kInvalidArgument, "cbd k out of range");
  const uint64_t mask = (uint64_t{1} << k) - 1;
  std::vector<int64_t> out(n);
  for (size_t i = 0; i < n; ++i) {
    const uint64_t v = xof.NextU64();
    out[i] = std::popcount(v & mask) - std::popcount((v >> 32) & mask);
  }
  return out;
}

std::vector<i128> SampleUniformSigned(Xof& xof, size_t n, int bits) {
  if (bits < 0 || bits > 125) {
    throw Error(ErrorCode::kInvalidArgument, "uniform width out of range");
  }
  std::vector<i128> out(n);
  const unsigned __int128 span_mask =
      (static_cast<unsigned __int128>(1) << (bits + 1)) - 1;
  const i128 offset = static_cast<i128>(1) << bits;
  for (size_t i = 0; i < n; ++i) {
    unsigned __int128 v = xof.NextU64();
    if (bits + 1 > 64) v |= static_cast<unsigned __int128>(xof.NextU64()) << 64;
    out[i] = static_cast<i128>(v & span_mask) - offset;
  }
  return out;
}

RingElement SampleTernaryElement(const Context& ctx, Xof& xof, size_t limbs) {
  RingElement r = FromSigned(ctx, SampleTernary(xof, ctx.n()), limbs);
  ToNtt(ctx, r);
  return r;
}

RingElement SampleErrorElement(const Context& ctx, Xof& xof, size_t limbs) {
  RingElement r = FromSigned(ctx, SampleCbd(xof, ctx.n(), ctx.params().cbd_k), limbs);
  ToNtt(ctx, r);
  return r;
}

RingElement SampleFloodElement(const Context& ctx, Xof& xof, size_t limbs,
                               int bits) {
  RingElement r = FromSigned128(ctx, SampleUniformSigned(xof, ctx.n(), bits), limbs);
  ToNtt(ctx, r);
  return r;
}

}  // namespace cti::mhe
