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


#include "cti/mhe/keys.h"

#include "cti/common/error.h"
#include "cti/mhe/sampler.h"

namespace cti::mhe {

SecretKey KeygenSecret(const Context& ctx, Xof& xof) {
  return SecretFromCoeffs(ctx, SampleTernary(xof, ctx.n()));
}

SecretKey SecretFromCoeffs(const Context& ctx, std::vector<int64_t> coeffs) {
  if (coeffs.size() != ctx.n()) {
    throw Error(ErrorCode::kInvalidArgument, "secret length mismatch");
  }
  SecretKey sk;
  sk.s = FromSigned(ctx, coeffs, ctx.qp_count());
  ToNtt(ctx, sk.s);
  sk.coeffs = std::move(coeffs);
  return sk;
}

SecretKey SumSecrets(const Context& ctx, std::span<const SecretKey> shares) {
  std::vector<int64_t> sum(ctx.n(), 0);
  for (const SecretKey& sk : shares) {
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += sk.coeffs[i];
  }
  return SecretFromCoeffs(ctx, std::move(sum));
}

PublicKey KeygenPublic(const Context& ctx, const SecretKey& sk, Xof& xof) {
  PublicKey pk;
  pk.p1 = SampleUniform(ctx, xof, ctx.qp_count());
  pk.p0 = SampleErrorElement(ctx, xof, ctx.qp_count());
  SubInPlace(ctx, pk.p0, MulNtt(ctx, sk.s, pk.p1));
  return pk;
}

}  // namespace cti::mhe
