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


#include "cti/mhe/evaluator.h"

#include <cmath>
#include <string>

#include "cti/common/error.h"
#include "cti/mhe/sampler.h"

namespace cti::mhe {
namespace {

void CheckParams(const Context& ctx, const Ciphertext& a) {
  if (a.params_id != ctx.params_id()) {
    throw Error(ErrorCode::kParamsMismatch, "ciphertext from another parameter set");
  }
  if (a.parts.size() < 2 || a.parts.size() > 3) {
    throw Error(ErrorCode::kInvalidArgument, "ciphertext degree must be 1 or 2");
  }
}

void CheckPair(const Context& ctx, const Ciphertext& a, const Ciphertext& b) {
  CheckParams(ctx, a);
  CheckParams(ctx, b);
}

void CheckPlain(const Context& ctx, const Plaintext& p) {
  if (p.poly.limbs() != ctx.q_count() || p.poly.n() != ctx.n()) {
    throw Error(ErrorCode::kParamsMismatch, "plaintext shape mismatch");
  }
}

RingElement InNtt(const Context& ctx, RingElement e) {
  ToNtt(ctx, e);
  return e;
}

}  // namespace

void CheckScaleHeadroom(const Context& ctx, int log_scale) {
  const auto& p = ctx.params();
  const double need = log_scale + p.value_bound_bits + p.lambda_smudge +
                      std::log2(static_cast<double>(p.max_parties));
  if (need >= ctx.log_q() - 2.0) {
    throw Error(ErrorCode::kHeadroom,
                "scale 2^" + std::to_string(log_scale) + " leaves no headroom");
  }
}

Ciphertext Encrypt(const Context& ctx, const PublicKey& pk, const Plaintext& pt,
                   Xof& xof) {
  CheckPlain(ctx, pt);
  const size_t l = ctx.q_count();
  RingElement u = SampleTernaryElement(ctx, xof, l);
  Ciphertext ct;
  ct.params_id = ctx.params_id();
  ct.log_scale = pt.log_scale;
  RingElement c0 = MulNtt(ctx, u, Truncate(pk.p0, l));
  AddInPlace(ctx, c0, InNtt(ctx, pt.poly));
  AddInPlace(ctx, c0, SampleErrorElement(ctx, xof, l));
  RingElement c1 = MulNtt(ctx, u, Truncate(pk.p1, l));
  AddInPlace(ctx, c1, SampleErrorElement(ctx, xof, l));
  ct.parts = {std::move(c0), std::move(c1)};
  return ct;
}

Plaintext DecryptDebug(const Context& ctx, const SecretKey& s,
                       const Ciphertext& ct, bool allow_degree2) {
  CheckParams(ctx, ct);
  if (ct.degree() == 2 && !allow_degree2) {
    throw Error(ErrorCode::kInvalidArgument,
                "degree-2 ciphertext needs relinearization");
  }
  const RingElement sq = Truncate(s.s, ctx.q_count());
  Plaintext pt;
  pt.log_scale = ct.log_scale;
  pt.poly = ct.parts[0];
  RingElement s_pow = sq;
  for (size_t k = 1; k < ct.parts.size(); ++k) {
    MulAddNtt(ctx, pt.poly, ct.parts[k], s_pow);
    if (k + 1 < ct.parts.size()) s_pow = MulNtt(ctx, s_pow, sq);
  }
  return pt;
}

Ciphertext Add(const Context& ctx, const Ciphertext& a, const Ciphertext& b) {
  Ciphertext r = a;
  AddInPlace(ctx, r, b);
  return r;
}

void AddInPlace(const Context& ctx, Ciphertext& a, const Ciphertext& b) {
  CheckPair(ctx, a, b);
  if (a.log_scale != b.log_scale) {
    throw Error(ErrorCode::kScaleMismatch,
                "add of scales 2^" + std::to_string(a.log_scale) + " and 2^" +
                    std::to_string(b.log_scale));
  }
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::kInvalidArgument, "add of different degrees");
  }
  for (size_t k = 0; k < a.parts.size(); ++k) {
    mhe::AddInPlace(ctx, a.parts[k], b.parts[k]);
  }
}

Ciphertext Negate(const Context& ctx, const Ciphertext& a) {
  CheckParams(ctx, a);
  Ciphertext r = a;
  for (auto& part : r.parts) NegInPlace(ctx, part);
  return r;
}

Ciphertext AddPlain(const Context& ctx, const Ciphertext& a, const Plaintext& p) {
  CheckParams(ctx, a);
  CheckPlain(ctx, p);
  if (a.log_scale != p.log_scale) {
    throw Error(ErrorCode::kScaleMismatch, "plaintext add with different scale");
  }
  Ciphertext r = a;
  mhe::AddInPlace(ctx, r.parts[0], InNtt(ctx, p.poly));
  return r;
}

Ciphertext MulPlain(const Context& ctx, const Ciphertext& a, const Plaintext& p) {
  CheckParams(ctx, a);
  CheckPlain(ctx, p);
  CheckScaleHeadroom(ctx, a.log_scale + p.log_scale);
  const RingElement pn = InNtt(ctx, p.poly);
  Ciphertext r;
  r.params_id = a.params_id;
  r.log_scale = a.log_scale + p.log_scale;
  for (const auto& part : a.parts) r.parts.push_back(MulNtt(ctx, part, pn));
  return r;
}

Ciphertext Tensor(const Context& ctx, const Ciphertext& a, const Ciphertext& b) {
  CheckPair(ctx, a, b);
  if (a.degree() != 1 || b.degree() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "tensor needs degree-1 inputs");
  }
  CheckScaleHeadroom(ctx, a.log_scale + b.log_scale);
  Ciphertext r;
  r.params_id = a.params_id;
  r.log_scale = a.log_scale + b.log_scale;
  RingElement d0 = MulNtt(ctx, a.parts[0], b.parts[0]);
  RingElement d1 = MulNtt(ctx, a.parts[0], b.parts[1]);
  MulAddNtt(ctx, d1, a.parts[1], b.parts[0]);
  RingElement d2 = MulNtt(ctx, a.parts[1], b.parts[1]);
  r.parts = {std::move(d0), std::move(d1), std::move(d2)};
  return r;
}

Ciphertext Relinearize(const Context& ctx, const Ciphertext& a,
                       const RelinKey& rlk) {
  CheckParams(ctx, a);
  if (a.degree() == 1) return a;
  const size_t l = ctx.q_count();
  if (rlk.k0.size() != l || rlk.k1.size() != l) {
    throw Error(ErrorCode::kFailedPrecondition, "missing or malformed relin key");
  }
  RingElement d2 = a.parts[2];
  FromNtt(ctx, d2);
  RingElement acc0(ctx.n(), l + 1, true);
  RingElement acc1(ctx.n(), l + 1, true);
  RingElement digit(ctx.n(), l + 1, false);
  for (size_t j = 0; j < l; ++j) {
    // RNS digit j: the residues mod q_j, centered into (-q_j/2, q_j/2].
    auto src = d2.limb(j);
    const uint64_t qj = ctx.modulus(j);
    for (size_t k = 0; k <= l; ++k) {
      const uint64_t m = ctx.modulus(k);
      auto dst = digit.limb(k);
      for (size_t i = 0; i < ctx.n(); ++i) {
        const uint64_t v = src[i];
        dst[i] = v > qj / 2 ? (m - (qj - v) % m) % m : v % m;
      }
    }
    digit.set_ntt(false);
    ToNtt(ctx, digit);
    MulAddNtt(ctx, acc0, digit, rlk.k0[j]);
    MulAddNtt(ctx, acc1, digit, rlk.k1[j]);
  }
  Ciphertext r;
  r.params_id = a.params_id;
  r.log_scale = a.log_scale;
  RingElement c0 = a.parts[0];
  mhe::AddInPlace(ctx, c0, ModDownBySpecialPrime(ctx, acc0));
  RingElement c1 = a.parts[1];
  mhe::AddInPlace(ctx, c1, ModDownBySpecialPrime(ctx, acc1));
  r.parts = {std::move(c0), std::move(c1)};
  return r;
}

Ciphertext MulCt(const Context& ctx, const Ciphertext& a, const Ciphertext& b,
                 const RelinKey& rlk) {
  if (rlk.k0.empty()) {
    throw Error(ErrorCode::kFailedPrecondition, "missing relin key");
  }
  return Relinearize(ctx, Tensor(ctx, a, b), rlk);
}

}  // namespace cti::mhe
