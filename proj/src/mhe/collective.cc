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


#include "cti/mhe/collective.h"

#include <cmath>
#include <string>

#include "cti/common/error.h"
#include "cti/mhe/encoder.h"
#include "cti/mhe/evaluator.h"
#include "cti/mhe/sampler.h"
#include "cti/mhe/serialize.h"

namespace cti::mhe {
namespace {

RingElement QLimbs(const Context& ctx, const RingElement& e) {
  return Truncate(e, ctx.q_count());
}

void CheckDegreeOne(const Context& ctx, const Ciphertext& ct) {
  if (ct.params_id != ctx.params_id()) {
    throw Error(ErrorCode::kParamsMismatch, "ciphertext from another parameter set");
  }
  if (ct.degree() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "protocol input must be degree 1");
  }
}

void CheckShareSize(const std::vector<RingElement>& s, size_t expected) {
  if (s.size() != expected) {
    throw Error(ErrorCode::kProtocol, "share has wrong number of elements");
  }
}

Int256 FloorDiv(const Int256& a, const Int256& d) {
  Int256 q = a / d;
  if (a % d != 0 && a < 0) q -= 1;
  return q;
}

int LogDivisor(const LinearTransform& t) {
  return t.log_ratio +
         (t.kind == LinearTransform::Kind::kDiagonalScale ? t.diag_log_scale : 0);
}

RingElement DiagonalPoly(const Context& ctx, const LinearTransform& t,
                         double* l1_norm = nullptr) {
  std::vector<i128> pd = EncodeCoefficients(ctx, t.diag, t.diag_log_scale);
  if (l1_norm != nullptr) {
    double s = 0.0;
    for (i128 v : pd) s += std::fabs(static_cast<double>(v));
    *l1_norm = s;
  }
  RingElement e = FromSigned128(ctx, pd, ctx.q_count());
  ToNtt(ctx, e);
  return e;
}

int MaskBits(const LinearTransform& t, int plain_bound_bits, int lambda) {
  return std::max(0, plain_bound_bits + lambda - LogDivisor(t));
}

// L applied to a mask M = D * M~, which is exact: it only needs M~.
RingElement TransformMask(const Context& ctx, const LinearTransform& t,
                          const std::vector<i128>& mask_tilde) {
  using Kind = LinearTransform::Kind;
  RingElement out;
  switch (t.kind) {
    case Kind::kIdentity:
      out = FromSigned128(ctx, mask_tilde, ctx.q_count());
      ToNtt(ctx, out);
      return out;
    case Kind::kSlotSumReplicate: {
      std::vector<i128> c(ctx.n(), 0);
      c[0] = mask_tilde[0] * static_cast<i128>(ctx.n() / 2);
      out = FromSigned128(ctx, c, ctx.q_count());
      ToNtt(ctx, out);
      return out;
    }
    case Kind::kDiagonalScale: {
      out = FromSigned128(ctx, mask_tilde, ctx.q_count());
      ToNtt(ctx, out);
      return MulNtt(ctx, out, DiagonalPoly(ctx, t));
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unsupported transform kind");
}

}  // namespace

std::string_view RoundLabel(ProtocolKind kind, int round) {
  switch (kind) {
    case ProtocolKind::kCkg: return "ckg/1";
    case ProtocolKind::kRkg: return round == 1 ? "rkg/1" : "rkg/2";
    case ProtocolKind::kDecrypt: return "dec/1";
    case ProtocolKind::kPcks: return "pcks/1";
    case ProtocolKind::kRefresh: return "ref/1";
  }
  return "unknown";
}

std::vector<uint8_t> SerializeShare(const Context& ctx, const ProtocolShare& share) {
  std::vector<uint8_t> out;
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(share.party >> (8 * i)));
  out.push_back(static_cast<uint8_t>(share.kind));
  out.push_back(share.round);
  std::vector<uint8_t> polys = SerializePolys(ctx, share.payload, 0);
  out.insert(out.end(), polys.begin(), polys.end());
  return out;
}

ProtocolShare DeserializeShare(const Context& ctx, std::span<const uint8_t> bytes) {
  if (bytes.size() < 6) throw Error(ErrorCode::kParse, "short protocol share");
  ProtocolShare s;
  for (int i = 0; i < 4; ++i) s.party |= static_cast<uint32_t>(bytes[i]) << (8 * i);
  if (bytes[4] < 1 || bytes[4] > 5) throw Error(ErrorCode::kParse, "bad protocol kind");
  s.kind = static_cast<ProtocolKind>(bytes[4]);
  s.round = bytes[5];
  if (s.round < 1 || s.round > 2) throw Error(ErrorCode::kParse, "bad round number");
  s.payload = DeserializePolys(ctx, bytes.subspan(6)).parts;
  return s;
}

void AccumulateShare(const Context& ctx, std::vector<RingElement>& acc,
                     const std::vector<RingElement>& share) {
  if (acc.empty()) {
    acc = share;
    return;
  }
  CheckShareSize(share, acc.size());
  for (size_t k = 0; k < acc.size(); ++k) AddInPlace(ctx, acc[k], share[k]);
}

std::vector<RingElement> SumShares(const Context& ctx,
                                   std::span<const std::vector<RingElement>> shares) {
  std::vector<RingElement> acc;
  for (const auto& s : shares) AccumulateShare(ctx, acc, s);
  return acc;
}

RingElement CkgCrs(const Context& ctx, const SessionId& session) {
  return DeriveCrs(ctx, session, RoundLabel(ProtocolKind::kCkg, 1), 0, ctx.qp_count());
}

RingElement CkgShare(const Context& ctx, const SecretKey& sk,
                     const RingElement& crs, Xof& xof) {
  RingElement h = SampleErrorElement(ctx, xof, ctx.qp_count());
  SubInPlace(ctx, h, MulNtt(ctx, sk.s, crs));
  return h;
}

PublicKey CkgCombine(const RingElement& share_sum, const RingElement& crs) {
  return {share_sum, crs};
}

std::vector<RingElement> RkgRound1Share(const Context& ctx, const SecretKey& sk,
                                        const PublicKey& pk, Xof& xof) {
  const size_t l = ctx.q_count();
  const size_t qp = ctx.qp_count();
  std::vector<RingElement> out;
  for (size_t j = 0; j < l; ++j) {
    RingElement v = SampleTernaryElement(ctx, xof, qp);
    RingElement c0 = MulNtt(ctx, v, pk.p0);
    AddInPlace(ctx, c0, SampleErrorElement(ctx, xof, qp));
    // s_i * P * g_j: P mod q_j in limb j, zero in every other limb.
    RingElement sg(ctx.n(), qp, true);
    simd::MulScalarMod(sk.s.limb(j), ctx.p_mod_q(j), sg.limb(j), ctx.modulus(j));
    AddInPlace(ctx, c0, sg);
    RingElement c1 = MulNtt(ctx, v, pk.p1);
    AddInPlace(ctx, c1, SampleErrorElement(ctx, xof, qp));
    out.push_back(std::move(c0));
    out.push_back(std::move(c1));
  }
  return out;
}

std::vector<RingElement> RkgRound2Share(const Context& ctx, const SecretKey& sk,
                                        const std::vector<RingElement>& round1_sum,
                                        Xof& xof) {
  CheckShareSize(round1_sum, 2 * ctx.q_count());
  std::vector<RingElement> out;
  for (const RingElement& c : round1_sum) {
    RingElement h = MulNtt(ctx, sk.s, c);
    AddInPlace(ctx, h, SampleErrorElement(ctx, xof, ctx.qp_count()));
    out.push_back(std::move(h));
  }
  return out;
}

RelinKey RkgCombine(const Context& ctx, const std::vector<RingElement>& round2_sum) {
  CheckShareSize(round2_sum, 2 * ctx.q_count());
  RelinKey rlk;
  for (size_t j = 0; j < ctx.q_count(); ++j) {
    rlk.k0.push_back(round2_sum[2 * j]);
    rlk.k1.push_back(round2_sum[2 * j + 1]);
  }
  return rlk;
}

void CheckDecryptHeadroom(const Context& ctx, int log_scale, size_t parties) {
  const auto& p = ctx.params();
  const double bits = std::log2(static_cast<double>(std::max<size_t>(parties, 1))) +
                      std::max(log_scale + p.value_bound_bits, p.decrypt_smudge_bits) + 1;
  if (bits >= ctx.log_q() - 2.0) {
    throw Error(ErrorCode::kHeadroom, "decryption would wrap around Q");
  }
}

RingElement DecryptShare(const Context& ctx, const SecretKey& sk,
                         const Ciphertext& ct, Xof& xof) {
  CheckDegreeOne(ctx, ct);
  RingElement h = MulNtt(ctx, QLimbs(ctx, sk.s), ct.parts[1]);
  AddInPlace(ctx, h, SampleFloodElement(ctx, xof, ctx.q_count(),
                                        ctx.params().decrypt_smudge_bits));
  return h;
}

Plaintext DecryptCombine(const Context& ctx, const Ciphertext& ct,
                         const RingElement& share_sum) {
  CheckDegreeOne(ctx, ct);
  Plaintext pt;
  pt.poly = Add(ctx, ct.parts[0], share_sum);
  pt.log_scale = ct.log_scale;
  return pt;
}

std::vector<RingElement> PcksShare(const Context& ctx, const SecretKey& sk,
                                   const Ciphertext& ct, const PublicKey& target,
                                   Xof& xof) {
  CheckDegreeOne(ctx, ct);
  const size_t l = ctx.q_count();
  RingElement v = SampleTernaryElement(ctx, xof, l);
  RingElement h0 = MulNtt(ctx, QLimbs(ctx, sk.s), ct.parts[1]);
  MulAddNtt(ctx, h0, v, QLimbs(ctx, target.p0));
  AddInPlace(ctx, h0, SampleFloodElement(ctx, xof, l, ctx.params().decrypt_smudge_bits));
  RingElement h1 = MulNtt(ctx, v, QLimbs(ctx, target.p1));
  AddInPlace(ctx, h1, SampleErrorElement(ctx, xof, l));
  return {std::move(h0), std::move(h1)};
}

Ciphertext PcksCombine(const Context& ctx, const Ciphertext& ct,
                       const std::vector<RingElement>& share_sum) {
  CheckDegreeOne(ctx, ct);
  CheckShareSize(share_sum, 2);
  Ciphertext out;
  out.params_id = ct.params_id;
  out.log_scale = ct.log_scale;
  out.parts = {Add(ctx, ct.parts[0], share_sum[0]), share_sum[1]};
  return out;
}

LinearTransform LinearTransform::Identity(int log_ratio) {
  LinearTransform t;
  t.kind = Kind::kIdentity;
  t.log_ratio = log_ratio;
  return t;
}

LinearTransform LinearTransform::SlotSum(int log_ratio) {
  LinearTransform t;
  t.kind = Kind::kSlotSumReplicate;
  t.log_ratio = log_ratio;
  return t;
}

LinearTransform LinearTransform::Diagonal(std::vector<double> d, int log_ratio,
                                          int diag_log_scale) {
  LinearTransform t;
  t.kind = Kind::kDiagonalScale;
  t.log_ratio = log_ratio;
  t.diag = std::move(d);
  t.diag_log_scale = diag_log_scale;
  return t;
}

int DefaultPlainBoundBits(const Context& ctx, int log_scale) {
  return log_scale + ctx.params().value_bound_bits;
}

void CheckRefreshHeadroom(const Context& ctx, const LinearTransform& t,
                          int plain_bound_bits, size_t parties) {
  if (t.log_ratio < 0) throw Error(ErrorCode::kInvalidArgument, "negative ratio");
  const int lambda = ctx.params().lambda_smudge;
  double bits = std::log2(static_cast<double>(std::max<size_t>(parties, 1))) +
                plain_bound_bits + lambda + 1;
  if (t.kind == LinearTransform::Kind::kDiagonalScale) {
    double l1 = 0.0;
    DiagonalPoly(ctx, t, &l1);
    bits += std::log2(std::max(l1, 1.0));
  } else if (t.kind == LinearTransform::Kind::kSlotSumReplicate) {
    bits += std::log2(static_cast<double>(ctx.n() / 2));
  }
  if (bits >= ctx.log_q() - 2.0) {
    throw Error(ErrorCode::kHeadroom,
                "refresh needs 2^" + std::to_string(bits) + " of headroom");
  }
  if (MaskBits(t, plain_bound_bits, lambda) + std::log2(ctx.n()) > 120) {
    throw Error(ErrorCode::kHeadroom, "refresh mask too wide");
  }
}

RingElement RefreshCrs(const Context& ctx, const SessionId& session) {
  return DeriveCrs(ctx, session, RoundLabel(ProtocolKind::kRefresh, 1), 0,
                   ctx.q_count());
}

std::vector<RingElement> RefreshShare(const Context& ctx, const SecretKey& sk,
                                      const Ciphertext& ct,
                                      const LinearTransform& t,
                                      int plain_bound_bits,
                                      const RingElement& crs, Xof& xof) {
  CheckDegreeOne(ctx, ct);
  CheckRefreshHeadroom(ctx, t, plain_bound_bits, 1);
  const size_t l = ctx.q_count();
  const int log_d = LogDivisor(t);
  const std::vector<i128> mask_tilde =
      SampleUniformSigned(xof, ctx.n(), MaskBits(t, plain_bound_bits,
                                                 ctx.params().lambda_smudge));
  // M = 2^log_d * M~, formed in RNS since it can exceed 128 bits.
  RingElement mask = FromSigned128(ctx, mask_tilde, l);
  ToNtt(ctx, mask);
  std::vector<uint64_t> d_mod(l);
  for (size_t j = 0; j < l; ++j) {
    d_mod[j] = 1;
    for (int b = 0; b < log_d; ++b) d_mod[j] = (d_mod[j] * 2) % ctx.modulus(j);
  }
  MulScalarInPlace(ctx, mask, d_mod);

  const RingElement s = QLimbs(ctx, sk.s);
  RingElement h0 = MulNtt(ctx, s, ct.parts[1]);
  AddInPlace(ctx, h0, mask);
  AddInPlace(ctx, h0, SampleErrorElement(ctx, xof, l));

  RingElement h1 = SampleErrorElement(ctx, xof, l);
  SubInPlace(ctx, h1, MulNtt(ctx, s, crs));
  SubInPlace(ctx, h1, TransformMask(ctx, t, mask_tilde));
  return {std::move(h0), std::move(h1)};
}

std::vector<Int256> ApplyTransform(const Context& ctx, const LinearTransform& t,
                                   const std::vector<Int256>& lifted) {
  using Kind = LinearTransform::Kind;
  const Int256 d = Int256(1) << LogDivisor(t);
  const Int256 half = d / 2;
  std::vector<Int256> out(ctx.n(), 0);
  switch (t.kind) {
    case Kind::kIdentity:
      for (size_t i = 0; i < out.size(); ++i) out[i] = FloorDiv(lifted[i] + half, d);
      return out;
    case Kind::kSlotSumReplicate:
      // The real slots of m sum to (N/2) m_0; the replicated sum is that
      // constant polynomial.
      out[0] = FloorDiv(lifted[0] * static_cast<uint64_t>(ctx.n() / 2) + half, d);
      return out;
    case Kind::kDiagonalScale: {
      RingElement x = FromBig(ctx, lifted, ctx.q_count());
      ToNtt(ctx, x);
      const std::vector<Int256> prod =
          LiftCentered(ctx, MulNtt(ctx, x, DiagonalPoly(ctx, t)));
      for (size_t i = 0; i < out.size(); ++i) out[i] = FloorDiv(prod[i] + half, d);
      return out;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unsupported transform kind");
}

Ciphertext RefreshCombine(const Context& ctx, const Ciphertext& ct,
                          const LinearTransform& t,
                          const std::vector<RingElement>& share_sum,
                          const RingElement& crs) {
  CheckDegreeOne(ctx, ct);
  CheckShareSize(share_sum, 2);
  if (ct.log_scale < t.log_ratio) {
    throw Error(ErrorCode::kScaleMismatch, "ratio exceeds ciphertext scale");
  }
  const RingElement mu = Add(ctx, ct.parts[0], share_sum[0]);
  RingElement c0 = FromBig(ctx, ApplyTransform(ctx, t, LiftCentered(ctx, mu)),
                           ctx.q_count());
  ToNtt(ctx, c0);
  AddInPlace(ctx, c0, share_sum[1]);
  Ciphertext out;
  out.params_id = ct.params_id;
  out.log_scale = ct.log_scale - t.log_ratio;
  out.parts = {std::move(c0), crs};
  return out;
}

}  // namespace cti::mhe
