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


#include "cti/net/protocols.h"

#include <string>

#include "cti/common/error.h"
#include "cti/mhe/evaluator.h"
#include "cti/mhe/serialize.h"

namespace cti::net {
namespace {

using mhe::Context;
using mhe::RingElement;

Bytes EncodeShare(const Context& ctx, const std::vector<RingElement>& parts) {
  return mhe::SerializePolys(ctx, parts, 0);
}

std::vector<RingElement> DecodeShare(const Context& ctx, const Bytes& bytes) {
  return mhe::DeserializePolys(ctx, bytes).parts;
}

// Sums share bundles up the tree; the root gets the total.
std::optional<std::vector<RingElement>> ReduceShares(Party& p, const Context& ctx,
                                                     uint32_t root, std::string_view round,
                                                     const std::vector<RingElement>& mine) {
  auto fold = [&ctx](Bytes acc, const Bytes& child) {
    std::vector<RingElement> sum = DecodeShare(ctx, acc);
    const std::vector<RingElement> c = DecodeShare(ctx, child);
    if (c.size() != sum.size()) {
      throw Error(ErrorCode::kProtocol, "share shape differs between parties");
    }
    mhe::AccumulateShare(ctx, sum, c);
    return EncodeShare(ctx, sum);
  };
  std::optional<Bytes> total = p.Reduce(root, round, MsgType::kShare, EncodeShare(ctx, mine), fold);
  if (!total) return std::nullopt;
  return DecodeShare(ctx, *total);
}

}  // namespace

mhe::PublicKey NetCkg(Party& p, const Context& ctx, const mhe::SecretKey& sk, mhe::Xof& xof) {
  const std::string_view round = mhe::RoundLabel(mhe::ProtocolKind::kCkg, 1);
  const RingElement crs = mhe::CkgCrs(ctx, p.session());
  auto sum = ReduceShares(p, ctx, 0, round, {mhe::CkgShare(ctx, sk, crs, xof)});
  Bytes pk_bytes;
  if (sum) pk_bytes = mhe::SerializePublicKey(ctx, mhe::CkgCombine(sum->at(0), crs));
  pk_bytes = p.Broadcast(0, "ckg/pk", MsgType::kControl, std::move(pk_bytes));
  return mhe::DeserializePublicKey(ctx, pk_bytes);
}

mhe::RelinKey NetRkg(Party& p, const Context& ctx, const mhe::SecretKey& sk,
                     const mhe::PublicKey& pk, mhe::Xof& xof) {
  const std::string_view r1 = mhe::RoundLabel(mhe::ProtocolKind::kRkg, 1);
  const std::string_view r2 = mhe::RoundLabel(mhe::ProtocolKind::kRkg, 2);
  auto sum1 = ReduceShares(p, ctx, 0, r1, mhe::RkgRound1Share(ctx, sk, pk, xof));
  Bytes agg1 = sum1 ? EncodeShare(ctx, *sum1) : Bytes{};
  agg1 = p.Broadcast(0, "rkg/1/sum", MsgType::kShare, std::move(agg1));
  const std::vector<RingElement> round1 = DecodeShare(ctx, agg1);
  auto sum2 = ReduceShares(p, ctx, 0, r2, mhe::RkgRound2Share(ctx, sk, round1, xof));
  Bytes rlk;
  if (sum2) rlk = mhe::SerializeRelinKey(ctx, mhe::RkgCombine(ctx, *sum2));
  rlk = p.Broadcast(0, "rkg/rlk", MsgType::kControl, std::move(rlk));
  return mhe::DeserializeRelinKey(ctx, rlk);
}

std::optional<mhe::Plaintext> NetDecrypt(Party& p, const Context& ctx, const mhe::SecretKey& sk,
                                         const mhe::Ciphertext& ct, uint32_t recipient,
                                         mhe::Xof& xof) {
  mhe::CheckDecryptHeadroom(ctx, ct.log_scale, p.size());
  const std::string_view round = mhe::RoundLabel(mhe::ProtocolKind::kDecrypt, 1);
  auto sum = ReduceShares(p, ctx, recipient, round, {mhe::DecryptShare(ctx, sk, ct, xof)});
  if (!sum) return std::nullopt;
  return mhe::DecryptCombine(ctx, ct, sum->at(0));
}

std::optional<mhe::Ciphertext> NetPcks(Party& p, const Context& ctx, const mhe::SecretKey& sk,
                                       const mhe::Ciphertext& ct, const mhe::PublicKey& target,
                                       uint32_t recipient, mhe::Xof& xof) {
  const std::string_view round = mhe::RoundLabel(mhe::ProtocolKind::kPcks, 1);
  auto sum = ReduceShares(p, ctx, recipient, round, mhe::PcksShare(ctx, sk, ct, target, xof));
  if (!sum) return std::nullopt;
  return mhe::PcksCombine(ctx, ct, *sum);
}

mhe::Ciphertext NetRefresh(Party& p, const Context& ctx, const mhe::SecretKey& sk,
                           const mhe::Ciphertext& ct, const mhe::LinearTransform& t,
                           int plain_bound_bits, std::string_view round, mhe::Xof& xof) {
  mhe::CheckRefreshHeadroom(ctx, t, plain_bound_bits, p.size());
  const RingElement crs = mhe::DeriveCrs(ctx, p.session(), p.Label(round), 0, ctx.q_count());
  auto sum = ReduceShares(p, ctx, 0, round,
                          mhe::RefreshShare(ctx, sk, ct, t, plain_bound_bits, crs, xof));
  Bytes out;
  if (sum) out = mhe::SerializeCiphertext(ctx, mhe::RefreshCombine(ctx, ct, t, *sum, crs));
  out = p.Broadcast(0, std::string(round) + "/out", MsgType::kCiphertext, std::move(out));
  return mhe::DeserializeCiphertext(ctx, out);
}

std::optional<mhe::Ciphertext> NetAggregate(Party& p, const Context& ctx,
                                            const mhe::Ciphertext& ct, uint32_t root,
                                            std::string_view round) {
  auto fold = [&ctx](Bytes acc, const Bytes& child) {
    mhe::Ciphertext sum = mhe::DeserializeCiphertext(ctx, acc);
    mhe::AddInPlace(ctx, sum, mhe::DeserializeCiphertext(ctx, child));
    return mhe::SerializeCiphertext(ctx, sum);
  };
  std::optional<Bytes> total =
      p.Reduce(root, round, MsgType::kCiphertext, mhe::SerializeCiphertext(ctx, ct), fold);
  if (!total) return std::nullopt;
  return mhe::DeserializeCiphertext(ctx, *total);
}

mhe::Ciphertext NetAggregateAll(Party& p, const Context& ctx, const mhe::Ciphertext& ct,
                                std::string_view round) {
  auto sum = NetAggregate(p, ctx, ct, 0, round);
  Bytes out = sum ? mhe::SerializeCiphertext(ctx, *sum) : Bytes{};
  out = p.Broadcast(0, std::string(round) + "/sum", MsgType::kCiphertext, std::move(out));
  return mhe::DeserializeCiphertext(ctx, out);
}

Bytes EncodeCiphertexts(const Context& ctx, const std::vector<mhe::Ciphertext>& cts) {
  Bytes out;
  for (const auto& ct : cts) {
    const Bytes b = mhe::SerializeCiphertext(ctx, ct);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::vector<mhe::Ciphertext> DecodeCiphertexts(const Context& ctx, const Bytes& bytes) {
  std::vector<mhe::Ciphertext> out;
  size_t pos = 0;
  while (pos < bytes.size()) {
    size_t used = 0;
    mhe::PolyBundle b =
        mhe::DeserializePolys(ctx, std::span(bytes).subspan(pos), &used);
    if (b.parts.size() < 2) throw Error(ErrorCode::kProtocol, "ciphertext with one part");
    out.push_back({std::move(b.parts), b.log_scale, ctx.params_id()});
    pos += used;
  }
  return out;
}

std::vector<mhe::Ciphertext> NetRefreshBatch(Party& p, const Context& ctx,
                                             const mhe::SecretKey& sk,
                                             const std::vector<mhe::Ciphertext>& cts,
                                             const mhe::LinearTransform& t,
                                             int plain_bound_bits, std::string_view round,
                                             mhe::Xof& xof) {
  if (cts.empty()) return {};
  mhe::CheckRefreshHeadroom(ctx, t, plain_bound_bits, p.size());
  const std::string label = p.Label(round);
  std::vector<RingElement> crs;
  std::vector<RingElement> mine;
  for (size_t i = 0; i < cts.size(); ++i) {
    crs.push_back(mhe::DeriveCrs(ctx, p.session(), label, static_cast<uint32_t>(i),
                                 ctx.q_count()));
    for (auto& r : mhe::RefreshShare(ctx, sk, cts[i], t, plain_bound_bits, crs[i], xof)) {
      mine.push_back(std::move(r));
    }
  }
  const size_t per = mine.size() / cts.size();
  auto sum = ReduceShares(p, ctx, 0, round, mine);
  Bytes out;
  if (sum) {
    std::vector<mhe::Ciphertext> res;
    for (size_t i = 0; i < cts.size(); ++i) {
      std::vector<RingElement> part(sum->begin() + i * per, sum->begin() + (i + 1) * per);
      res.push_back(mhe::RefreshCombine(ctx, cts[i], t, part, crs[i]));
    }
    out = EncodeCiphertexts(ctx, res);
  }
  out = p.Broadcast(0, std::string(round) + "/out", MsgType::kCiphertext, std::move(out));
  return DecodeCiphertexts(ctx, out);
}

std::vector<mhe::Plaintext> NetDecryptBatch(Party& p, const Context& ctx,
                                            const mhe::SecretKey& sk,
                                            const std::vector<mhe::Ciphertext>& cts,
                                            uint32_t recipient, std::string_view round,
                                            mhe::Xof& xof) {
  if (cts.empty()) return {};
  std::vector<RingElement> mine;
  for (const auto& ct : cts) {
    mhe::CheckDecryptHeadroom(ctx, ct.log_scale, p.size());
    mine.push_back(mhe::DecryptShare(ctx, sk, ct, xof));
  }
  auto sum = ReduceShares(p, ctx, recipient, round, mine);
  std::vector<mhe::Plaintext> out;
  if (!sum) return out;
  for (size_t i = 0; i < cts.size(); ++i) {
    out.push_back(mhe::DecryptCombine(ctx, cts[i], sum->at(i)));
  }
  return out;
}

std::vector<mhe::Ciphertext> NetPcksBatch(Party& p, const Context& ctx,
                                          const mhe::SecretKey& sk,
                                          const std::vector<mhe::Ciphertext>& cts,
                                          const mhe::PublicKey& target, uint32_t recipient,
                                          std::string_view round, mhe::Xof& xof) {
  if (cts.empty()) return {};
  std::vector<RingElement> mine;
  for (const auto& ct : cts) {
    for (auto& r : mhe::PcksShare(ctx, sk, ct, target, xof)) mine.push_back(std::move(r));
  }
  const size_t per = mine.size() / cts.size();
  auto sum = ReduceShares(p, ctx, recipient, round, mine);
  std::vector<mhe::Ciphertext> out;
  if (!sum) return out;
  for (size_t i = 0; i < cts.size(); ++i) {
    std::vector<RingElement> part(sum->begin() + i * per, sum->begin() + (i + 1) * per);
    out.push_back(mhe::PcksCombine(ctx, cts[i], part));
  }
  return out;
}

std::vector<mhe::Ciphertext> NetAggregateAllBatch(Party& p, const Context& ctx,
                                                  const std::vector<mhe::Ciphertext>& cts,
                                                  std::string_view round) {
  if (cts.empty()) return {};
  auto fold = [&ctx](Bytes acc, const Bytes& child) {
    std::vector<mhe::Ciphertext> sum = DecodeCiphertexts(ctx, acc);
    const std::vector<mhe::Ciphertext> c = DecodeCiphertexts(ctx, child);
    if (c.size() != sum.size()) {
      throw Error(ErrorCode::kProtocol, "ciphertext count differs between parties");
    }
    for (size_t i = 0; i < sum.size(); ++i) mhe::AddInPlace(ctx, sum[i], c[i]);
    return EncodeCiphertexts(ctx, sum);
  };
  std::optional<Bytes> total =
      p.Reduce(0, round, MsgType::kCiphertext, EncodeCiphertexts(ctx, cts), fold);
  Bytes out = total ? std::move(*total) : Bytes{};
  out = p.Broadcast(0, std::string(round) + "/sum", MsgType::kCiphertext, std::move(out));
  return DecodeCiphertexts(ctx, out);
}

}  // namespace cti::net
