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


#include "cti/analytics/secure.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "cti/common/error.h"
#include "cti/mhe/collective.h"
#include "cti/mhe/encoder.h"
#include "cti/mhe/evaluator.h"
#include "cti/net/protocols.h"

namespace cti::analytics {
namespace {

net::Bytes PackDoubles(std::span<const double> v) {
  net::Bytes b(v.size() * sizeof(double));
  if (!v.empty()) std::memcpy(b.data(), v.data(), b.size());
  return b;
}

std::vector<double> UnpackDoubles(const net::Bytes& b) {
  if (b.size() % sizeof(double) != 0) throw Error(ErrorCode::kProtocol, "bad vector payload");
  std::vector<double> v(b.size() / sizeof(double));
  if (!v.empty()) std::memcpy(v.data(), b.data(), b.size());
  return v;
}

}  // namespace

MheKeys SetupKeys(net::Party& p, const mhe::Context& ctx, mhe::Xof& xof, bool with_rlk) {
  MheKeys k;
  k.ctx = &ctx;
  k.sk = mhe::KeygenSecret(ctx, xof);
  k.pk = net::NetCkg(p, ctx, k.sk, xof);
  if (with_rlk) {
    k.rlk = net::NetRkg(p, ctx, k.sk, k.pk, xof);
    k.has_rlk = true;
  }
  return k;
}

std::vector<size_t> ExchangeCounts(net::Party& p, size_t local, std::string_view round) {
  std::vector<uint64_t> mine(p.size(), 0);
  mine[p.id()] = local;
  net::Bytes b(mine.size() * 8);
  std::memcpy(b.data(), mine.data(), b.size());
  auto fold = [](net::Bytes acc, const net::Bytes& child) {
    if (acc.size() != child.size()) throw Error(ErrorCode::kProtocol, "count vector size");
    for (size_t i = 0; i < acc.size(); i += 8) {
      uint64_t a, c;
      std::memcpy(&a, acc.data() + i, 8);
      std::memcpy(&c, child.data() + i, 8);
      a += c;
      std::memcpy(acc.data() + i, &a, 8);
    }
    return acc;
  };
  auto total = p.Reduce(0, round, net::MsgType::kControl, std::move(b), fold);
  net::Bytes all = p.Broadcast(0, std::string(round) + "/all", net::MsgType::kControl,
                               total ? std::move(*total) : net::Bytes{});
  if (all.size() != p.size() * 8) throw Error(ErrorCode::kProtocol, "count vector size");
  std::vector<size_t> out(p.size());
  for (size_t i = 0; i < out.size(); ++i) {
    uint64_t v;
    std::memcpy(&v, all.data() + 8 * i, 8);
    out[i] = v;
  }
  return out;
}

std::vector<double> SecureSum(net::Party& p, const MheKeys& k, std::span<const double> local,
                              int log_scale, std::string_view round, mhe::Xof& xof) {
  const mhe::Context& ctx = *k.ctx;
  const size_t slots = ctx.slots();
  std::vector<mhe::Ciphertext> cts;
  for (size_t off = 0; off < std::max<size_t>(local.size(), 1); off += slots) {
    const auto part = local.subspan(off, std::min(slots, local.size() - off));
    cts.push_back(mhe::Encrypt(ctx, k.pk, mhe::Encode(ctx, part, log_scale), xof));
  }
  const std::string r(round);
  auto sums = net::NetAggregateAllBatch(p, ctx, cts, r + "/agg");
  auto pts = net::NetDecryptBatch(p, ctx, k.sk, sums, 0, r + "/dec", xof);
  net::Bytes out;
  if (!pts.empty()) {
    std::vector<double> v;
    for (const auto& pt : pts) {
      const std::vector<double> d = mhe::Decode(ctx, pt);
      v.insert(v.end(), d.begin(), d.end());
    }
    v.resize(local.size());
    out = PackDoubles(v);
  }
  out = p.Broadcast(0, r + "/out", net::MsgType::kControl, std::move(out));
  std::vector<double> v = UnpackDoubles(out);
  if (v.size() != local.size()) throw Error(ErrorCode::kProtocol, "vector length differs");
  return v;
}

std::vector<std::vector<double>> SlotLayout::Scatter(std::span<const double> local_values) const {
  if (local_values.size() != local_rows) {
    throw Error(ErrorCode::kInvalidArgument, "column length differs from the layout");
  }
  std::vector<std::vector<double>> out(chunks(), std::vector<double>(slots, 0.0));
  for (size_t r = 0; r < local_rows; ++r) {
    const size_t g = offset + r;
    out[g / slots][g % slots] = local_values[r];
  }
  return out;
}

SlotLayout MakeLayout(std::span<const size_t> counts, uint32_t self, size_t slots) {
  if (self >= counts.size() || slots == 0) throw Error(ErrorCode::kInvalidArgument, "bad layout");
  SlotLayout l;
  l.slots = slots;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i < self) l.offset += counts[i];
    l.total_rows += counts[i];
  }
  l.local_rows = counts[self];
  return l;
}

std::vector<mhe::Ciphertext> EvalPolySigmoid(net::Party& p, const MheKeys& k,
                                             const std::vector<mhe::Ciphertext>& u,
                                             const PolySigmoid& poly, std::string_view round,
                                             mhe::Xof& xof, size_t* refreshes) {
  const mhe::Context& ctx = *k.ctx;
  const int d = ctx.params().log_delta;
  if (poly.degree != 1 && poly.degree != 3) {
    throw Error(ErrorCode::kInvalidArgument, "encrypted activation supports degree 1 or 3");
  }
  for (const auto& c : u) {
    if (c.log_scale != 2 * d) throw Error(ErrorCode::kScaleMismatch, "u must be at scale delta^2");
  }
  const std::string r(round);
  const auto u1 = net::NetRefreshBatch(p, ctx, k.sk, u, mhe::LinearTransform::Identity(d),
                                       mhe::DefaultPlainBoundBits(ctx, 2 * d), r + "/u", xof);
  size_t count = u.size();
  const mhe::Plaintext a0 = mhe::EncodeConstant(ctx, poly.coeffs[0], 2 * d);
  const mhe::Plaintext a1 = mhe::EncodeConstant(ctx, poly.coeffs[1], d);
  std::vector<mhe::Ciphertext> out;
  for (const auto& c : u1) out.push_back(mhe::AddPlain(ctx, mhe::MulPlain(ctx, c, a1), a0));
  if (poly.degree == 3) {
    if (!k.has_rlk) throw Error(ErrorCode::kFailedPrecondition, "missing relinearization key");
    std::vector<mhe::Ciphertext> sq;
    for (const auto& c : u1) sq.push_back(mhe::MulCt(ctx, c, c, k.rlk));
    // a3 u^2 at scale delta, folded into the refresh.
    const auto t = mhe::LinearTransform::Diagonal(
        std::vector<double>(ctx.slots(), poly.coeffs[3]), d, d);
    sq = net::NetRefreshBatch(p, ctx, k.sk, sq, t, mhe::DefaultPlainBoundBits(ctx, 2 * d),
                              r + "/u2", xof);
    count += u.size();
    for (size_t i = 0; i < out.size(); ++i) {
      mhe::AddInPlace(ctx, out[i], mhe::MulCt(ctx, sq[i], u1[i], k.rlk));
    }
  }
  if (refreshes) *refreshes += count;
  return out;
}

}  // namespace cti::analytics
