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


#include "cti/analytics/predict.h"

#include <algorithm>
#include <string>

#include "cti/common/error.h"
#include "cti/mhe/encoder.h"
#include "cti/mhe/evaluator.h"
#include "cti/net/protocols.h"

namespace cti::analytics {
namespace {

size_t Chunks(size_t rows, size_t slots) { return std::max<size_t>(1, (rows + slots - 1) / slots); }

std::vector<double> Column(const Dataset& d, size_t j, size_t first, size_t count) {
  std::vector<double> v(count);
  for (size_t r = 0; r < count; ++r) v[r] = d.row(first + r)[j];
  return v;
}

// u from the origin to every node, then activation and key switch.
std::vector<mhe::Ciphertext> Finish(net::Party& p, const MheKeys& k,
                                    std::vector<mhe::Ciphertext> u, uint32_t origin,
                                    const PolySigmoid& poly, const mhe::PublicKey& querier_pk,
                                    uint32_t recipient, mhe::Xof& xof, const std::string& t) {
  const mhe::Context& ctx = *k.ctx;
  net::Bytes b = p.id() == origin ? net::EncodeCiphertexts(ctx, u) : net::Bytes{};
  b = p.Broadcast(origin, t + "/u", net::MsgType::kCiphertext, std::move(b));
  u = net::DecodeCiphertexts(ctx, b);
  const auto pu = EvalPolySigmoid(p, k, u, poly, t + "/act", xof);
  return net::NetPcksBatch(p, ctx, k.sk, pu, querier_pk, recipient, t + "/pcks", xof);
}

void CheckModel(const EncryptedModel& model, size_t cols) {
  if (model.weights.size() != cols) {
    throw Error(ErrorCode::kInvalidArgument, "query feature count differs from the model");
  }
}

}  // namespace

EncryptedQuery EncryptQuery(const mhe::Context& ctx, const mhe::PublicKey& pk,
                            const Dataset& query, mhe::Xof& xof) {
  const size_t slots = ctx.slots();
  EncryptedQuery q(Chunks(query.rows(), slots));
  for (size_t c = 0; c < q.size(); ++c) {
    const size_t first = c * slots;
    const size_t count = std::min(slots, query.rows() - std::min(first, query.rows()));
    for (size_t j = 0; j < query.cols(); ++j) {
      q[c].push_back(mhe::Encrypt(
          ctx, pk, mhe::Encode(ctx, Column(query, j, first, count), ctx.params().log_delta),
          xof));
    }
  }
  return q;
}

std::vector<mhe::Ciphertext> PredictEncrypted(net::Party& p, const MheKeys& k,
                                              const EncryptedModel& model,
                                              const Dataset* query, uint32_t origin,
                                              const PolySigmoid& poly,
                                              const mhe::PublicKey& querier_pk,
                                              uint32_t recipient, mhe::Xof& xof,
                                              std::string_view tag) {
  const mhe::Context& ctx = *k.ctx;
  std::vector<mhe::Ciphertext> u;
  if (p.id() == origin) {
    if (!query) throw Error(ErrorCode::kInvalidArgument, "origin holds no query");
    CheckModel(model, query->cols());
    const size_t slots = ctx.slots();
    for (size_t c = 0; c < Chunks(query->rows(), slots); ++c) {
      const size_t first = c * slots;
      const size_t count = std::min(slots, query->rows() - std::min(first, query->rows()));
      mhe::Ciphertext acc;
      for (size_t j = 0; j < query->cols(); ++j) {
        const mhe::Plaintext x =
            mhe::Encode(ctx, Column(*query, j, first, count), ctx.params().log_delta);
        mhe::Ciphertext t = mhe::MulPlain(ctx, model.weights[j], x);
        if (j == 0) {
          acc = std::move(t);
        } else {
          mhe::AddInPlace(ctx, acc, t);
        }
      }
      u.push_back(std::move(acc));
    }
  }
  return Finish(p, k, std::move(u), origin, poly, querier_pk, recipient, xof, std::string(tag));
}

std::vector<mhe::Ciphertext> PredictEncrypted(net::Party& p, const MheKeys& k,
                                              const EncryptedModel& model,
                                              const EncryptedQuery* enc_query,
                                              uint32_t origin, const PolySigmoid& poly,
                                              const mhe::PublicKey& querier_pk,
                                              uint32_t recipient, mhe::Xof& xof,
                                              std::string_view tag) {
  const mhe::Context& ctx = *k.ctx;
  std::vector<mhe::Ciphertext> u;
  if (p.id() == origin) {
    if (!enc_query) throw Error(ErrorCode::kInvalidArgument, "origin holds no query");
    if (!k.has_rlk) throw Error(ErrorCode::kFailedPrecondition, "missing relinearization key");
    for (const auto& chunk : *enc_query) {
      CheckModel(model, chunk.size());
      mhe::Ciphertext acc;
      for (size_t j = 0; j < chunk.size(); ++j) {
        mhe::Ciphertext t = mhe::MulCt(ctx, model.weights[j], chunk[j], k.rlk);
        if (j == 0) {
          acc = std::move(t);
        } else {
          mhe::AddInPlace(ctx, acc, t);
        }
      }
      u.push_back(std::move(acc));
    }
  }
  return Finish(p, k, std::move(u), origin, poly, querier_pk, recipient, xof, std::string(tag));
}

std::vector<double> DecryptProbabilities(const mhe::Context& ctx, const mhe::SecretKey& sk,
                                         const std::vector<mhe::Ciphertext>& cts, size_t rows) {
  std::vector<double> out;
  for (const auto& ct : cts) {
    const std::vector<double> v = mhe::Decode(ctx, mhe::DecryptDebug(ctx, sk, ct));
    out.insert(out.end(), v.begin(), v.end());
  }
  if (out.size() < rows) throw Error(ErrorCode::kInvalidArgument, "fewer slots than rows");
  out.resize(rows);
  return out;
}

}  // namespace cti::analytics
