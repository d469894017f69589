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


#include "cti/analytics/fed_train.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cti/common/error.h"
#include "cti/mhe/collective.h"
#include "cti/mhe/encoder.h"
#include "cti/mhe/evaluator.h"
#include "cti/net/protocols.h"

namespace cti::analytics {

size_t RefreshesPerIteration(size_t features, size_t chunks, int degree) {
  return chunks * (degree == 3 ? 2 : 1) + features;
}

EncryptedModel FedTrainEncrypted(net::Party& p, const MheKeys& k, const Dataset& local,
                                 const TrainConfig& config, mhe::Xof& xof,
                                 FedTrainStats* stats, bool debug, std::string_view tag) {
  const std::string t(tag);
  const mhe::Context& ctx = *k.ctx;
  const int d = ctx.params().log_delta;
  if (!(config.eta > 0)) throw Error(ErrorCode::kInvalidArgument, "learning rate must be > 0");
  if (config.batch != 0) {
    throw Error(ErrorCode::kInvalidArgument, "encrypted training uses full local batches");
  }
  for (int y : local.y) {
    if (y != 0 && y != 1) throw Error(ErrorCode::kInvalidArgument, "labels must be 0 or 1");
  }
  // Schema agreement is checked on public counts, so every node fails alike.
  const auto cols = ExchangeCounts(p, local.cols(), t + "/cols");
  if (std::any_of(cols.begin(), cols.end(), [&](size_t c) { return c != cols[0]; })) {
    throw Error(ErrorCode::kInvalidArgument, "nodes disagree on the feature count");
  }
  const auto rows = ExchangeCounts(p, local.rows(), t + "/rows");
  const SlotLayout layout = MakeLayout(rows, p.id(), ctx.slots());
  if (layout.total_rows == 0) throw Error(ErrorCode::kInvalidArgument, "empty training set");
  const size_t m = local.cols();
  const size_t chunks = layout.chunks();
  const double step = -config.eta / static_cast<double>(layout.total_rows);

  // Local plaintext operands, encoded once.
  std::vector<std::vector<mhe::Plaintext>> x_pt(chunks), g_pt(chunks);
  std::vector<mhe::Plaintext> neg_y(chunks);
  std::vector<double> col(local.rows());
  for (size_t j = 0; j < m; ++j) {
    for (size_t r = 0; r < local.rows(); ++r) col[r] = local.row(r)[j];
    const auto xs = layout.Scatter(col);
    for (auto& v : col) v *= step;
    const auto gs = layout.Scatter(col);
    for (size_t c = 0; c < chunks; ++c) {
      x_pt[c].push_back(mhe::Encode(ctx, xs[c], d));
      g_pt[c].push_back(mhe::Encode(ctx, gs[c], d));
    }
  }
  for (size_t r = 0; r < local.rows(); ++r) col[r] = -static_cast<double>(local.y[r]);
  const auto ys = layout.Scatter(col);
  for (size_t c = 0; c < chunks; ++c) neg_y[c] = mhe::Encode(ctx, ys[c], 2 * d);

  EncryptedModel model;
  model.feature_names = local.feature_names;
  model.config_hash = ConfigHash(config);
  // Node 0 encrypts the zero model and hands it to everyone.
  net::Bytes init;
  if (p.id() == 0) {
    const mhe::Plaintext zero = mhe::EncodeConstant(ctx, 0.0, d);
    std::vector<mhe::Ciphertext> w;
    for (size_t j = 0; j < m; ++j) w.push_back(mhe::Encrypt(ctx, k.pk, zero, xof));
    init = net::EncodeCiphertexts(ctx, w);
  }
  init = p.Broadcast(0, t + "/init", net::MsgType::kCiphertext, std::move(init));
  model.weights = m == 0 ? std::vector<mhe::Ciphertext>{} : net::DecodeCiphertexts(ctx, init);

  FedTrainStats local_stats;
  local_stats.chunks = chunks;
  const double clip = config.value_clip > 0 ? config.value_clip : config.poly.b_act;
  for (int it = 0; it < config.iterations; ++it) {
    p.SetIteration(it);
    std::vector<mhe::Ciphertext> u(chunks);
    for (size_t c = 0; c < chunks; ++c) {
      for (size_t j = 0; j < m; ++j) {
        mhe::Ciphertext t = mhe::MulPlain(ctx, model.weights[j], x_pt[c][j]);
        if (j == 0) {
          u[c] = std::move(t);
        } else {
          mhe::AddInPlace(ctx, u[c], t);
        }
      }
    }
    u = net::NetAggregateAllBatch(p, ctx, u, t + "/u/agg");
    ++local_stats.aggregate_rounds;
    if (debug) {
      auto pts = net::NetDecryptBatch(p, ctx, k.sk, u, 0, t + "/u/debug", xof);
      for (const auto& pt : pts) {
        for (double v : mhe::Decode(ctx, pt)) {
          local_stats.max_abs_u = std::max(local_stats.max_abs_u, std::fabs(v));
        }
      }
      if (local_stats.max_abs_u > clip) {
        throw Error(ErrorCode::kFailedPrecondition, "activation input left the fitted interval");
      }
    }
    const auto pu = EvalPolySigmoid(p, k, u, config.poly, t + "/act", xof, &local_stats.refreshes);
    local_stats.refresh_rounds += config.poly.degree == 3 ? 2 : 1;

    std::vector<mhe::Ciphertext> g(m);
    for (size_t c = 0; c < chunks; ++c) {
      const mhe::Ciphertext r = mhe::AddPlain(ctx, pu[c], neg_y[c]);
      for (size_t j = 0; j < m; ++j) {
        mhe::Ciphertext t = mhe::MulPlain(ctx, r, g_pt[c][j]);
        if (c == 0) {
          g[j] = std::move(t);
        } else {
          mhe::AddInPlace(ctx, g[j], t);
        }
      }
    }
    g = net::NetAggregateAllBatch(p, ctx, g, t + "/g/agg");
    ++local_stats.aggregate_rounds;
    g = net::NetRefreshBatch(p, ctx, k.sk, g, mhe::LinearTransform::SlotSum(2 * d),
                             mhe::DefaultPlainBoundBits(ctx, 3 * d), t + "/g/ref", xof);
    local_stats.refreshes += g.size();
    ++local_stats.refresh_rounds;
    for (size_t j = 0; j < m; ++j) mhe::AddInPlace(ctx, model.weights[j], g[j]);
    model.iterations = it + 1;
  }
  p.SetIteration(-1);
  if (stats) *stats = local_stats;
  return model;
}

std::optional<std::vector<double>> DecryptModel(net::Party& p, const MheKeys& k,
                                                const EncryptedModel& model,
                                                uint32_t recipient, mhe::Xof& xof) {
  const auto pts = net::NetDecryptBatch(p, *k.ctx, k.sk, model.weights, recipient,
                                        "model/dec", xof);
  if (p.id() != recipient) return std::nullopt;
  std::vector<double> w;
  for (const auto& pt : pts) w.push_back(mhe::Decode(*k.ctx, pt)[0]);
  return w;
}

}  // namespace cti::analytics
