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


#include "cti/analytics/ovr.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cti/common/error.h"

namespace cti::analytics {
namespace {

void CheckLabels(const Dataset& d, int n_classes) {
  for (int y : d.y) {
    if (y < 1 || y > n_classes) {
      throw Error(ErrorCode::kInvalidArgument, "label outside 1.." + std::to_string(n_classes));
    }
  }
}

bool Untrainable(const std::vector<int>& u, int label) {
  return std::find(u.begin(), u.end(), label) != u.end();
}

}  // namespace

Dataset BinaryView(const Dataset& d, int positive) {
  Dataset out = d;
  for (int& y : out.y) y = y == positive ? 1 : 0;
  return out;
}

OvrModel OvrTrainCleartext(const std::vector<Dataset>& nodes, int n_classes,
                           const TrainConfig& config, const Activation& act) {
  if (n_classes < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two classes");
  size_t total = 0;
  std::vector<size_t> count(n_classes + 1, 0);
  for (const Dataset& d : nodes) {
    CheckLabels(d, n_classes);
    total += d.rows();
    for (int y : d.y) ++count[y];
  }
  OvrModel m;
  m.weights.resize(n_classes);
  for (int c = 1; c <= n_classes; ++c) {
    if (count[c] == 0 || count[c] == total) {
      m.untrainable.push_back(c);
      continue;
    }
    std::vector<Dataset> bin;
    for (const Dataset& d : nodes) bin.push_back(BinaryView(d, c));
    m.weights[c - 1] = LrTrainCleartext(bin, config, TrainMode::kFederatedAggregated, act)[0];
  }
  return m;
}

std::vector<int> ArgmaxLabels(const std::vector<std::vector<double>>& scores,
                              const std::vector<int>& untrainable) {
  const int n = static_cast<int>(scores.size());
  if (static_cast<int>(untrainable.size()) >= n) {
    throw Error(ErrorCode::kFailedPrecondition, "no trainable class");
  }
  size_t rows = 0;
  for (int c = 0; c < n; ++c) {
    if (!Untrainable(untrainable, c + 1)) rows = scores[c].size();
  }
  std::vector<int> out(rows, 0);
  for (size_t r = 0; r < rows; ++r) {
    double best = -INFINITY;
    for (int c = 0; c < n; ++c) {
      if (Untrainable(untrainable, c + 1)) continue;
      if (scores[c].size() != rows) throw Error(ErrorCode::kInvalidArgument, "ragged scores");
      if (scores[c][r] > best) {
        best = scores[c][r];
        out[r] = c + 1;
      }
    }
  }
  return out;
}

std::vector<int> OvrPredict(const OvrModel& model, const Dataset& d, const Activation& act) {
  std::vector<std::vector<double>> scores(model.weights.size());
  for (size_t c = 0; c < model.weights.size(); ++c) {
    if (!Untrainable(model.untrainable, static_cast<int>(c) + 1)) {
      scores[c] = PredictProba(model.weights[c], d, act);
    }
  }
  return ArgmaxLabels(scores, model.untrainable);
}

OvrEncryptedModel OvrTrainEncrypted(net::Party& p, const MheKeys& k, const Dataset& local,
                                    int n_classes, const TrainConfig& config, mhe::Xof& xof) {
  if (n_classes < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two classes");
  CheckLabels(local, n_classes);
  std::vector<double> counts(n_classes + 1, 0.0);
  counts[0] = static_cast<double>(local.rows());
  for (int y : local.y) counts[y] += 1.0;
  const std::vector<double> totals =
      SecureSum(p, k, counts, k.ctx->params().log_delta, "ovr/classes", xof);
  const int64_t total = std::llround(totals[0]);
  OvrEncryptedModel out;
  out.models.resize(n_classes);
  for (int c = 1; c <= n_classes; ++c) {
    const int64_t n = std::llround(totals[c]);
    if (n == 0 || n == total) {
      out.untrainable.push_back(c);
      continue;
    }
    out.models[c - 1] = FedTrainEncrypted(p, k, BinaryView(local, c), config, xof, nullptr,
                                          false, "ovr" + std::to_string(c));
  }
  return out;
}

}  // namespace cti::analytics
