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


#include "cti/analytics/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <nlohmann/json.hpp>

#include "cti/common/error.h"

namespace cti::analytics {

Metrics EvaluateMetrics(std::span<const int> predicted, std::span<const int> truth,
                        size_t n_classes) {
  if (predicted.size() != truth.size()) {
    throw Error(ErrorCode::kInvalidArgument, "prediction and label counts differ");
  }
  Metrics m;
  m.confusion.assign(n_classes, std::vector<size_t>(n_classes, 0));
  size_t hits = 0;
  for (size_t i = 0; i < truth.size(); ++i) {
    const int t = truth[i], p = predicted[i];
    if (t < 0 || p < 0 || static_cast<size_t>(t) >= n_classes ||
        static_cast<size_t>(p) >= n_classes) {
      throw Error(ErrorCode::kInvalidArgument, "label outside [0, n_classes)");
    }
    ++m.confusion[t][p];
    hits += t == p;
  }
  m.accuracy = truth.empty() ? 0.0 : static_cast<double>(hits) / truth.size();
  for (const auto& row : m.confusion) {
    const double sum = std::accumulate(row.begin(), row.end(), 0.0);
    std::vector<double> nr(n_classes, 0.0);
    if (sum > 0) {
      for (size_t j = 0; j < n_classes; ++j) nr[j] = row[j] / sum;
    }
    m.normalized.push_back(std::move(nr));
  }
  return m;
}

std::string MetricsCsv(const Metrics& m) {
  std::string out = "true\\pred";
  for (size_t j = 0; j < m.confusion.size(); ++j) out += "," + std::to_string(j);
  out += "\n";
  for (size_t i = 0; i < m.confusion.size(); ++i) {
    out += std::to_string(i);
    for (size_t v : m.confusion[i]) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string MetricsJson(const Metrics& m) {
  nlohmann::json j;
  j["accuracy"] = m.accuracy;
  j["confusion"] = m.confusion;
  j["normalized"] = m.normalized;
  return j.dump(2);
}

std::vector<RankedWeight> ExtractTopWeights(std::span<const double> weights,
                                            std::span<const std::string> names, size_t k) {
  if (weights.size() != names.size()) {
    throw Error(ErrorCode::kInvalidArgument, "weights and names differ in length");
  }
  if (k > weights.size()) throw Error(ErrorCode::kInvalidArgument, "k exceeds feature count");
  std::vector<size_t> idx(weights.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return std::fabs(weights[a]) > std::fabs(weights[b]);
  });
  std::vector<RankedWeight> out;
  for (size_t i = 0; i < k; ++i) out.push_back({names[idx[i]], weights[idx[i]]});
  return out;
}

std::string FormatTopWeights(std::span<const RankedWeight> ranked) {
  std::string out;
  char buf[64];
  for (const auto& r : ranked) {
    std::snprintf(buf, sizeof(buf), "%.2f", r.weight);
    out += r.feature + " -> " + buf + "\n";
  }
  return out;
}

}  // namespace cti::analytics
