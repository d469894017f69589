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


#include "cti/pipeline/generator.h"

#include <cmath>
#include <numeric>
#include <string>

#include "cti/common/error.h"

namespace cti::pipeline {

namespace {

size_t MinorityCount(const GeneratorConfig& c) {
  if (!(c.minority_ratio > 0.0 && c.minority_ratio < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "minority ratio must be in (0, 1)");
  }
  if (c.n_features == 0) throw Error(ErrorCode::kInvalidArgument, "no features");
  const auto minority = static_cast<size_t>(std::llround(c.minority_ratio * static_cast<double>(c.n_total)));
  if (minority < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "ratio * n_total gives " + std::to_string(minority) + " minority rows (< 2)");
  }
  return minority;
}

}  // namespace

std::vector<int> GenDdosLabels(const GeneratorConfig& c) {
  const size_t minority = MinorityCount(c);
  std::vector<size_t> order(c.n_total);
  std::iota(order.begin(), order.end(), 0);
  Rng perm = MakeRng(c.seed, "gen/labels");
  Shuffle(perm, order);
  std::vector<int> labels(c.n_total, 0);
  for (size_t i = 0; i < minority; ++i) labels[order[i]] = 1;
  return labels;
}

void ForEachDdosRow(const GeneratorConfig& c, const std::vector<int>& labels,
                    const std::function<void(size_t, std::span<const double>)>& visit) {
  MinorityCount(c);
  if (labels.size() != c.n_total) throw Error(ErrorCode::kInvalidArgument, "label count");
  Rng dir_rng = MakeRng(c.seed, "gen/direction");
  std::vector<double> mean(c.n_features);
  double norm = 0.0;
  for (double& v : mean) {
    v = Normal(dir_rng, 0.0, 1.0);
    norm += v * v;
  }
  norm = std::sqrt(norm);
  for (double& v : mean) v *= c.separation / norm;

  Rng noise = MakeRng(c.seed, "gen/features");
  std::vector<double> row(c.n_features);
  for (size_t i = 0; i < c.n_total; ++i) {
    const bool attack = labels[i] == 1;
    for (size_t j = 0; j < c.n_features; ++j) {
      row[j] = attack ? Normal(noise, mean[j], c.minority_spread) : Normal(noise, 0.0, 1.0);
    }
    visit(i, row);
  }
}

std::vector<std::string> DdosFeatureNames(const GeneratorConfig& c) {
  std::vector<std::string> names;
  for (size_t j = 0; j < c.n_features; ++j) names.push_back("f" + std::to_string(j));
  return names;
}

Dataset GenDdosLike(const GeneratorConfig& c) {
  const std::vector<int> labels = GenDdosLabels(c);
  Dataset d;
  d.feature_names = DdosFeatureNames(c);
  d.x.reserve(c.n_total * c.n_features);
  d.y.reserve(c.n_total);
  ForEachDdosRow(c, labels, [&](size_t i, std::span<const double> row) { d.AddRow(row, labels[i]); });
  return d;
}

}  // namespace cti::pipeline
