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


#ifndef CTI_ANALYTICS_LOGREG_H_
#define CTI_ANALYTICS_LOGREG_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cti/analytics/sigmoid.h"
#include "cti/pipeline/dataset.h"

namespace cti::analytics {

using pipeline::Dataset;
using Activation = std::function<double(double)>;

Activation ExactActivation();
Activation PolyActivation(const PolySigmoid& p);

struct TrainConfig {
  double eta = 0.1;
  int iterations = 20;
  // Rows per node per iteration; 0 means the full local set.
  size_t batch = 0;
  PolySigmoid poly = FitSigmoidPoly(3, 8.0);
  uint64_t seed = 1;
  // Optional L2 penalty (cleartext only).
  double l2 = 0.0;
  // Debug-mode bound on |x.w|; 0 takes poly.b_act.
  double value_clip = 0.0;
};

// Stable hash of every field that affects the trained weights.
uint64_t ConfigHash(const TrainConfig& c);

enum class TrainMode { kCentral, kFederatedLocalOnly, kFederatedAggregated };
TrainMode ParseTrainMode(std::string_view s);

// (1/B) X^T (act(Xw) - y) over the binary labels {0, 1}.
std::vector<double> LrGradient(std::span<const double> w, const Dataset& d,
                               const Activation& act);
// Mean negative log-likelihood under the exact sigmoid.
double LogLoss(std::span<const double> w, const Dataset& d);

// Gradient descent from w = 0. kCentral pools every node; local-only
// returns one model per node; aggregated combines the node gradients each
// iteration, weighted by row count (the pooled gradient). Throws on empty
// or single-class training data.
std::vector<std::vector<double>> LrTrainCleartext(const std::vector<Dataset>& nodes,
                                                  const TrainConfig& config, TrainMode mode,
                                                  const Activation& act);
std::vector<double> LrTrain(const Dataset& d, const TrainConfig& config,
                            const Activation& act);

std::vector<double> PredictProba(std::span<const double> w, const Dataset& d,
                                 const Activation& act);
std::vector<int> PredictLabels(std::span<const double> w, const Dataset& d,
                               const Activation& act);

// Shared per-feature standardization statistics.
struct FeatureStats {
  std::vector<std::string> names;
  std::vector<double> mean;
  std::vector<double> std;
  std::vector<bool> constant;  // std < 1e-9, excluded from models
  size_t count = 0;
};

FeatureStats PooledStats(const std::vector<Dataset>& nodes);
// (x - mean) / std over the non-constant features, optionally preceded by
// a column of ones named "intercept".
Dataset Standardize(const Dataset& d, const FeatureStats& stats, bool add_intercept = true);

}  // namespace cti::analytics

#endif  // CTI_ANALYTICS_LOGREG_H_
