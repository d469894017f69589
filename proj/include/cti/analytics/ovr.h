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


#ifndef CTI_ANALYTICS_OVR_H_
#define CTI_ANALYTICS_OVR_H_

#include <optional>
#include <vector>

#include "cti/analytics/fed_train.h"
#include "cti/analytics/logreg.h"

namespace cti::analytics {

// Labels 1..n_classes. Model k (0-based) separates label k+1 from the rest.
// A class with no positive (or no negative) training rows is listed in
// `untrainable` and left empty; prediction ignores it.
struct OvrModel {
  std::vector<std::vector<double>> weights;
  std::vector<int> untrainable;  // 1-based labels
};

// Binary copy with y = 1 for `positive`, else 0.
Dataset BinaryView(const Dataset& d, int positive);

OvrModel OvrTrainCleartext(const std::vector<Dataset>& nodes, int n_classes,
                           const TrainConfig& config, const Activation& act);

// Per row, 1 + argmax over trainable classes of scores[k][row]; the
// lowest label wins ties. Throws if every class is untrainable.
std::vector<int> ArgmaxLabels(const std::vector<std::vector<double>>& scores,
                              const std::vector<int>& untrainable);
std::vector<int> OvrPredict(const OvrModel& model, const Dataset& d, const Activation& act);

struct OvrEncryptedModel {
  std::vector<std::optional<EncryptedModel>> models;
  std::vector<int> untrainable;
};

// SPMD. Global class totals come from a secure sum; each trainable class
// then runs FedTrainEncrypted under its own round tag.
OvrEncryptedModel OvrTrainEncrypted(net::Party& p, const MheKeys& k, const Dataset& local,
                                    int n_classes, const TrainConfig& config, mhe::Xof& xof);

}  // namespace cti::analytics

#endif  // CTI_ANALYTICS_OVR_H_
