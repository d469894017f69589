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


#ifndef CTI_CTICTL_EXPERIMENTS_H_
#define CTI_CTICTL_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "cti/analytics/logreg.h"
#include "cti/ctictl/report.h"
#include "cti/pipeline/generator.h"

namespace cti::ctictl {

// Real vs Synthetic (SMOTE) training and test sets, 2x2 accuracy matrix.
struct SmoteBiasConfig {
  pipeline::GeneratorConfig generator{.n_total = 10000000,
                                      .minority_ratio = 0.000206,
                                      .n_features = 88,
                                      .separation = 1.5,
                                      .minority_spread = 0.5};
  size_t repetitions = 10;
  size_t smote_k = 5;
  double train_frac = 0.7;
  analytics::TrainConfig train{.eta = 1.0, .iterations = 100};
  uint64_t seed = 1;
};

// Accuracy of central, collective and local training against the total
// number of training rows spread over the nodes.
struct CollabGainConfig {
  size_t nodes = 8;
  std::vector<size_t> sizes = {256, 512, 1024, 2048, 4096, 8192};
  size_t runs = 20;
  size_t test_rows = 4000;
  pipeline::GeneratorConfig generator{.minority_ratio = 0.5,
                                      .n_features = 20,
                                      .separation = 2.0,
                                      .minority_spread = 1.0};
  analytics::TrainConfig train{.eta = 0.5, .iterations = 30};
  // Also runs the collective model under encryption for run 0 of the
  // smallest size and reports the distance to the cleartext one.
  bool encrypted_spot_check = false;
  uint64_t seed = 1;
};

// Wall and CPU time of distributed training, cleartext vs encrypted.
struct PerfBenchConfig {
  size_t nodes = 3;
  std::vector<size_t> sizes = {1000, 2000, 4000, 8000};
  std::vector<int> delays_ms = {0, 10};
  size_t features = 8;
  int iterations = 2;
  // Timed sessions per point; the median is reported.
  int repeats = 3;
  uint64_t seed = 1;
};

SmoteBiasConfig SmoteBiasFromJson(const nlohmann::json& j);
CollabGainConfig CollabGainFromJson(const nlohmann::json& j);
PerfBenchConfig PerfBenchFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const SmoteBiasConfig& c);
nlohmann::json ToJson(const CollabGainConfig& c);
nlohmann::json ToJson(const PerfBenchConfig& c);

// Throws kInvalidArgument for inconsistent configs (e.g. more nodes than
// rows).
ExperimentReport RunSmoteBias(const SmoteBiasConfig& c);
ExperimentReport RunCollabGain(const CollabGainConfig& c);
ExperimentReport RunPerfBench(const PerfBenchConfig& c);

// Aggregates and verdicts from stored records alone.
nlohmann::json AggregateSmoteBias(const nlohmann::json& records);
nlohmann::json VerdictSmoteBias(const nlohmann::json& aggregates);
nlohmann::json AggregateCollabGain(const nlohmann::json& records, const nlohmann::json& config);
nlohmann::json VerdictCollabGain(const nlohmann::json& aggregates);
nlohmann::json AggregatePerfBench(const nlohmann::json& records, const nlohmann::json& config);
nlohmann::json VerdictPerfBench(const nlohmann::json& aggregates);

}  // namespace cti::ctictl

#endif  // CTI_CTICTL_EXPERIMENTS_H_
