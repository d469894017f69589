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


#ifndef CTI_PIPELINE_GENERATOR_H_
#define CTI_PIPELINE_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cti/pipeline/dataset.h"

namespace cti::pipeline {

struct GeneratorConfig {
  size_t n_total = 200000;
  double minority_ratio = 0.000206;
  size_t n_features = 88;
  // Distance between the class means, in units of the majority std.
  double separation = 3.0;
  // Std of the minority cluster relative to the majority one.
  double minority_spread = 1.0;
  uint64_t seed = 1;
};

// Two Gaussian clusters: benign (label 0) around the origin, attack
// (label 1) around a mean of norm `separation` along a seeded direction.
// Minority count is round(ratio * n_total); rows are shuffled. Throws
// kInvalidArgument if that count is below 2 or the ratio is outside (0,1).
Dataset GenDdosLike(const GeneratorConfig& config);

// Pieces of GenDdosLike for callers that cannot hold all n_total rows.
// Labels come first; rows are then produced in index order.
std::vector<int> GenDdosLabels(const GeneratorConfig& config);
void ForEachDdosRow(const GeneratorConfig& config, const std::vector<int>& labels,
                    const std::function<void(size_t, std::span<const double>)>& visit);
std::vector<std::string> DdosFeatureNames(const GeneratorConfig& config);

}  // namespace cti::pipeline

#endif  // CTI_PIPELINE_GENERATOR_H_
