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


#ifndef CTI_ANALYTICS_METRICS_H_
#define CTI_ANALYTICS_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cti::analytics {

struct Metrics {
  double accuracy = 0.0;
  // confusion[true][predicted]
  std::vector<std::vector<size_t>> confusion;
  std::vector<std::vector<double>> normalized;  // rows sum to 1 (or are all 0)
};

// Labels must lie in [0, n_classes).
Metrics EvaluateMetrics(std::span<const int> predicted, std::span<const int> truth,
                        size_t n_classes);
// Raw matrix, one row per true class; header "true\\pred,0,1,...".
std::string MetricsCsv(const Metrics& m);
std::string MetricsJson(const Metrics& m);

struct RankedWeight {
  std::string feature;
  double weight = 0.0;
};

// Top k by |weight|, signs kept; ties keep the original order.
std::vector<RankedWeight> ExtractTopWeights(std::span<const double> weights,
                                            std::span<const std::string> names, size_t k);
// "feature -> weight" lines with two decimals.
std::string FormatTopWeights(std::span<const RankedWeight> ranked);

}  // namespace cti::analytics

#endif  // CTI_ANALYTICS_METRICS_H_
