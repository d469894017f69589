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


#ifndef CTI_ANALYTICS_MODEL_IO_H_
#define CTI_ANALYTICS_MODEL_IO_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cti/analytics/logreg.h"

namespace cti::analytics {

// A decrypted model as released to the querier.
struct ExportedModel {
  struct Feature {
    std::string name;
    double weight = 0.0;
    double mean = 0.0;
    double std = 1.0;
    bool operator==(const Feature&) const = default;
  };
  std::vector<Feature> features;
  uint64_t config_hash = 0;
  bool operator==(const ExportedModel&) const = default;
};

// Mean/std are looked up by name in `stats`; names missing there (the
// intercept) get 0/1.
ExportedModel MakeExportedModel(std::span<const double> weights,
                                std::span<const std::string> names, const FeatureStats& stats,
                                uint64_t config_hash);

// {"config_hash": "<16 hex>", "features": [{"feature","weight","mean","std"}...]}
std::string ModelToJson(const ExportedModel& m);
ExportedModel ModelFromJson(std::string_view json);
void SaveModel(const ExportedModel& m, const std::string& path);
ExportedModel LoadModel(const std::string& path);

}  // namespace cti::analytics

#endif  // CTI_ANALYTICS_MODEL_IO_H_
