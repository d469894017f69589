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


#include "cti/analytics/model_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cti/common/error.h"

namespace cti::analytics {

ExportedModel MakeExportedModel(std::span<const double> weights,
                                std::span<const std::string> names, const FeatureStats& stats,
                                uint64_t config_hash) {
  if (weights.size() != names.size()) {
    throw Error(ErrorCode::kInvalidArgument, "weights and names differ in length");
  }
  ExportedModel m;
  m.config_hash = config_hash;
  for (size_t i = 0; i < weights.size(); ++i) {
    ExportedModel::Feature f{names[i], weights[i], 0.0, 1.0};
    for (size_t j = 0; j < stats.names.size(); ++j) {
      if (stats.names[j] == names[i]) {
        f.mean = stats.mean[j];
        f.std = stats.std[j];
      }
    }
    m.features.push_back(f);
  }
  return m;
}

std::string ModelToJson(const ExportedModel& m) {
  nlohmann::json j;
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(m.config_hash));
  j["config_hash"] = hex;
  j["features"] = nlohmann::json::array();
  for (const auto& f : m.features) {
    j["features"].push_back({{"feature", f.name}, {"weight", f.weight}, {"mean", f.mean},
                             {"std", f.std}});
  }
  return j.dump(2);
}

ExportedModel ModelFromJson(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    ExportedModel m;
    m.config_hash = std::stoull(j.at("config_hash").get<std::string>(), nullptr, 16);
    for (const auto& f : j.at("features")) {
      m.features.push_back({f.at("feature").get<std::string>(), f.at("weight").get<double>(),
                            f.at("mean").get<double>(), f.at("std").get<double>()});
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("model json: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::kParse, std::string("model json: ") + e.what());
  }
}

void SaveModel(const ExportedModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << ModelToJson(m) << "\n";
}

ExportedModel LoadModel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ModelFromJson(ss.str());
}

}  // namespace cti::analytics
