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


#include <set>

#include "cti/common/error.h"
#include "cti/ctictl/experiments.h"

namespace cti::ctictl {
namespace {

using nlohmann::json;

void CheckKeys(const json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, where + ": expected an object");
  for (const auto& [k, _] : j.items()) {
    if (!known.contains(k)) throw Error(ErrorCode::kInvalidArgument, where + ": unknown key '" + k + "'");
  }
}

template <class T>
void Read(const json& j, const char* key, T& dst) {
  if (!j.contains(key)) return;
  try {
    dst = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("config key '") + key + "': " + e.what());
  }
}

json GenJson(const pipeline::GeneratorConfig& g) {
  return {{"n_total", g.n_total},
          {"minority_ratio", g.minority_ratio},
          {"n_features", g.n_features},
          {"separation", g.separation},
          {"minority_spread", g.minority_spread}};
}

void ReadGen(const json& j, pipeline::GeneratorConfig& g) {
  CheckKeys(j, {"n_total", "minority_ratio", "n_features", "separation", "minority_spread"},
            "generator");
  Read(j, "n_total", g.n_total);
  Read(j, "minority_ratio", g.minority_ratio);
  Read(j, "n_features", g.n_features);
  Read(j, "separation", g.separation);
  Read(j, "minority_spread", g.minority_spread);
}

json TrainJson(const analytics::TrainConfig& t) {
  return {{"eta", t.eta},
          {"iterations", t.iterations},
          {"batch", t.batch},
          {"poly_degree", t.poly.degree},
          {"poly_bound", t.poly.b_act},
          {"seed", t.seed}};
}

void ReadTrain(const json& j, analytics::TrainConfig& t) {
  CheckKeys(j, {"eta", "iterations", "batch", "poly_degree", "poly_bound", "seed"}, "train");
  Read(j, "eta", t.eta);
  Read(j, "iterations", t.iterations);
  Read(j, "batch", t.batch);
  Read(j, "seed", t.seed);
  int degree = t.poly.degree;
  double bound = t.poly.b_act;
  Read(j, "poly_degree", degree);
  Read(j, "poly_bound", bound);
  if (degree != t.poly.degree || bound != t.poly.b_act) t.poly = analytics::FitSigmoidPoly(degree, bound);
  if (t.iterations < 0 || !(t.eta > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "train: eta must be > 0 and iterations >= 0");
  }
}

}  // namespace

json ToJson(const SmoteBiasConfig& c) {
  return {{"generator", GenJson(c.generator)},
          {"repetitions", c.repetitions},
          {"smote_k", c.smote_k},
          {"train_frac", c.train_frac},
          {"train", TrainJson(c.train)},
          {"seed", c.seed}};
}

json ToJson(const CollabGainConfig& c) {
  return {{"nodes", c.nodes},         {"sizes", c.sizes},
          {"runs", c.runs},           {"test_rows", c.test_rows},
          {"generator", GenJson(c.generator)}, {"train", TrainJson(c.train)},
          {"encrypted_spot_check", c.encrypted_spot_check}, {"seed", c.seed}};
}

json ToJson(const PerfBenchConfig& c) {
  return {{"nodes", c.nodes},       {"sizes", c.sizes},           {"delays_ms", c.delays_ms},
          {"features", c.features}, {"iterations", c.iterations}, {"repeats", c.repeats},
          {"seed", c.seed}};
}

SmoteBiasConfig SmoteBiasFromJson(const json& j) {
  SmoteBiasConfig c;
  CheckKeys(j, {"generator", "repetitions", "smote_k", "train_frac", "train", "seed"}, "smote-bias");
  if (j.contains("generator")) ReadGen(j["generator"], c.generator);
  if (j.contains("train")) ReadTrain(j["train"], c.train);
  Read(j, "repetitions", c.repetitions);
  Read(j, "smote_k", c.smote_k);
  Read(j, "train_frac", c.train_frac);
  Read(j, "seed", c.seed);
  return c;
}

CollabGainConfig CollabGainFromJson(const json& j) {
  CollabGainConfig c;
  CheckKeys(j, {"nodes", "sizes", "runs", "test_rows", "generator", "train", "encrypted_spot_check", "seed"},
            "collab-gain");
  if (j.contains("generator")) ReadGen(j["generator"], c.generator);
  if (j.contains("train")) ReadTrain(j["train"], c.train);
  Read(j, "nodes", c.nodes);
  Read(j, "sizes", c.sizes);
  Read(j, "runs", c.runs);
  Read(j, "test_rows", c.test_rows);
  Read(j, "encrypted_spot_check", c.encrypted_spot_check);
  Read(j, "seed", c.seed);
  return c;
}

PerfBenchConfig PerfBenchFromJson(const json& j) {
  PerfBenchConfig c;
  CheckKeys(j, {"nodes", "sizes", "delays_ms", "features", "iterations", "repeats", "seed"},
            "perf-bench");
  Read(j, "nodes", c.nodes);
  Read(j, "sizes", c.sizes);
  Read(j, "delays_ms", c.delays_ms);
  Read(j, "features", c.features);
  Read(j, "iterations", c.iterations);
  Read(j, "repeats", c.repeats);
  Read(j, "seed", c.seed);
  return c;
}

}  // namespace cti::ctictl
