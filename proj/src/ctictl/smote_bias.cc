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


#include <cmath>
#include <sstream>

#include "cti/common/error.h"
#include "cti/ctictl/experiments.h"
#include "cti/pipeline/resample.h"
#include "cti/pipeline/split.h"

namespace cti::ctictl {
namespace {

using analytics::Dataset;
using nlohmann::json;

constexpr const char* kCells[] = {"real_real", "real_synthetic", "synthetic_real",
                                  "synthetic_synthetic"};

double Accuracy(std::span<const double> w, const Dataset& d) {
  const std::vector<int> pred = analytics::PredictLabels(w, d, analytics::ExactActivation());
  size_t hit = 0;
  for (size_t i = 0; i < pred.size(); ++i) hit += pred[i] == d.y[i];
  return d.rows() == 0 ? 0.0 : static_cast<double>(hit) / static_cast<double>(d.rows());
}

// Model trained on `train` (standardized by its own statistics), scored on
// both test sets.
std::pair<double, double> TrainAndScore(const Dataset& train, const Dataset& test_real,
                                        const Dataset& test_synth,
                                        const analytics::TrainConfig& cfg) {
  const analytics::FeatureStats stats = analytics::PooledStats({train});
  const std::vector<double> w = analytics::LrTrain(analytics::Standardize(train, stats), cfg,
                                                   analytics::ExactActivation());
  return {Accuracy(w, analytics::Standardize(test_real, stats)),
          Accuracy(w, analytics::Standardize(test_synth, stats))};
}

}  // namespace

ExperimentReport RunSmoteBias(const SmoteBiasConfig& c) {
  if (c.repetitions < 2) throw Error(ErrorCode::kInvalidArgument, "smote-bias needs >= 2 repetitions");
  if (!(c.train_frac > 0.0 && c.train_frac < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "train_frac must be in (0, 1)");
  }
  ExperimentReport r;
  r.experiment = "smote-bias";
  r.seed = c.seed;
  r.config = ToJson(c);
  for (size_t rep = 0; rep < c.repetitions; ++rep) {
    pipeline::GeneratorConfig g = c.generator;
    g.seed = c.seed * 1000003 + rep;
    const uint64_t sample_seed = g.seed ^ 0x5eed;
    const pipeline::ExperimentSets sets = pipeline::MakeExperimentSets(g, sample_seed, c.smote_k);
    const auto real = pipeline::TrainTestSplit(sets.real, c.train_frac, sample_seed + 1);
    const auto synth = pipeline::TrainTestSplit(sets.synthetic, c.train_frac, sample_seed + 2);
    const auto [rr, rs] = TrainAndScore(real.train, real.test, synth.test, c.train);
    const auto [sr, ss] = TrainAndScore(synth.train, real.test, synth.test, c.train);
    r.records.push_back({{"rep", rep},
                         {"generator_seed", g.seed},
                         {"sample_seed", sample_seed},
                         {"rows_per_set", sets.real.rows()},
                         {"real_real", rr},
                         {"real_synthetic", rs},
                         {"synthetic_real", sr},
                         {"synthetic_synthetic", ss}});
  }
  r.aggregates = AggregateSmoteBias(r.records);
  r.verdict = VerdictSmoteBias(r.aggregates);

  std::ostringstream matrix;
  matrix.precision(17);
  matrix << "train,test,mean,std\n";
  for (const char* cell : kCells) {
    const std::string name(cell);
    const auto cut = name.find('_');
    matrix << name.substr(0, cut) << "," << name.substr(cut + 1) << ","
           << r.aggregates[name]["mean"].get<double>() << ","
           << r.aggregates[name]["std"].get<double>() << "\n";
  }
  r.tables["smote_bias_matrix.csv"] = matrix.str();
  std::ostringstream runs;
  runs.precision(17);
  runs << "rep,real_real,real_synthetic,synthetic_real,synthetic_synthetic\n";
  for (const auto& rec : r.records) {
    runs << rec["rep"].get<size_t>();
    for (const char* cell : kCells) runs << "," << rec[cell].get<double>();
    runs << "\n";
  }
  r.tables["smote_bias_runs.csv"] = runs.str();
  return r;
}

json AggregateSmoteBias(const json& records) {
  json a;
  double var_sum = 0.0;
  for (const char* cell : kCells) {
    std::vector<double> v;
    for (const auto& rec : records) v.push_back(rec.at(cell).get<double>());
    const Summary s = Summarize(v);
    a[cell] = SummaryJson(s);
    var_sum += s.std * s.std;
  }
  const double pooled = std::sqrt(var_sum / 4.0);
  a["pooled_std"] = pooled;
  auto mean = [&](const char* cell) { return a[cell]["mean"].get<double>(); };
  // Expected ordering: test-Synthetic is easier for both models, and the
  // Real-trained model is better on real data.
  a["gaps"] = {
      {"real_model_synthetic_minus_real_test", mean("real_synthetic") - mean("real_real")},
      {"synthetic_model_synthetic_minus_real_test",
       mean("synthetic_synthetic") - mean("synthetic_real")},
      {"real_minus_synthetic_model_on_real_test", mean("real_real") - mean("synthetic_real")}};
  return a;
}

json VerdictSmoteBias(const json& a) {
  const double pooled = a.at("pooled_std").get<double>();
  json v;
  bool ordering = true;
  bool significant = true;
  for (const auto& [name, gap] : a.at("gaps").items()) {
    const double g = gap.get<double>();
    const double ratio = pooled > 0.0 ? g / pooled : (g > 0.0 ? INFINITY : 0.0);
    v["gap_over_pooled_std"][name] = std::isfinite(ratio) ? json(ratio) : json("inf");
    ordering = ordering && g > 0.0;
    significant = significant && g >= 2.0 * pooled && g > 0.0;
  }
  v["ordering_holds"] = ordering;
  v["gaps_at_least_2_pooled_std"] = significant;
  v["pass"] = ordering && significant;
  return v;
}

}  // namespace cti::ctictl
