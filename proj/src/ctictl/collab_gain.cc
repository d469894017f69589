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


#include <algorithm>
#include <cmath>
#include <sstream>

#include "cti/analytics/fed_train.h"
#include "cti/analytics/secure.h"
#include "cti/common/error.h"
#include "cti/ctictl/experiments.h"
#include "cti/mhe/params.h"
#include "cti/net/cluster.h"
#include "cti/pipeline/split.h"

namespace cti::ctictl {
namespace {

using analytics::Dataset;
using nlohmann::json;

double Accuracy(std::span<const double> w, const Dataset& d, const analytics::Activation& act) {
  const std::vector<int> pred = analytics::PredictLabels(w, d, act);
  size_t hit = 0;
  for (size_t i = 0; i < pred.size(); ++i) hit += pred[i] == d.y[i];
  return static_cast<double>(hit) / static_cast<double>(d.rows());
}

struct Draw {
  std::vector<Dataset> nodes;  // standardized with the pooled statistics
  std::vector<Dataset> raw;
  Dataset test;
  analytics::FeatureStats pooled;
};

Draw MakeDraw(const CollabGainConfig& c, size_t size, uint64_t gen_seed) {
  pipeline::GeneratorConfig g = c.generator;
  g.n_total = size + c.test_rows;
  g.seed = gen_seed;
  const Dataset all = pipeline::GenDdosLike(g);
  std::vector<size_t> train_idx(size);
  std::vector<size_t> test_idx(c.test_rows);
  for (size_t i = 0; i < size; ++i) train_idx[i] = i;
  for (size_t i = 0; i < c.test_rows; ++i) test_idx[i] = size + i;
  Draw d;
  d.raw = pipeline::Partition(all.Select(train_idx), c.nodes);
  d.pooled = analytics::PooledStats(d.raw);
  for (const auto& n : d.raw) d.nodes.push_back(analytics::Standardize(n, d.pooled));
  d.test = all.Select(test_idx);
  return d;
}

json EncryptedSpotCheck(const CollabGainConfig& c, const Draw& d,
                        const std::vector<double>& cleartext) {
  const mhe::ContextPtr ctx = mhe::Context::Make(mhe::GenParams("toy"));
  net::ClusterOptions o;
  o.nodes = c.nodes;
  o.session[0] = 0xc6;
  o.session[1] = static_cast<uint8_t>(c.seed);
  o.round_timeout = std::chrono::seconds(600);
  const auto out = net::RunSession<std::vector<double>>(o, [&](net::Party& p) {
    mhe::Xof xof(c.seed * 7919 + p.id(), "collab-gain/spot");
    const analytics::MheKeys k = analytics::SetupKeys(p, *ctx, xof);
    const analytics::EncryptedModel m =
        analytics::FedTrainEncrypted(p, k, d.nodes[p.id()], c.train, xof);
    return analytics::DecryptModel(p, k, m, 0, xof);
  });
  const std::vector<double>& w = *out[0];
  double max_diff = 0.0;
  for (size_t j = 0; j < w.size(); ++j) max_diff = std::max(max_diff, std::fabs(w[j] - cleartext[j]));
  const auto act = analytics::PolyActivation(c.train.poly);
  const Dataset test = analytics::Standardize(d.test, d.pooled);
  const double acc_enc = Accuracy(w, test, act);
  const double acc_clear = Accuracy(cleartext, test, act);
  return {{"size", c.sizes.front()},
          {"max_weight_diff", max_diff},
          {"accuracy_encrypted", acc_enc},
          {"accuracy_cleartext", acc_clear},
          {"pass", max_diff <= 1e-2 && std::fabs(acc_enc - acc_clear) <= 0.005}};
}

}  // namespace

ExperimentReport RunCollabGain(const CollabGainConfig& c) {
  if (c.nodes == 0 || c.runs < 2 || c.sizes.empty() || c.test_rows == 0) {
    throw Error(ErrorCode::kInvalidArgument, "collab-gain needs nodes, >= 2 runs, sizes, test rows");
  }
  for (size_t s : c.sizes) {
    if (s < 2 * c.nodes) {
      throw Error(ErrorCode::kInvalidArgument, "size " + std::to_string(s) + " gives fewer than 2 rows per node (" +
                                                   std::to_string(c.nodes) + " nodes)");
    }
  }
  if (c.train.batch != 0) throw Error(ErrorCode::kInvalidArgument, "collab-gain uses full batches");
  ExperimentReport r;
  r.experiment = "collab-gain";
  r.seed = c.seed;
  r.config = ToJson(c);
  // The polynomial activation is what the encrypted protocol computes, so
  // the cleartext collective model is its exact oracle.
  const analytics::Activation act = analytics::PolyActivation(c.train.poly);
  json spot;
  for (size_t si = 0; si < c.sizes.size(); ++si) {
    for (size_t run = 0; run < c.runs; ++run) {
      const uint64_t gen_seed = c.seed * 1000003 + si * 1009 + run;
      const Draw d = MakeDraw(c, c.sizes[si], gen_seed);
      const Dataset test = analytics::Standardize(d.test, d.pooled);
      const auto central =
          analytics::LrTrainCleartext(d.nodes, c.train, analytics::TrainMode::kCentral, act)[0];
      const auto collective = analytics::LrTrainCleartext(
          d.nodes, c.train, analytics::TrainMode::kFederatedAggregated, act)[0];
      json local = json::array();
      double local_sum = 0.0;
      for (const auto& raw : d.raw) {
        // A node on its own only knows its own statistics.
        const analytics::FeatureStats own = analytics::PooledStats({raw});
        const auto w = analytics::LrTrain(analytics::Standardize(raw, own), c.train, act);
        const double a = Accuracy(w, analytics::Standardize(d.test, own), act);
        local.push_back(a);
        local_sum += a;
      }
      r.records.push_back({{"size", c.sizes[si]},
                           {"run", run},
                           {"generator_seed", gen_seed},
                           {"central", Accuracy(central, test, act)},
                           {"collective", Accuracy(collective, test, act)},
                           {"local_mean", local_sum / static_cast<double>(d.raw.size())},
                           {"local", local}});
      if (c.encrypted_spot_check && si == 0 && run == 0) spot = EncryptedSpotCheck(c, d, collective);
    }
  }
  r.aggregates = AggregateCollabGain(r.records, r.config);
  r.verdict = VerdictCollabGain(r.aggregates);
  if (!spot.is_null()) r.verdict["encrypted_spot_check"] = spot;

  std::ostringstream curve;
  curve.precision(17);
  curve << "size,series,mean,std,ci95_lo,ci95_hi\n";
  for (const auto& row : r.aggregates["sizes"]) {
    for (const char* series : {"central", "collective", "local"}) {
      const json& s = row[series];
      curve << row["size"].get<size_t>() << "," << series << "," << s["mean"].get<double>() << ","
            << s["std"].get<double>() << ","
            << s["mean"].get<double>() - s["ci95"].get<double>() << ","
            << s["mean"].get<double>() + s["ci95"].get<double>() << "\n";
    }
  }
  r.tables["collab_gain_curve.csv"] = curve.str();
  std::ostringstream runs;
  runs.precision(17);
  runs << "size,run,central,collective,local_mean\n";
  for (const auto& rec : r.records) {
    runs << rec["size"].get<size_t>() << "," << rec["run"].get<size_t>() << ","
         << rec["central"].get<double>() << "," << rec["collective"].get<double>() << ","
         << rec["local_mean"].get<double>() << "\n";
  }
  r.tables["collab_gain_runs.csv"] = runs.str();
  return r;
}

json AggregateCollabGain(const json& records, const json& config) {
  json out = json::array();
  for (const auto& size_j : config.at("sizes")) {
    const size_t size = size_j.get<size_t>();
    std::vector<double> central, collective, local;
    for (const auto& rec : records) {
      if (rec.at("size").get<size_t>() != size) continue;
      central.push_back(rec.at("central").get<double>());
      collective.push_back(rec.at("collective").get<double>());
      local.push_back(rec.at("local_mean").get<double>());
    }
    out.push_back({{"size", size},
                   {"central", SummaryJson(Summarize(central))},
                   {"collective", SummaryJson(Summarize(collective))},
                   {"local", SummaryJson(Summarize(local))}});
  }
  return {{"sizes", out}};
}

json VerdictCollabGain(const json& a) {
  const json& sizes = a.at("sizes");
  bool collective_ge_local = true;
  bool near_central = true;
  bool significant = true;
  json rows = json::array();
  for (size_t i = 0; i < sizes.size(); ++i) {
    const json& s = sizes[i];
    const double col = s["collective"]["mean"].get<double>();
    const double loc = s["local"]["mean"].get<double>();
    const double cen = s["central"]["mean"].get<double>();
    const double col_lo = col - s["collective"]["ci95"].get<double>();
    const double loc_hi = loc + s["local"]["ci95"].get<double>();
    const bool ge = col >= loc;
    const bool near = std::fabs(col - cen) <= 0.01;
    const bool sep = col_lo > loc_hi;
    collective_ge_local = collective_ge_local && ge;
    near_central = near_central && near;
    if (i < 2) significant = significant && sep;
    rows.push_back({{"size", s["size"]},
                    {"collective_minus_local", col - loc},
                    {"collective_minus_central", col - cen},
                    {"ci_separated", sep}});
  }
  return {{"per_size", rows},
          {"collective_ge_local_everywhere", collective_ge_local},
          {"ci_separated_at_two_smallest", significant},
          {"collective_within_1pt_of_central", near_central},
          {"pass", collective_ge_local && significant && near_central}};
}

}  // namespace cti::ctictl
