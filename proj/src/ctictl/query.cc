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


#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cti/analytics/fed_train.h"
#include "cti/analytics/predict.h"
#include "cti/analytics/secure.h"
#include "cti/analytics/statistics.h"
#include "cti/ctictl/commands.h"
#include "cti/net/cluster.h"
#include "cti/net/protocols.h"
#include "cti/pipeline/csv.h"
#include "cti/pipeline/misp.h"

namespace cti::ctictl {
namespace fs = std::filesystem;
namespace {

using analytics::Dataset;
using nlohmann::json;

struct QueryContext {
  Cluster cluster;
  uint32_t querier = 0;
  net::ClusterOptions options;
};

// Loads the cluster, checks the token at every node and derives a session
// for this query.
QueryContext Prepare(const QueryOptions& q, std::string_view kind) {
  if (q.config.empty()) throw Error(ErrorCode::kInvalidArgument, "--config is required");
  const net::NodeConfig self = net::LoadNodeConfig(q.config);
  std::string dir = q.cluster;
  if (dir.empty()) dir = fs::absolute(q.config).parent_path().parent_path().string();
  QueryContext qc{LoadCluster(dir), self.node_id, {}};
  const auto& cfgs = qc.cluster.configs;
  if (self.node_id >= cfgs.size()) throw Error(ErrorCode::kInvalidArgument, "querier is not a cluster node");
  if (!cfgs[self.node_id].HasRole(net::Role::kQuerier)) {
    throw Error(ErrorCode::kAuth, "node " + std::to_string(self.node_id) + " has no querier role");
  }
  for (const auto& c : cfgs) c.MakeTokenTable().Authorize(q.token, net::Role::kQuerier);

  net::ClusterOptions& o = qc.options;
  o.nodes = cfgs.size();
  o.topology = self.topology;
  o.latency = std::chrono::milliseconds(self.latency_ms);
  o.round_timeout = std::chrono::milliseconds(q.round_timeout_ms > 0 ? q.round_timeout_ms
                                                                       : self.round_timeout_ms);
  o.offline = q.offline;
  for (uint32_t id : q.offline) {
    if (id >= cfgs.size()) throw Error(ErrorCode::kInvalidArgument, "offline node out of range");
  }
  mhe::Xof x(q.seed, std::string("query/") + std::string(kind));
  x.Read(o.session);
  for (size_t i = 0; i < o.session.size(); ++i) o.session[i] ^= qc.cluster.session[i];
  return qc;
}

analytics::MheKeys NodeKeys(const Cluster& c, uint32_t id) {
  analytics::MheKeys k;
  k.ctx = c.ctx.get();
  k.sk = c.shares.at(id);
  k.pk = c.pk;
  k.rlk = c.rlk;
  k.has_rlk = true;
  return k;
}

void WriteText(const fs::path& p, const std::string& s) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << s;
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + p.string());
}

// A fresh keypair owned by the querier; results are key-switched to it.
struct QuerierKeys {
  mhe::SecretKey sk;
  mhe::PublicKey pk;
};

QuerierKeys MakeQuerierKeys(const mhe::Context& ctx, uint64_t seed) {
  mhe::Xof xof(seed, "querier-keypair");
  QuerierKeys q{mhe::KeygenSecret(ctx, xof), {}};
  q.pk = mhe::KeygenPublic(ctx, q.sk, xof);
  return q;
}

json StatsJson(const analytics::FeatureStats& s) {
  std::vector<int> constant(s.constant.begin(), s.constant.end());
  return {{"names", s.names}, {"mean", s.mean}, {"std", s.std}, {"constant", constant},
          {"count", s.count}};
}

analytics::FeatureStats StatsFromJson(const json& j) {
  analytics::FeatureStats s;
  s.names = j.at("names").get<std::vector<std::string>>();
  s.mean = j.at("mean").get<std::vector<double>>();
  s.std = j.at("std").get<std::vector<double>>();
  for (int v : j.at("constant").get<std::vector<int>>()) s.constant.push_back(v != 0);
  s.count = j.at("count").get<size_t>();
  return s;
}

struct StoredModel {
  analytics::EncryptedModel model;
  analytics::FeatureStats stats;
};

void StoreModel(const Cluster& c, uint32_t id, const StoredModel& m) {
  const fs::path dir(c.NodeDir(id));
  char hash[17];
  std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(m.model.config_hash));
  const json meta = {{"feature_names", m.model.feature_names},
                     {"iterations", m.model.iterations},
                     {"config_hash", hash},
                     {"ciphertexts", m.model.weights.size()},
                     {"stats", StatsJson(m.stats)}};
  WriteText(dir / "model.json", meta.dump(2) + "\n");
  const net::Bytes ct = net::EncodeCiphertexts(*c.ctx, m.model.weights);
  std::ofstream out(dir / "model.ct", std::ios::binary);
  out.write(reinterpret_cast<const char*>(ct.data()), static_cast<std::streamsize>(ct.size()));
  if (!out) throw Error(ErrorCode::kIo, "cannot write model at node " + std::to_string(id));
}

StoredModel LoadModel(const Cluster& c, uint32_t id) {
  const fs::path dir(c.NodeDir(id));
  if (!fs::exists(dir / "model.json") || !fs::exists(dir / "model.ct")) {
    throw Error(ErrorCode::kNotFound,
                "no trained model at node " + std::to_string(id) + "; run 'query train' first");
  }
  StoredModel m;
  try {
    std::ifstream in(dir / "model.json");
    const json meta = json::parse(in);
    m.model.feature_names = meta.at("feature_names").get<std::vector<std::string>>();
    m.model.iterations = meta.at("iterations").get<int>();
    m.model.config_hash = std::stoull(meta.at("config_hash").get<std::string>(), nullptr, 16);
    m.stats = StatsFromJson(meta.at("stats"));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("model.json: ") + e.what());
  }
  std::ifstream in(dir / "model.ct", std::ios::binary);
  const net::Bytes ct{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  m.model.weights = net::DecodeCiphertexts(*c.ctx, ct);
  if (m.model.weights.size() != m.model.feature_names.size()) {
    throw Error(ErrorCode::kParse, "model.ct does not match model.json");
  }
  return m;
}

}  // namespace

void QueryStats(const QueryOptions& q) {
  QueryContext qc = Prepare(q, "stats");
  const Cluster& c = qc.cluster;
  if (q.taxonomy.empty()) throw Error(ErrorCode::kInvalidArgument, "--taxonomy is required");
  if (q.data.size() != c.configs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "stats needs one MISP export per node (--data), got " +
                                                 std::to_string(q.data.size()));
  }
  if (q.out.empty()) throw Error(ErrorCode::kInvalidArgument, "--out is required");
  std::vector<std::vector<pipeline::MispEvent>> events;
  for (const auto& path : q.data) events.push_back(pipeline::LoadMispExport(path));
  const QuerierKeys qk = MakeQuerierKeys(*c.ctx, q.seed);
  const analytics::DateFilter filter{q.from, q.to};
  const auto out = net::RunSession<std::vector<int64_t>>(qc.options, [&](net::Party& p) {
    mhe::Xof xof(q.seed * 6151 + p.id(), "query/stats");
    const analytics::MheKeys k = NodeKeys(c, p.id());
    const auto cts = analytics::SecureHistogram(p, k, q.taxonomy, events[p.id()], filter, qk.pk,
                                                qc.querier, xof);
    if (p.id() != qc.querier) return std::optional<std::vector<int64_t>>();
    return std::optional(analytics::DecodeCounts(*c.ctx, qk.sk, cts, q.taxonomy.size()));
  });
  std::ostringstream csv;
  csv << "entry,count\n";
  for (size_t i = 0; i < q.taxonomy.size(); ++i) csv << q.taxonomy[i] << "," << (*out[qc.querier])[i] << "\n";
  WriteText(q.out, csv.str());
}

void QueryTrain(const QueryOptions& q) {
  QueryContext qc = Prepare(q, "train");
  const Cluster& c = qc.cluster;
  if (q.data.size() != c.configs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "train needs one CSV per node (--data), got " +
                                                 std::to_string(q.data.size()));
  }
  std::vector<Dataset> local;
  for (const auto& path : q.data) local.push_back(pipeline::LoadDdosCsv(path, {}));
  analytics::TrainConfig cfg;
  cfg.iterations = q.iterations;
  cfg.eta = q.eta;
  cfg.seed = q.seed;
  const auto models = net::RunSession<StoredModel>(qc.options, [&](net::Party& p) {
    mhe::Xof xof(q.seed * 7477 + p.id(), "query/train");
    const analytics::MheKeys k = NodeKeys(c, p.id());
    StoredModel m;
    m.stats = analytics::FederatedStandardization(p, k, local[p.id()], xof);
    m.model = analytics::FedTrainEncrypted(p, k, analytics::Standardize(local[p.id()], m.stats),
                                           cfg, xof);
    return std::optional(std::move(m));
  });
  for (uint32_t i = 0; i < c.configs.size(); ++i) StoreModel(c, i, *models[i]);
}

void QueryPredict(const QueryOptions& q) {
  QueryContext qc = Prepare(q, "predict");
  const Cluster& c = qc.cluster;
  if (q.data.size() != 1) throw Error(ErrorCode::kInvalidArgument, "predict takes one query CSV (--data)");
  if (q.out.empty()) throw Error(ErrorCode::kInvalidArgument, "--out is required");
  std::vector<StoredModel> models;
  for (uint32_t i = 0; i < c.configs.size(); ++i) {
    if (q.offline.contains(i)) {
      models.emplace_back();
      continue;
    }
    models.push_back(LoadModel(c, i));
    if (models.back().model.config_hash != models.front().model.config_hash) {
      throw Error(ErrorCode::kFailedPrecondition, "nodes hold different models");
    }
  }
  const Dataset raw = pipeline::LoadDdosCsv(q.data[0], {});
  const QuerierKeys qk = MakeQuerierKeys(*c.ctx, q.seed);
  const analytics::PolySigmoid poly = analytics::TrainConfig{}.poly;
  const auto out = net::RunSession<std::vector<double>>(qc.options, [&](net::Party& p) {
    mhe::Xof xof(q.seed * 7561 + p.id(), "query/predict");
    const analytics::MheKeys k = NodeKeys(c, p.id());
    const StoredModel& m = models[p.id()];
    std::optional<Dataset> query;
    if (p.id() == qc.querier) query = analytics::Standardize(raw, m.stats);
    const auto cts = analytics::PredictEncrypted(p, k, m.model, query ? &*query : nullptr,
                                                 qc.querier, poly, qk.pk, qc.querier, xof);
    if (p.id() != qc.querier) return std::optional<std::vector<double>>();
    return std::optional(analytics::DecryptProbabilities(*c.ctx, qk.sk, cts, raw.rows()));
  });
  std::ostringstream csv;
  csv.precision(10);
  csv << "row,probability\n";
  const auto& probs = *out[qc.querier];
  for (size_t i = 0; i < probs.size(); ++i) csv << i << "," << probs[i] << "\n";
  WriteText(q.out, csv.str());
}

}  // namespace cti::ctictl
