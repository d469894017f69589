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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cti/analytics/fed_train.h"
#include "cti/analytics/ovr.h"
#include "cti/analytics/predict.h"
#include "cti/analytics/statistics.h"
#include "cti/common/error.h"
#include "cti/mhe/encoder.h"
#include "cti/mhe/evaluator.h"
#include "cti/mhe/keys.h"
#include "cti/net/cluster.h"
#include "mhe_fixtures.h"

namespace cti::analytics {
namespace {

using cti::testing::Pearson;
using cti::testing::ToyContext;
using net::ClusterOptions;
using net::Party;
using net::RunSession;

const mhe::Context& ctx() { return *ToyContext(); }

ClusterOptions Opts(size_t n, uint8_t tag) {
  ClusterOptions o;
  o.nodes = n;
  o.session[0] = tag;
  o.session[15] = 0xa7;
  o.round_timeout = std::chrono::seconds(120);
  return o;
}

mhe::Xof NodeXof(const Party& p) { return mhe::Xof(500 + p.id(), "analytics-test-node"); }

// Standardized blobs with an intercept column.
Dataset Blobs(size_t n, size_t dims, double sep, uint64_t seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Dataset d;
  d.feature_names.push_back("intercept");
  for (size_t j = 0; j < dims; ++j) d.feature_names.push_back("f" + std::to_string(j));
  std::vector<double> row;
  for (size_t i = 0; i < n; ++i) {
    const int y = (g() % 2) ? 1 : 0;
    row.assign(1, 1.0);
    for (size_t j = 0; j < dims; ++j) {
      row.push_back(nd(g) + (y ? sep : -sep) / (2.0 * std::sqrt(static_cast<double>(dims))));
    }
    d.AddRow(row, y);
  }
  return d;
}

std::vector<Dataset> Split(const Dataset& d, size_t parts) {
  std::vector<Dataset> out(parts);
  for (auto& o : out) o.feature_names = d.feature_names;
  for (size_t i = 0; i < d.rows(); ++i) out[i * parts / d.rows()].AddRow(d.row(i), d.y[i]);
  return out;
}

double Accuracy(const std::vector<int>& a, const std::vector<int>& b) {
  size_t hit = 0;
  for (size_t i = 0; i < a.size(); ++i) hit += a[i] == b[i];
  return static_cast<double>(hit) / a.size();
}

struct TrainResult {
  std::vector<double> weights;
  FedTrainStats stats;
};

std::vector<std::optional<TrainResult>> TrainEncrypted(const std::vector<Dataset>& nodes,
                                                       const TrainConfig& c, uint8_t tag) {
  return RunSession<TrainResult>(Opts(nodes.size(), tag), [&](Party& p) {
    mhe::Xof xof = NodeXof(p);
    const MheKeys k = SetupKeys(p, ctx(), xof);
    TrainResult r;
    const EncryptedModel m = FedTrainEncrypted(p, k, nodes[p.id()], c, xof, &r.stats);
    EXPECT_EQ(m.iterations, c.iterations);
    if (auto w = DecryptModel(p, k, m, 0, xof)) r.weights = *w;
    return std::optional<TrainResult>(r);
  });
}

TEST(FedTrainTest, ZeroIterationsDecryptsToZero) {
  TrainConfig c;
  c.iterations = 0;
  auto out = TrainEncrypted(Split(Blobs(60, 3, 3, 1), 2), c, 1);
  ASSERT_EQ(out[0]->weights.size(), 4u);
  for (double w : out[0]->weights) EXPECT_NEAR(w, 0.0, 1e-4);
  EXPECT_TRUE(out[1]->weights.empty());
}

// Oracle: the cleartext trainer with the same polynomial and schedule.
TEST(FedTrainTest, MatchesCleartextFederatedTraining) {
  TrainConfig c;
  c.iterations = 10;
  const Dataset all = Blobs(2000, 4, 2.5, 7);
  for (size_t nodes : {1u, 3u, 5u}) {
    const auto parts = Split(all, nodes);
    auto out = TrainEncrypted(parts, c, static_cast<uint8_t>(10 + nodes));
    const auto want = LrTrainCleartext(parts, c, TrainMode::kFederatedAggregated,
                                       PolyActivation(c.poly))[0];
    const auto& got = out[0]->weights;
    ASSERT_EQ(got.size(), want.size());
    for (size_t j = 0; j < want.size(); ++j) {
      EXPECT_NEAR(got[j], want[j], 1e-2) << nodes << " nodes, weight " << j;
    }
    const Activation act = PolyActivation(c.poly);
    const double acc_enc = Accuracy(PredictLabels(got, all, act), all.y);
    const double acc_ref = Accuracy(PredictLabels(want, all, act), all.y);
    EXPECT_LE(std::fabs(acc_enc - acc_ref), 0.005) << nodes << " nodes";
    // 1 (u) + 2... with one slot chunk: u and u^2, then one per feature.
    const FedTrainStats& s = out[0]->stats;
    EXPECT_EQ(s.chunks, 1u);
    EXPECT_EQ(s.refreshes, c.iterations * RefreshesPerIteration(want.size(), 1, 3));
    EXPECT_EQ(s.refreshes, c.iterations * (2 + want.size()));
    EXPECT_EQ(s.refresh_rounds, c.iterations * 3u);
  }
}

TEST(FedTrainTest, RowsSpanningSeveralChunks) {
  TrainConfig c;
  c.iterations = 3;
  const Dataset all = Blobs(5000, 2, 3, 8);  // 3 chunks of 2048 slots
  const auto parts = Split(all, 2);
  auto out = TrainEncrypted(parts, c, 20);
  EXPECT_EQ(out[0]->stats.chunks, 3u);
  const auto want =
      LrTrainCleartext(parts, c, TrainMode::kFederatedAggregated, PolyActivation(c.poly))[0];
  for (size_t j = 0; j < want.size(); ++j) EXPECT_NEAR(out[0]->weights[j], want[j], 1e-2);
}

TEST(FedTrainTest, RejectsSchemaDisagreementAndMiniBatches) {
  TrainConfig c;
  std::vector<Dataset> parts{Blobs(20, 2, 3, 1), Blobs(20, 3, 3, 2)};
  EXPECT_THROW(TrainEncrypted(parts, c, 21), Error);
  c.batch = 8;
  EXPECT_THROW(TrainEncrypted(Split(Blobs(20, 2, 3, 1), 2), c, 22), Error);
}

TEST(FedTrainTest, DebugModeTracksTheActivationRange) {
  TrainConfig c;
  c.iterations = 2;
  const auto parts = Split(Blobs(200, 2, 3, 3), 2);
  auto out = RunSession<double>(Opts(2, 23), [&](Party& p) -> std::optional<double> {
    mhe::Xof xof = NodeXof(p);
    const MheKeys k = SetupKeys(p, ctx(), xof);
    FedTrainStats s;
    FedTrainEncrypted(p, k, parts[p.id()], c, xof, &s, true);
    return s.max_abs_u;
  });
  EXPECT_GT(*out[0], 0.0);
  EXPECT_LT(*out[0], c.poly.b_act);
  c.value_clip = 1e-9;  // any nonzero margin trips it
  c.iterations = 3;
  EXPECT_THROW(RunSession<double>(Opts(2, 24), [&](Party& p) -> std::optional<double> {
                 mhe::Xof xof = NodeXof(p);
                 const MheKeys k = SetupKeys(p, ctx(), xof);
                 FedTrainEncrypted(p, k, parts[p.id()], c, xof, nullptr, true);
                 return 0.0;
               }),
               Error);
}

// Eight nodes with 1,000 rows each over 60 weak features: a local
// gradient is a noisy estimate of the pooled one, so on held-out data the
// collective model is at least as accurate as the best local model.
TEST(FedTrainTest, CollectiveBeatsLocalModels) {
  TrainConfig c;
  c.iterations = 5;
  std::vector<Dataset> parts;
  for (uint64_t i = 0; i < 8; ++i) parts.push_back(Blobs(1000, 60, 1.5, 100 + i));
  const Dataset test = Blobs(40000, 60, 1.5, 999);
  auto out = TrainEncrypted(parts, c, 25);
  const Activation act = PolyActivation(c.poly);
  const double collective = Accuracy(PredictLabels(out[0]->weights, test, act), test.y);
  double best_local = 0.0;
  for (const auto& w : LrTrainCleartext(parts, c, TrainMode::kFederatedLocalOnly, act)) {
    best_local = std::max(best_local, Accuracy(PredictLabels(w, test, act), test.y));
  }
  RecordProperty("collective", std::to_string(collective));
  RecordProperty("best_local", std::to_string(best_local));
  EXPECT_GE(collective, best_local);
}

struct PredictResult {
  std::vector<double> probs;
  std::vector<double> collective_view;
};

// Node 2 queries; node 1 is the recipient holding the querier key.
PredictResult RunPredict(const std::vector<double>& w, const Dataset& query, bool encrypted,
                         uint8_t tag) {
  const PolySigmoid poly = FitSigmoidPoly(3, 8.0);
  mhe::Xof qx(77, "querier");
  const mhe::SecretKey qsk = mhe::KeygenSecret(ctx(), qx);
  const mhe::PublicKey qpk = mhe::KeygenPublic(ctx(), qsk, qx);
  std::vector<mhe::SecretKey> shares(3);
  auto out = RunSession<std::vector<mhe::Ciphertext>>(Opts(3, tag), [&](Party& p) {
    mhe::Xof xof = NodeXof(p);
    const MheKeys k = SetupKeys(p, ctx(), xof);
    shares[p.id()] = k.sk;
    // The model, encrypted by node 0 and shared.
    EncryptedModel m;
    for (double v : w) {
      mhe::Xof e(9, "model");
      m.weights.push_back(
          mhe::Encrypt(ctx(), k.pk, mhe::EncodeConstant(ctx(), v, 30), e));
    }
    std::vector<mhe::Ciphertext> r;
    if (encrypted) {
      EncryptedQuery q;
      if (p.id() == 2) {
        mhe::Xof e(10, "query");
        q = EncryptQuery(ctx(), k.pk, query, e);
      }
      r = PredictEncrypted(p, k, m, p.id() == 2 ? &q : nullptr, 2, poly, qpk, 1, xof);
    } else {
      r = PredictEncrypted(p, k, m, p.id() == 2 ? &query : nullptr, 2, poly, qpk, 1, xof);
    }
    if (p.id() != 1) {
      EXPECT_TRUE(r.empty());
    }
    return std::optional(r);
  });
  PredictResult res;
  res.probs = DecryptProbabilities(ctx(), qsk, *out[1], query.rows());
  const mhe::SecretKey s = mhe::SumSecrets(ctx(), shares);
  res.collective_view = DecryptProbabilities(ctx(), s, *out[1], query.rows());
  return res;
}

TEST(PredictTest, ZeroModelGivesOneHalf) {
  const Dataset q = Blobs(100, 3, 2, 4);
  const auto r = RunPredict(std::vector<double>(4, 0.0), q, false, 30);
  for (double v : r.probs) EXPECT_NEAR(v, 0.5, 1e-3);
}

TEST(PredictTest, MatchesCleartextPolynomialPredictor) {
  std::mt19937_64 g(12);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  std::vector<double> w(5);
  for (double& v : w) v = u(g);
  const Dataset q = Blobs(300, 4, 2, 5);
  const PolySigmoid poly = FitSigmoidPoly(3, 8.0);
  const auto want = PredictProba(w, q, PolyActivation(poly));
  for (bool encrypted : {false, true}) {
    const auto r = RunPredict(w, q, encrypted, encrypted ? 31 : 32);
    for (size_t i = 0; i < q.rows(); ++i) {
      ASSERT_NEAR(r.probs[i], want[i], 1e-3) << "row " << i << " encrypted=" << encrypted;
    }
    // Only the querier key opens the result.
    EXPECT_LT(std::fabs(Pearson(r.collective_view, want)), 0.1);
  }
}

TEST(PredictTest, FeatureCountMismatchFails) {
  EXPECT_THROW(RunPredict(std::vector<double>(2, 0.1), Blobs(10, 3, 2, 4), false, 33), Error);
}

struct HistogramOut {
  std::vector<int64_t> counts;
};

std::vector<int64_t> RunHistogram(const std::vector<std::vector<pipeline::MispEvent>>& stores,
                                  const std::vector<std::string>& taxonomy,
                                  const DateFilter& filter, uint8_t tag) {
  mhe::Xof qx(78, "querier");
  const mhe::SecretKey qsk = mhe::KeygenSecret(ctx(), qx);
  const mhe::PublicKey qpk = mhe::KeygenPublic(ctx(), qsk, qx);
  auto out = RunSession<std::vector<mhe::Ciphertext>>(Opts(stores.size(), tag), [&](Party& p) {
    mhe::Xof xof = NodeXof(p);
    const MheKeys k = SetupKeys(p, ctx(), xof, false);
    return std::optional(
        SecureHistogram(p, k, taxonomy, stores[p.id()], filter, qpk, 0, xof));
  });
  return DecodeCounts(ctx(), qsk, *out[0], taxonomy.size());
}

const std::vector<std::string> kTaxonomy{"Locky", "Emotet", "Ryuk", "WannaCry", "Fireball"};

TEST(HistogramTest, ExampleTaxonomyEvents) {
  std::vector<std::vector<pipeline::MispEvent>> stores;
  for (int i = 0; i < 3; ++i) {
    stores.push_back(pipeline::LoadMispExport(std::string(CTI_TEST_DATA_DIR) + "/taxonomy_node" +
                                              std::to_string(i) + ".json"));
  }
  EXPECT_EQ(RunHistogram(stores, kTaxonomy, {}, 40), (std::vector<int64_t>{1, 1, 1, 1, 1}));
  // Date filter: only 2020-08-12 .. 2020-08-15.
  EXPECT_EQ(RunHistogram(stores, kTaxonomy, {"2020-08-12", "2020-08-15"}, 41),
            (std::vector<int64_t>{0, 1, 1, 1, 0}));
}

TEST(HistogramTest, NoEventsAnywhere) {
  EXPECT_EQ(RunHistogram({{}, {}}, kTaxonomy, {}, 42), std::vector<int64_t>(5, 0));
}

TEST(HistogramTest, RandomCountsSumExactly) {
  std::mt19937_64 g(3);
  std::vector<std::string> tax;
  for (int t = 0; t < 40; ++t) tax.push_back("family" + std::to_string(t));
  std::vector<std::vector<pipeline::MispEvent>> stores(3);
  std::vector<int64_t> want(tax.size(), 0);
  for (auto& s : stores) {
    for (size_t t = 0; t < tax.size(); ++t) {
      const int n = static_cast<int>(g() % 30);
      for (int e = 0; e < n; ++e) {
        pipeline::MispEvent ev;
        ev.date = "2021-01-01";
        ev.info = tax[t];
        s.push_back(ev);
      }
      want[t] += n;
    }
  }
  EXPECT_EQ(RunHistogram(stores, tax, {}, 43), want);
  EXPECT_EQ(CountTaxonomy(tax, stores[0], {}).size(), tax.size());
}

TEST(HistogramTest, TaxonomyLongerThanSlotsFails) {
  std::vector<std::string> tax(ctx().slots() + 1, "x");
  EXPECT_THROW(RunHistogram({{}}, tax, {}, 44), Error);
}

std::vector<std::optional<FeatureStats>> RunStats(const std::vector<Dataset>& nodes,
                                                  uint8_t tag) {
  return RunSession<FeatureStats>(Opts(nodes.size(), tag), [&](Party& p) {
    mhe::Xof xof = NodeXof(p);
    const MheKeys k = SetupKeys(p, ctx(), xof, false);
    return std::optional(FederatedStandardization(p, k, nodes[p.id()], xof));
  });
}

Dataset RawRows(size_t n, uint64_t seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> nd;
  Dataset d;
  d.feature_names = {"small", "large", "constant"};
  for (size_t i = 0; i < n; ++i) {
    d.AddRow(std::vector<double>{nd(g), 5e4 + 2e3 * nd(g), 7.25}, static_cast<int>(i % 2));
  }
  return d;
}

TEST(FedStatsTest, MatchesPooledOracle) {
  const std::vector<Dataset> nodes{RawRows(300, 1), RawRows(150, 2), RawRows(520, 3)};
  const FeatureStats want = PooledStats(nodes);
  auto out = RunStats(nodes, 50);
  for (const auto& got : out) {
    ASSERT_TRUE(got);
    EXPECT_EQ(got->count, 970u);
    for (size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(got->mean[j], want.mean[j], 1e-6 * std::max(1.0, std::fabs(want.mean[j])));
      EXPECT_NEAR(got->std[j], want.std[j], 1e-6 * std::max(1.0, want.std[j]));
    }
    EXPECT_EQ(got->constant, (std::vector<bool>{false, false, true}));
  }
}

TEST(FedStatsTest, SingleNodeEqualsLocalStats) {
  const Dataset d = RawRows(200, 4);
  const FeatureStats want = PooledStats({d});
  auto out = RunStats({d}, 51);
  for (size_t j = 0; j < 2; ++j) {
    EXPECT_NEAR(out[0]->mean[j], want.mean[j], 1e-6 * std::max(1.0, std::fabs(want.mean[j])));
    EXPECT_NEAR(out[0]->std[j], want.std[j], 1e-6 * std::max(1.0, want.std[j]));
  }
  EXPECT_TRUE(out[0]->constant[2]);
}

TEST(FedStatsTest, EmptyGlobalDatasetFails) {
  Dataset e;
  e.feature_names = {"a"};
  EXPECT_THROW(RunStats({e, e}, 52), Error);
}

TEST(OvrEncryptedTest, MatchesCleartextOvr) {
  std::mt19937_64 g(8);
  std::normal_distribution<double> nd(0.0, 0.5);
  const double cx[3] = {1.5, -1.5, 0}, cy[3] = {1, 1, -1.5};
  std::vector<Dataset> nodes(2);
  for (auto& d : nodes) {
    d.feature_names = {"intercept", "x", "y"};
    for (int i = 0; i < 90; ++i) {
      const int c = i % 3;
      d.AddRow(std::vector<double>{1.0, cx[c] + nd(g), cy[c] + nd(g)}, c + 1);
    }
  }
  TrainConfig c;
  c.iterations = 5;
  c.eta = 0.5;
  auto out = RunSession<std::vector<std::vector<double>>>(Opts(2, 60), [&](Party& p) {
    mhe::Xof xof = NodeXof(p);
    const MheKeys k = SetupKeys(p, ctx(), xof);
    const OvrEncryptedModel m = OvrTrainEncrypted(p, k, nodes[p.id()], 4, c, xof);
    EXPECT_EQ(m.untrainable, std::vector<int>{4});
    std::vector<std::vector<double>> w(4);
    for (int cls = 0; cls < 3; ++cls) {
      if (auto d = DecryptModel(p, k, *m.models[cls], 0, xof)) w[cls] = *d;
    }
    return std::optional(w);
  });
  const Activation act = PolyActivation(c.poly);
  const OvrModel want = OvrTrainCleartext(nodes, 4, c, act);
  EXPECT_EQ(want.untrainable, std::vector<int>{4});
  for (int cls = 0; cls < 3; ++cls) {
    for (size_t j = 0; j < 3; ++j) EXPECT_NEAR((*out[0])[cls][j], want.weights[cls][j], 1e-2);
  }
  OvrModel got{*out[0], {4}};
  const Dataset all = nodes[0].Concat(nodes[1]);
  EXPECT_EQ(OvrPredict(got, all, act), OvrPredict(want, all, act));
}

}  // namespace
}  // namespace cti::analytics
