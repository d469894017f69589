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

#include <filesystem>
#include <vector>

#include "cti/common/error.h"
#include "cti/ctictl/experiments.h"
#include "cti/ctictl/report.h"

namespace cti::ctictl {
namespace {

using nlohmann::json;

TEST(SummaryTest, StudentIntervalMatchesReference) {
  const std::vector<double> v = {1, 2, 3, 4};
  const Summary s = Summarize(v);
  EXPECT_EQ(s.n, 4u);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  // Reference values from scipy.stats.t.ppf(0.975, 3).
  EXPECT_NEAR(s.std, 1.2909944487358056, 1e-12);
  EXPECT_NEAR(s.ci95, 2.054260256760879, 1e-9);
  const Summary one = Summarize(std::vector<double>{0.7});
  EXPECT_DOUBLE_EQ(one.mean, 0.7);
  EXPECT_DOUBLE_EQ(one.ci95, 0.0);
}

TEST(ConfigTest, RoundTripAndUnknownKeys) {
  CollabGainConfig c;
  c.sizes = {100, 200};
  c.train.iterations = 7;
  const CollabGainConfig back = CollabGainFromJson(ToJson(c));
  EXPECT_EQ(back.sizes, c.sizes);
  EXPECT_EQ(back.train.iterations, 7);
  EXPECT_EQ(ToJson(back), ToJson(c));
  EXPECT_EQ(ToJson(SmoteBiasFromJson(ToJson(SmoteBiasConfig{}))), ToJson(SmoteBiasConfig{}));
  EXPECT_EQ(ToJson(PerfBenchFromJson(ToJson(PerfBenchConfig{}))), ToJson(PerfBenchConfig{}));
  try {
    PerfBenchFromJson(json{{"sizez", {1}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  EXPECT_THROW(SmoteBiasFromJson(json{{"generator", {{"ratio", 0.1}}}}), Error);
}

SmoteBiasConfig SmallSmote() {
  SmoteBiasConfig c;
  c.generator.n_total = 20000;
  c.generator.minority_ratio = 0.01;
  c.generator.n_features = 5;
  c.repetitions = 3;
  c.train.iterations = 20;
  return c;
}

TEST(SmoteBiasTest, AggregatesFollowFromRecords) {
  const ExperimentReport r = RunSmoteBias(SmallSmote());
  ASSERT_EQ(r.records.size(), 3u);
  for (const auto& rec : r.records) {
    for (const char* cell : {"real_real", "real_synthetic", "synthetic_real", "synthetic_synthetic"}) {
      const double acc = rec.at(cell).get<double>();
      EXPECT_GE(acc, 0.0);
      EXPECT_LE(acc, 1.0);
    }
  }
  EXPECT_EQ(AggregateSmoteBias(r.records), r.aggregates);
  EXPECT_EQ(VerdictSmoteBias(r.aggregates), r.verdict);
  EXPECT_TRUE(r.tables.contains("smote_bias_matrix.csv"));
  // Same seed, same report.
  EXPECT_EQ(RunSmoteBias(SmallSmote()).records, r.records);
}

TEST(SmoteBiasTest, VerdictOnHandMadeAggregates) {
  json a;
  a["pooled_std"] = 0.001;
  a["gaps"] = {{"g1", 0.01}, {"g2", 0.003}, {"g3", 0.0025}};
  EXPECT_TRUE(VerdictSmoteBias(a)["pass"].get<bool>());
  a["gaps"]["g3"] = 0.0015;  // positive but below 2 pooled std
  json v = VerdictSmoteBias(a);
  EXPECT_TRUE(v["ordering_holds"].get<bool>());
  EXPECT_FALSE(v["pass"].get<bool>());
  a["gaps"]["g3"] = -0.01;
  EXPECT_FALSE(VerdictSmoteBias(a)["ordering_holds"].get<bool>());
}

CollabGainConfig SmallCollab() {
  CollabGainConfig c;
  c.nodes = 4;
  c.sizes = {256, 1024};
  c.runs = 4;
  c.test_rows = 500;
  c.train.iterations = 10;
  return c;
}

TEST(CollabGainTest, AggregatesFollowFromRecords) {
  const ExperimentReport r = RunCollabGain(SmallCollab());
  ASSERT_EQ(r.records.size(), 8u);
  for (const auto& rec : r.records) EXPECT_EQ(rec.at("local").size(), 4u);
  EXPECT_EQ(AggregateCollabGain(r.records, r.config), r.aggregates);
  json v = VerdictCollabGain(r.aggregates);
  v.erase("encrypted_spot_check");
  json want = r.verdict;
  want.erase("encrypted_spot_check");
  EXPECT_EQ(v, want);
  EXPECT_EQ(RunCollabGain(SmallCollab()).records, r.records);
}

TEST(CollabGainTest, EncryptedSpotCheckAgreesWithCleartext) {
  CollabGainConfig c = SmallCollab();
  c.sizes = {256};
  c.runs = 2;
  c.train.iterations = 3;
  c.encrypted_spot_check = true;
  const ExperimentReport r = RunCollabGain(c);
  const json& spot = r.verdict.at("encrypted_spot_check");
  EXPECT_LE(spot.at("max_weight_diff").get<double>(), 1e-2);
  EXPECT_TRUE(spot.at("pass").get<bool>());
}

TEST(PerfBenchTest, RecordsAndBandwidth) {
  PerfBenchConfig c;
  c.sizes = {300, 600};
  c.delays_ms = {0};
  c.features = 3;
  c.iterations = 1;
  c.repeats = 1;
  const ExperimentReport r = RunPerfBench(c);
  ASSERT_EQ(r.records.size(), 4u);
  for (const auto& rec : r.records) {
    EXPECT_GT(rec.at("wall_s").get<double>(), 0.0);
    EXPECT_GT(rec.at("iteration_bytes").get<uint64_t>(), 0u);
  }
  EXPECT_EQ(AggregatePerfBench(r.records, r.config), r.aggregates);
  EXPECT_EQ(VerdictPerfBench(r.aggregates), r.verdict);
  const json& bw = r.aggregates.at("per_delay")[0].at("bandwidth")[0];
  // Several ciphertexts per node and iteration: one per feature plus u.
  EXPECT_GT(bw.at("ciphertexts_per_node_iteration").get<double>(), 1.0);
  EXPECT_EQ(r.config.at("ciphertext_bytes").get<uint64_t>(), 4096u * 3 * 16);
  PerfBenchConfig bad = c;
  bad.sizes = {300};
  EXPECT_THROW(RunPerfBench(bad), Error);
}

TEST(ReportTest, JsonRoundTripAndFiles) {
  ExperimentReport r;
  r.experiment = "x";
  r.seed = 3;
  r.config = {{"a", 1}};
  r.records = json::array({{{"v", 0.5}}});
  r.aggregates = {{"m", 0.5}};
  r.verdict = {{"pass", true}};
  r.tables["t.csv"] = "a,b\n1,2\n";
  const ExperimentReport back = ReportFromJson(ReportJson(r));
  EXPECT_EQ(back.experiment, "x");
  EXPECT_EQ(back.records, r.records);
  EXPECT_EQ(back.verdict, r.verdict);
  const auto dir = std::filesystem::temp_directory_path() / "ctictl_report_test";
  std::filesystem::remove_all(dir);
  WriteReport(r, dir.string());
  EXPECT_TRUE(std::filesystem::exists(dir / "report.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "t.csv"));
  std::filesystem::remove_all(dir);
  EXPECT_THROW(ReportFromJson(json{{"experiment", 1}}), Error);
}

}  // namespace
}  // namespace cti::ctictl
