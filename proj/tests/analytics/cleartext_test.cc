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

#include "cti/analytics/logreg.h"
#include "cti/analytics/metrics.h"
#include "cti/analytics/model_io.h"
#include "cti/analytics/ovr.h"
#include "cti/analytics/sigmoid.h"
#include "cti/common/error.h"
#include "cti/pipeline/generator.h"
#include "cti/pipeline/resample.h"
#include "cti/pipeline/split.h"

namespace cti::analytics {
namespace {

// Two Gaussian blobs with centers at +-sep/2 along the diagonal.
Dataset Blobs(size_t n, size_t dims, double sep, uint64_t seed, bool intercept = true) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  Dataset d;
  if (intercept) d.feature_names.push_back("intercept");
  for (size_t j = 0; j < dims; ++j) d.feature_names.push_back("f" + std::to_string(j));
  std::vector<double> row;
  for (size_t i = 0; i < n; ++i) {
    const int y = static_cast<int>(i % 2);
    row.clear();
    if (intercept) row.push_back(1.0);
    for (size_t j = 0; j < dims; ++j) {
      row.push_back(nd(g) + (y ? sep : -sep) / (2.0 * std::sqrt(static_cast<double>(dims))));
    }
    d.AddRow(row, y);
  }
  return d;
}

double Accuracy(const std::vector<int>& a, const std::vector<int>& b) {
  size_t hit = 0;
  for (size_t i = 0; i < a.size(); ++i) hit += a[i] == b[i];
  return static_cast<double>(hit) / a.size();
}

// Least-squares coefficients for degree 1, 3 and 5 on 1000 grid points over
// [-8, 8], computed with numpy.polynomial.polyfit on the full (odd and even)
// monomial basis.
TEST(SigmoidFitTest, MatchesIndependentLeastSquares) {
  const PolySigmoid p = FitSigmoidPoly(3, 8.0);
  ASSERT_EQ(p.coeffs.size(), 4u);
  EXPECT_EQ(p.coeffs[0], 0.5);
  EXPECT_EQ(p.coeffs[2], 0.0);
  EXPECT_NEAR(p.coeffs[1], 1.50013521e-01, 1e-9);
  EXPECT_NEAR(p.coeffs[3], -1.58912288e-03, 1e-11);
  EXPECT_NEAR(p.max_grid_error, 0.11318739484523577, 1e-9);
  EXPECT_LE(p.max_grid_error, 0.15);
  const PolySigmoid p1 = FitSigmoidPoly(1, 8.0);
  EXPECT_NEAR(p1.coeffs[1], 0.08886912, 1e-8);
  const PolySigmoid p5 = FitSigmoidPoly(5, 8.0);
  EXPECT_NEAR(p5.coeffs[5], 4.20690807e-05, 1e-12);
  EXPECT_EQ(p5.coeffs[4], 0.0);
}

TEST(SigmoidFitTest, RejectsBadDegrees) {
  EXPECT_THROW(FitSigmoidPoly(2, 8.0), Error);
  EXPECT_THROW(FitSigmoidPoly(0, 8.0), Error);
  EXPECT_THROW(FitSigmoidPoly(17, 8.0), Error);
}

TEST(GradientTest, HandWorkedExample) {
  Dataset d;
  d.feature_names = {"x"};
  d.AddRow(std::vector<double>{1.0}, 1);
  d.AddRow(std::vector<double>{-1.0}, 0);
  const std::vector<double> w{0.0};
  // ((0.5 - 1) * 1 + (0.5 - 0) * -1) / 2
  EXPECT_DOUBLE_EQ(LrGradient(w, d, ExactActivation())[0], -0.5);
}

TEST(GradientTest, ZeroWhenResidualIsZero) {
  Dataset d;
  d.feature_names = {"x"};
  d.AddRow(std::vector<double>{0.0}, 1);
  // act(0) = 1 for this activation, so the residual vanishes.
  const Activation one = [](double) { return 1.0; };
  EXPECT_EQ(LrGradient(std::vector<double>{3.0}, d, one)[0], 0.0);
}

TEST(GradientTest, MatchesFiniteDifferencesOfLogLoss) {
  std::mt19937_64 g(11);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 5; ++trial) {
    Dataset d;
    d.feature_names = {"a", "b", "c", "d", "e"};
    for (int i = 0; i < 20; ++i) {
      std::vector<double> row(5);
      for (double& v : row) v = nd(g);
      d.AddRow(row, static_cast<int>(g() % 2));
    }
    std::vector<double> w(5);
    for (double& v : w) v = 0.5 * nd(g);
    const auto grad = LrGradient(w, d, ExactActivation());
    for (size_t j = 0; j < 5; ++j) {
      const double h = 1e-5;
      auto wp = w, wm = w;
      wp[j] += h;
      wm[j] -= h;
      const double fd = (LogLoss(wp, d) - LogLoss(wm, d)) / (2 * h);
      EXPECT_NEAR(grad[j], fd, 1e-5 * std::max(1.0, std::fabs(fd))) << trial << "/" << j;
    }
  }
}

TEST(GradientTest, DimensionMismatch) {
  Dataset d;
  d.feature_names = {"a", "b"};
  d.AddRow(std::vector<double>{1, 2}, 0);
  EXPECT_THROW(LrGradient(std::vector<double>{1.0}, d, ExactActivation()), Error);
}

TEST(CleartextTrainTest, ZeroIterationsGivesZeroWeights) {
  TrainConfig c;
  c.iterations = 0;
  for (double w : LrTrain(Blobs(50, 3, 4, 1), c, ExactActivation())) EXPECT_EQ(w, 0.0);
}

TEST(CleartextTrainTest, SeparableBlobs) {
  TrainConfig c;
  c.iterations = 200;
  c.eta = 0.5;
  const Dataset d = Blobs(400, 2, 8.0, 3);
  const auto w = LrTrain(d, c, ExactActivation());
  EXPECT_GE(Accuracy(PredictLabels(w, d, ExactActivation()), d.y), 0.99);
}

TEST(CleartextTrainTest, OneNodeFederatedEqualsCentral) {
  TrainConfig c;
  const Dataset d = Blobs(120, 3, 3.0, 5);
  const auto central = LrTrainCleartext({d}, c, TrainMode::kCentral, ExactActivation());
  const auto fed =
      LrTrainCleartext({d}, c, TrainMode::kFederatedAggregated, ExactActivation());
  EXPECT_EQ(central[0], fed[0]);
}

TEST(CleartextTrainTest, LocalOnlyGivesOneModelPerNode) {
  TrainConfig c;
  const std::vector<Dataset> nodes{Blobs(60, 2, 3, 1), Blobs(60, 2, 3, 2), Blobs(60, 2, 3, 3)};
  EXPECT_EQ(LrTrainCleartext(nodes, c, TrainMode::kFederatedLocalOnly, ExactActivation()).size(),
            3u);
  // Full-batch aggregation weighted by rows is the pooled gradient.
  const auto fed = LrTrainCleartext(nodes, c, TrainMode::kFederatedAggregated, ExactActivation());
  const auto cen = LrTrainCleartext(nodes, c, TrainMode::kCentral, ExactActivation());
  for (size_t j = 0; j < fed[0].size(); ++j) EXPECT_NEAR(fed[0][j], cen[0][j], 1e-12);
}

TEST(CleartextTrainTest, RejectsEmptyAndSingleClass) {
  TrainConfig c;
  Dataset empty;
  empty.feature_names = {"a"};
  EXPECT_THROW(LrTrain(empty, c, ExactActivation()), Error);
  Dataset one;
  one.feature_names = {"a"};
  one.AddRow(std::vector<double>{1.0}, 1);
  one.AddRow(std::vector<double>{2.0}, 1);
  EXPECT_THROW(LrTrain(one, c, ExactActivation()), Error);
}

TEST(CleartextTrainTest, MiniBatchIsDeterministic) {
  TrainConfig c;
  c.batch = 16;
  const Dataset d = Blobs(100, 3, 3, 9);
  EXPECT_EQ(LrTrain(d, c, ExactActivation()), LrTrain(d, c, ExactActivation()));
  TrainConfig other = c;
  other.seed = 99;
  EXPECT_NE(LrTrain(d, other, ExactActivation()), LrTrain(d, c, ExactActivation()));
}

TEST(GeneratorSeparabilityTest, LogisticModelSeparatesTheClasses) {
  pipeline::GeneratorConfig g;
  g.n_total = 20000;
  g.minority_ratio = 0.05;
  g.n_features = 20;
  const Dataset raw = pipeline::MakeRealDataset(pipeline::GenDdosLike(g), 1);
  const auto split = pipeline::PartitionAndSplit(raw, 1, 0.7, 2);
  const FeatureStats st = PooledStats({split.nodes[0]});
  const Dataset train = Standardize(split.nodes[0], st);
  const Dataset test = Standardize(split.test, st);
  TrainConfig c;
  c.iterations = 50;
  const auto w = LrTrain(train, c, PolyActivation(c.poly));
  EXPECT_GE(Accuracy(PredictLabels(w, test, PolyActivation(c.poly)), test.y), 0.9);
}

TEST(StandardizeTest, PooledStatsAndConstantColumns) {
  Dataset d;
  d.feature_names = {"a", "const", "b"};
  d.AddRow(std::vector<double>{1, 5, 10}, 0);
  d.AddRow(std::vector<double>{3, 5, 30}, 1);
  const FeatureStats s = PooledStats({d});
  EXPECT_DOUBLE_EQ(s.mean[0], 2.0);
  EXPECT_DOUBLE_EQ(s.std[0], 1.0);
  EXPECT_TRUE(s.constant[1]);
  const Dataset z = Standardize(d, s);
  EXPECT_EQ(z.feature_names, (std::vector<std::string>{"intercept", "a", "b"}));
  EXPECT_DOUBLE_EQ(z.row(0)[1], -1.0);
  EXPECT_DOUBLE_EQ(z.row(1)[2], 1.0);
  EXPECT_DOUBLE_EQ(z.row(1)[0], 1.0);
}

TEST(MetricsTest, PerfectPredictions) {
  const std::vector<int> y{0, 1, 2, 1, 0};
  const Metrics m = EvaluateMetrics(y, y, 3);
  EXPECT_EQ(m.accuracy, 1.0);
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) EXPECT_EQ(m.normalized[i][j], i == j ? 1.0 : 0.0);
  }
}

TEST(MetricsTest, MajorityPredictor) {
  const std::vector<int> y{0, 0, 0, 1, 0, 1, 0, 0};
  const std::vector<int> p(y.size(), 0);
  EXPECT_DOUBLE_EQ(EvaluateMetrics(p, y, 2).accuracy, 6.0 / 8.0);
}

TEST(MetricsTest, HandCountedMatrix) {
  const std::vector<int> truth{0, 0, 1, 1, 1, 2, 2, 0, 1, 2};
  const std::vector<int> pred{0, 1, 1, 1, 2, 2, 0, 0, 1, 2};
  const Metrics m = EvaluateMetrics(pred, truth, 3);
  const std::vector<std::vector<size_t>> want{{2, 1, 0}, {0, 3, 1}, {1, 0, 2}};
  EXPECT_EQ(m.confusion, want);
  EXPECT_DOUBLE_EQ(m.accuracy, 0.7);
  EXPECT_NEAR(m.normalized[1][1], 0.75, 1e-12);
  size_t total = 0;
  for (const auto& r : m.confusion) {
    for (size_t v : r) total += v;
  }
  EXPECT_EQ(total, truth.size());
  for (const auto& r : m.normalized) {
    double s = 0;
    for (double v : r) s += v;
    EXPECT_NEAR(s, 1.0, 1e-9);
  }
  EXPECT_EQ(MetricsCsv(m), "true\\pred,0,1,2\n0,2,1,0\n1,0,3,1\n2,1,0,2\n");
  EXPECT_THROW(EvaluateMetrics(std::vector<int>{3}, std::vector<int>{0}, 3), Error);
}

TEST(TopWeightsTest, SortedByMagnitude) {
  const std::vector<double> w{0.5, -5.25, 2.0, 3.1, -0.1};
  const std::vector<std::string> n{"a", "MD5", "c", "d", "e"};
  const auto top = ExtractTopWeights(w, n, 3);
  ASSERT_EQ(top.size(), 3u);
  EXPECT_EQ(top[0].feature, "MD5");
  EXPECT_EQ(top[0].weight, -5.25);
  for (size_t i = 1; i < top.size(); ++i) {
    EXPECT_GE(std::fabs(top[i - 1].weight), std::fabs(top[i].weight));
  }
  EXPECT_TRUE(ExtractTopWeights(w, n, 0).empty());
  EXPECT_THROW(ExtractTopWeights(w, n, 6), Error);
  const std::vector<RankedWeight> md5{{"MD5", 5.25}};
  EXPECT_EQ(FormatTopWeights(md5), "MD5 -> 5.25\n");
}

Dataset FourBlobs(size_t per_class, uint64_t seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> nd(0.0, 0.6);
  const double cx[4] = {3, -3, 3, -3}, cy[4] = {3, 3, -3, -3};
  Dataset d;
  d.feature_names = {"intercept", "x", "y"};
  for (size_t i = 0; i < per_class; ++i) {
    for (int c = 0; c < 4; ++c) {
      d.AddRow(std::vector<double>{1.0, cx[c] + nd(g), cy[c] + nd(g)}, c + 1);
    }
  }
  return d;
}

TEST(OvrTest, FourSeparableBlobs) {
  TrainConfig c;
  c.iterations = 100;
  c.eta = 0.5;
  const Dataset train = FourBlobs(100, 1), test = FourBlobs(50, 2);
  const OvrModel m = OvrTrainCleartext({train}, 4, c, ExactActivation());
  EXPECT_TRUE(m.untrainable.empty());
  EXPECT_GE(Accuracy(OvrPredict(m, test, ExactActivation()), test.y), 0.95);
}

TEST(OvrTest, TwoClassesMatchTheBinaryModel) {
  TrainConfig c;
  Dataset d = Blobs(100, 2, 3, 4);
  for (int& y : d.y) y += 1;  // labels 1, 2
  const OvrModel m = OvrTrainCleartext({d}, 2, c, ExactActivation());
  const auto w = LrTrain(BinaryView(d, 2), c, ExactActivation());
  const auto binary = PredictLabels(w, d, ExactActivation());
  const auto ovr = OvrPredict(m, d, ExactActivation());
  for (size_t i = 0; i < d.rows(); ++i) EXPECT_EQ(ovr[i], binary[i] + 1) << i;
}

TEST(OvrTest, AbsentClassIsFlaggedAndOthersTrain) {
  TrainConfig c;
  Dataset d = FourBlobs(30, 3);
  Dataset three;
  three.feature_names = d.feature_names;
  for (size_t i = 0; i < d.rows(); ++i) {
    if (d.y[i] != 4) three.AddRow(d.row(i), d.y[i]);
  }
  const OvrModel m = OvrTrainCleartext({three}, 4, c, ExactActivation());
  EXPECT_EQ(m.untrainable, std::vector<int>{4});
  EXPECT_FALSE(m.weights[0].empty());
  for (int p : OvrPredict(m, three, ExactActivation())) EXPECT_NE(p, 4);
}

TEST(OvrTest, ArgmaxIsScaleInvariant) {
  std::mt19937_64 g(3);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<std::vector<double>> s(4, std::vector<double>(50));
  for (auto& r : s) {
    for (double& v : r) v = u(g);
  }
  auto scaled = s;
  for (auto& r : scaled) {
    for (double& v : r) v *= 7.5;
  }
  EXPECT_EQ(ArgmaxLabels(s, {}), ArgmaxLabels(scaled, {}));
}

TEST(ModelIoTest, JsonRoundTrip) {
  FeatureStats st;
  st.names = {"a", "b"};
  st.mean = {1.5, -2};
  st.std = {0.5, 3};
  st.constant = {false, false};
  const std::vector<double> w{0.25, -1.0, 2.0};
  const std::vector<std::string> n{"intercept", "a", "b"};
  const ExportedModel m = MakeExportedModel(w, n, st, 0xabcdef0123456789ull);
  EXPECT_EQ(m.features[0].mean, 0.0);
  EXPECT_EQ(m.features[0].std, 1.0);
  EXPECT_EQ(m.features[2].std, 3.0);
  EXPECT_EQ(ModelFromJson(ModelToJson(m)), m);
  EXPECT_THROW(ModelFromJson("{\"features\": 3}"), Error);
}

}  // namespace
}  // namespace cti::analytics
