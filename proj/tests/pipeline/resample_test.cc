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

#include <cmath>
#include <set>

#include "cti/common/error.h"
#include "cti/pipeline/generator.h"
#include "cti/pipeline/resample.h"
#include "cti/pipeline/split.h"

namespace cti::pipeline {
namespace {

Dataset Small(size_t minority, size_t majority, uint64_t seed) {
  GeneratorConfig c;
  c.n_total = minority + majority;
  c.minority_ratio = static_cast<double>(minority) / static_cast<double>(c.n_total);
  c.n_features = 4;
  c.seed = seed;
  return GenDdosLike(c);
}

std::multiset<std::vector<double>> RowsOf(const Dataset& d, int label) {
  std::multiset<std::vector<double>> s;
  for (size_t i = 0; i < d.rows(); ++i) {
    if (d.y[i] == label) s.emplace(d.row(i).begin(), d.row(i).end());
  }
  return s;
}

TEST(GeneratorTest, MinorityCountFromRatio) {
  GeneratorConfig c;
  c.n_total = 1000000;
  c.n_features = 2;
  const Dataset d = GenDdosLike(c);
  EXPECT_EQ(d.ClassCounts().at(1), 206u);
  EXPECT_EQ(d.rows(), 1000000u);
}

TEST(GeneratorTest, SameSeedSameBytes) {
  GeneratorConfig c;
  c.n_total = 20000;
  c.minority_ratio = 0.01;
  c.n_features = 88;
  EXPECT_TRUE(GenDdosLike(c) == GenDdosLike(c));
  GeneratorConfig other = c;
  other.seed = 2;
  EXPECT_FALSE(GenDdosLike(other) == GenDdosLike(c));
}

TEST(GeneratorTest, ClassMeansAreSeparated) {
  GeneratorConfig c;
  c.n_total = 20000;
  c.minority_ratio = 0.05;
  c.n_features = 10;
  c.separation = 4.0;
  const Dataset d = GenDdosLike(c);
  std::vector<double> m0(10), m1(10);
  for (size_t i = 0; i < d.rows(); ++i) {
    auto& m = d.y[i] ? m1 : m0;
    for (size_t j = 0; j < 10; ++j) m[j] += d.row(i)[j];
  }
  const auto counts = d.ClassCounts();
  double dist2 = 0;
  for (size_t j = 0; j < 10; ++j) {
    const double diff = m1[j] / counts.at(1) - m0[j] / counts.at(0);
    dist2 += diff * diff;
  }
  EXPECT_NEAR(std::sqrt(dist2), 4.0, 0.15);
}

TEST(GeneratorTest, RejectsTooFewMinorityRows) {
  GeneratorConfig c;
  c.n_total = 1000;  // 0.206 rows
  EXPECT_THROW(GenDdosLike(c), Error);
  c.minority_ratio = 1.5;
  EXPECT_THROW(GenDdosLike(c), Error);
}

TEST(UndersampleTest, BalancedInputUnchanged) {
  const Dataset d = Small(50, 50, 1);
  const Dataset u = RandomUndersample(d, 3);
  EXPECT_EQ(u.ClassCounts(), d.ClassCounts());
}

TEST(UndersampleTest, DefaultRatioGivesEqualCounts) {
  GeneratorConfig c;
  c.n_total = 1000000;
  c.n_features = 2;
  const Dataset d = GenDdosLike(c);
  const Dataset u = RandomUndersample(d, 5);
  EXPECT_EQ(u.ClassCounts().at(0), 206u);
  EXPECT_EQ(u.ClassCounts().at(1), 206u);
  EXPECT_EQ(RowsOf(u, 1), RowsOf(d, 1));  // every minority row retained
}

TEST(UndersampleTest, SingleClassRejected) {
  Dataset d;
  d.feature_names = {"a"};
  d.AddRow(std::vector<double>{1.0}, 0);
  d.AddRow(std::vector<double>{2.0}, 0);
  EXPECT_THROW(RandomUndersample(d, 1), Error);
}

TEST(SmoteTest, IdenticalMinorityGivesIdenticalSynthetics) {
  Dataset d;
  d.feature_names = {"a", "b"};
  for (int i = 0; i < 6; ++i) d.AddRow(std::vector<double>{1.5, -2.0}, 1);
  for (int i = 0; i < 20; ++i) d.AddRow(std::vector<double>{double(i), double(i)}, 0);
  const Dataset s = Smote(d, {.k = 5, .seed = 1});
  for (size_t i = 26; i < s.rows(); ++i) {
    EXPECT_EQ(s.row(i)[0], 1.5);
    EXPECT_EQ(s.row(i)[1], -2.0);
  }
}

// Independent check: each synthetic point is on a segment between two
// original minority points, found by brute force.
TEST(SmoteTest, SyntheticPointsAreConvexCombinations) {
  const Dataset d = Small(12, 60, 4);
  std::vector<std::pair<size_t, size_t>> origin;
  const Dataset s = Smote(d, {.k = 5, .seed = 9}, &origin);
  std::vector<size_t> minority;
  for (size_t i = 0; i < d.rows(); ++i) {
    if (d.y[i] == 1) minority.push_back(i);
  }
  for (size_t r = d.rows(); r < s.rows(); ++r) {
    bool found = false;
    for (size_t a : minority) {
      for (size_t b : minority) {
        if (a == b) continue;
        // t from the first coordinate, then check all coordinates.
        const double den = d.row(b)[0] - d.row(a)[0];
        if (std::fabs(den) < 1e-12) continue;
        const double t = (s.row(r)[0] - d.row(a)[0]) / den;
        if (t < -1e-12 || t > 1 + 1e-12) continue;
        bool ok = true;
        for (size_t j = 0; j < d.cols(); ++j) {
          const double want = d.row(a)[j] + t * (d.row(b)[j] - d.row(a)[j]);
          ok = ok && std::fabs(want - s.row(r)[j]) <= 1e-9;
        }
        found = found || ok;
      }
    }
    EXPECT_TRUE(found) << "synthetic row " << r;
  }
  EXPECT_EQ(origin.size(), s.rows() - d.rows());
}

TEST(SmoteTest, CountsBalancedWithinOne) {
  const Dataset s = Smote(Small(20, 333, 2), {.k = 5, .seed = 1});
  const auto c = s.ClassCounts();
  EXPECT_LE(std::abs(static_cast<long>(c.at(0)) - static_cast<long>(c.at(1))), 1);
  EXPECT_THROW(Smote(Small(5, 50, 2), {.k = 5, .seed = 1}), Error);
}

TEST(SmoteTest, NeighboursAreAmongTheNearest) {
  const Dataset d = Small(15, 40, 6);
  std::vector<std::pair<size_t, size_t>> origin;
  Smote(d, {.k = 3, .seed = 2}, &origin);
  for (auto [a, b] : origin) {
    const auto dist = [&](size_t u, size_t v) {
      double s = 0;
      for (size_t j = 0; j < d.cols(); ++j) s += std::pow(d.row(u)[j] - d.row(v)[j], 2);
      return s;
    };
    size_t closer = 0;
    for (size_t c = 0; c < d.rows(); ++c) {
      if (d.y[c] == 1 && c != a && dist(a, c) < dist(a, b)) ++closer;
    }
    EXPECT_LT(closer, 3u);
  }
}

TEST(ExperimentSetsTest, SyntheticMatchesRealSizeAndIsBalanced) {
  GeneratorConfig c;
  c.n_total = 200000;
  c.n_features = 8;
  const Dataset d = GenDdosLike(c);
  const Dataset real = MakeRealDataset(d, 1);
  const Dataset synth = MakeSyntheticDataset(d, 1);
  EXPECT_EQ(synth.rows(), real.rows());
  EXPECT_EQ(real.ClassCounts().at(0), real.ClassCounts().at(1));
  EXPECT_EQ(synth.ClassCounts().at(0), synth.ClassCounts().at(1));
  EXPECT_EQ(real.rows(), 2 * 41u);  // round(0.000206 * 200000) = 41
}

TEST(ExperimentSetsTest, StreamingPathEqualsEagerPath) {
  for (uint64_t seed : {1u, 9u}) {
    GeneratorConfig c;
    c.n_total = 200000;
    c.n_features = 5;
    c.seed = seed;
    const Dataset d = GenDdosLike(c);
    const ExperimentSets sets = MakeExperimentSets(c, seed + 3);
    EXPECT_EQ(sets.real, MakeRealDataset(d, seed + 3));
    EXPECT_EQ(sets.synthetic, MakeSyntheticDataset(d, seed + 3));
  }
  GeneratorConfig flipped;
  flipped.n_total = 300;
  flipped.minority_ratio = 0.9;
  flipped.n_features = 3;
  const Dataset d = GenDdosLike(flipped);
  const ExperimentSets sets = MakeExperimentSets(flipped, 4);
  EXPECT_EQ(sets.real, MakeRealDataset(d, 4));
  EXPECT_EQ(sets.synthetic, MakeSyntheticDataset(d, 4));
}

TEST(SplitTest, SeventyThirty) {
  const Dataset d = Small(100, 900, 3);
  const NodeSplit s = PartitionAndSplit(d, 1, 0.7, 1);
  EXPECT_EQ(s.nodes[0].rows(), 700u);
  EXPECT_EQ(s.test.rows(), 300u);
}

TEST(SplitTest, EightEqualNodes) {
  const Dataset d = Small(80, 720, 3);
  const auto parts = Partition(d, 8);
  for (const auto& p : parts) EXPECT_EQ(p.rows(), 100u);
  const auto uneven = Partition(Small(3, 100, 1), 8);
  size_t lo = 1000, hi = 0;
  for (const auto& p : uneven) {
    lo = std::min(lo, p.rows());
    hi = std::max(hi, p.rows());
  }
  EXPECT_LE(hi - lo, 1u);
}

TEST(SplitTest, DisjointAndExhaustive) {
  Dataset d;
  d.feature_names = {"id"};
  for (int i = 0; i < 997; ++i) d.AddRow(std::vector<double>{double(i)}, i % 2);
  const NodeSplit s = PartitionAndSplit(d, 7, 0.7, 42);
  std::multiset<double> seen;
  for (const auto& p : s.nodes) {
    for (size_t i = 0; i < p.rows(); ++i) seen.insert(p.row(i)[0]);
  }
  for (size_t i = 0; i < s.test.rows(); ++i) seen.insert(s.test.row(i)[0]);
  ASSERT_EQ(seen.size(), 997u);
  EXPECT_EQ(std::set<double>(seen.begin(), seen.end()).size(), 997u);
  EXPECT_THROW(PartitionAndSplit(d, 0, 0.7, 1), Error);
  EXPECT_THROW(Partition(Small(2, 3, 1), 8), Error);
}

TEST(SplitTest, Deterministic) {
  const Dataset d = Small(30, 300, 8);
  const NodeSplit a = PartitionAndSplit(d, 3, 0.7, 5);
  const NodeSplit b = PartitionAndSplit(d, 3, 0.7, 5);
  EXPECT_TRUE(a.test == b.test);
  for (size_t k = 0; k < 3; ++k) EXPECT_TRUE(a.nodes[k] == b.nodes[k]);
}

}  // namespace
}  // namespace cti::pipeline
