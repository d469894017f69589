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


#include "cti/pipeline/resample.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cti/common/error.h"
#include "cti/pipeline/generator.h"

namespace cti::pipeline {
namespace {

struct Classes {
  int minority;
  int majority;
  std::vector<size_t> min_rows;
  std::vector<size_t> maj_rows;
};

Classes SplitClasses(const Dataset& d) {
  const auto counts = d.ClassCounts();
  if (counts.size() != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "resampling needs exactly two classes, got " + std::to_string(counts.size()));
  }
  auto a = counts.begin();
  auto b = std::next(a);
  Classes c;
  // On a tie the larger label is treated as the minority.
  c.minority = a->second < b->second ? a->first : b->first;
  c.majority = c.minority == a->first ? b->first : a->first;
  for (size_t i = 0; i < d.rows(); ++i) {
    (d.y[i] == c.minority ? c.min_rows : c.maj_rows).push_back(i);
  }
  return c;
}

// `count` random rows of `pool`, returned in ascending order.
std::vector<size_t> Sample(std::vector<size_t> pool, size_t count, Rng& rng) {
  Shuffle(rng, pool);
  pool.resize(std::min(count, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

double Dist2(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t j = 0; j < a.size(); ++j) {
    const double t = a[j] - b[j];
    s += t * t;
  }
  return s;
}

// k nearest neighbours of every point, self excluded.
std::vector<std::vector<size_t>> NearestNeighbours(const std::vector<std::span<const double>>& pts,
                                                   size_t k) {
  const size_t m = pts.size();
  std::vector<std::vector<size_t>> nn(m);
  std::vector<std::pair<double, size_t>> dist(m);
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = 0; b < m; ++b) dist[b] = {a == b ? -1.0 : Dist2(pts[a], pts[b]), b};
    std::partial_sort(dist.begin(), dist.begin() + k + 1, dist.end());
    for (size_t r = 1; r <= k; ++r) nn[a].push_back(dist[r].second);
  }
  return nn;
}

}  // namespace

Dataset RandomUndersample(const Dataset& d, uint64_t seed) {
  Classes c = SplitClasses(d);
  Rng rng = MakeRng(seed, "undersample");
  std::vector<size_t> keep = Sample(c.maj_rows, c.min_rows.size(), rng);
  keep.insert(keep.end(), c.min_rows.begin(), c.min_rows.end());
  std::sort(keep.begin(), keep.end());
  return d.Select(keep);
}

Dataset Smote(const Dataset& d, const SmoteOptions& opts,
              std::vector<std::pair<size_t, size_t>>* origin) {
  Classes c = SplitClasses(d);
  const size_t m = c.min_rows.size();
  if (opts.k == 0 || m <= opts.k) {
    throw Error(ErrorCode::kInvalidArgument, "SMOTE needs more than k=" + std::to_string(opts.k) +
                                                 " minority rows, got " + std::to_string(m));
  }
  std::vector<std::span<const double>> pts;
  for (size_t r : c.min_rows) pts.push_back(d.row(r));
  const auto nn = NearestNeighbours(pts, opts.k);

  Dataset out = d;
  const size_t needed = c.maj_rows.size() - m;
  Rng rng = MakeRng(opts.seed, "smote");
  std::vector<double> row(d.cols());
  if (origin != nullptr) origin->clear();
  for (size_t s = 0; s < needed; ++s) {
    const size_t a = UniformIndex(rng, m);
    const size_t b = nn[a][UniformIndex(rng, opts.k)];
    const double t = UniformReal(rng, 0.0, 1.0);
    auto xa = d.row(c.min_rows[a]);
    auto xb = d.row(c.min_rows[b]);
    for (size_t j = 0; j < row.size(); ++j) row[j] = xa[j] + t * (xb[j] - xa[j]);
    out.AddRow(row, c.minority);
    if (origin != nullptr) origin->emplace_back(c.min_rows[a], c.min_rows[b]);
  }
  return out;
}

Dataset MakeRealDataset(const Dataset& imbalanced, uint64_t seed) {
  return RandomUndersample(imbalanced, seed);
}

Dataset MakeSyntheticDataset(const Dataset& imbalanced, uint64_t seed, size_t k) {
  const Classes c = SplitClasses(imbalanced);
  const size_t per_class = c.min_rows.size();
  const Dataset balanced = Smote(imbalanced, {.k = k, .seed = seed});
  std::vector<size_t> min_rows;
  std::vector<size_t> maj_rows;
  for (size_t i = 0; i < balanced.rows(); ++i) {
    (balanced.y[i] == c.minority ? min_rows : maj_rows).push_back(i);
  }
  Rng rng = MakeRng(seed, "synthetic/subsample");
  std::vector<size_t> keep = Sample(min_rows, per_class, rng);
  std::vector<size_t> maj = Sample(maj_rows, per_class, rng);
  keep.insert(keep.end(), maj.begin(), maj.end());
  std::sort(keep.begin(), keep.end());
  return balanced.Select(keep);
}

ExperimentSets MakeExperimentSets(const GeneratorConfig& config, uint64_t seed, size_t k) {
  const std::vector<int> labels = GenDdosLabels(config);
  std::vector<size_t> min_rows;
  std::vector<size_t> maj_rows;
  for (size_t i = 0; i < labels.size(); ++i) (labels[i] == 1 ? min_rows : maj_rows).push_back(i);
  // Label 1 is the minority unless the ratio makes it the larger class.
  if (min_rows.size() > maj_rows.size()) std::swap(min_rows, maj_rows);
  const int minority = labels[min_rows.front()];
  const size_t m = min_rows.size();
  if (k == 0 || m <= k) {
    throw Error(ErrorCode::kInvalidArgument, "SMOTE needs more than k=" + std::to_string(k) +
                                                 " minority rows, got " + std::to_string(m));
  }

  // Row selections, drawn exactly as the eager path draws them. Indices at
  // or above n_total name SMOTE rows in generation order.
  Rng under = MakeRng(seed, "undersample");
  const std::vector<size_t> real_maj = Sample(maj_rows, m, under);
  const size_t needed = maj_rows.size() - m;
  std::vector<size_t> pool = min_rows;
  pool.reserve(maj_rows.size());
  for (size_t s = 0; s < needed; ++s) pool.push_back(config.n_total + s);
  Rng sub = MakeRng(seed, "synthetic/subsample");
  const std::vector<size_t> syn_min = Sample(std::move(pool), m, sub);
  const std::vector<size_t> syn_maj = Sample(maj_rows, m, sub);

  std::vector<char> wanted(config.n_total, 0);
  for (size_t i : min_rows) wanted[i] = 1;
  for (size_t i : real_maj) wanted[i] = 1;
  for (size_t i : syn_maj) wanted[i] = 1;
  Dataset kept;
  kept.feature_names = DdosFeatureNames(config);
  std::unordered_map<size_t, size_t> at;  // original index -> row of `kept`
  ForEachDdosRow(config, labels, [&](size_t i, std::span<const double> row) {
    if (!wanted[i]) return;
    at.emplace(i, kept.rows());
    kept.AddRow(row, labels[i]);
  });

  std::vector<std::span<const double>> pts;
  for (size_t r : min_rows) pts.push_back(kept.row(at.at(r)));
  const auto nn = NearestNeighbours(pts, k);
  Dataset synth_rows;
  synth_rows.feature_names = kept.feature_names;
  std::unordered_map<size_t, size_t> synth_at;
  {
    size_t next = 0;  // next selected SMOTE index, in ascending order
    Rng rng = MakeRng(seed, "smote");
    std::vector<double> row(kept.cols());
    for (size_t s = 0; s < needed; ++s) {
      const size_t a = UniformIndex(rng, m);
      const size_t b = nn[a][UniformIndex(rng, k)];
      const double t = UniformReal(rng, 0.0, 1.0);
      while (next < syn_min.size() && syn_min[next] < config.n_total + s) ++next;
      if (next == syn_min.size() || syn_min[next] != config.n_total + s) continue;
      for (size_t j = 0; j < row.size(); ++j) row[j] = pts[a][j] + t * (pts[b][j] - pts[a][j]);
      synth_at.emplace(config.n_total + s, synth_rows.rows());
      synth_rows.AddRow(row, minority);
    }
  }

  auto assemble = [&](std::vector<size_t> idx) {
    std::sort(idx.begin(), idx.end());
    Dataset out;
    out.feature_names = kept.feature_names;
    for (size_t i : idx) {
      if (i < config.n_total) {
        out.AddRow(kept.row(at.at(i)), labels[i]);
      } else {
        out.AddRow(synth_rows.row(synth_at.at(i)), minority);
      }
    }
    return out;
  };
  std::vector<size_t> real_idx = real_maj;
  real_idx.insert(real_idx.end(), min_rows.begin(), min_rows.end());
  std::vector<size_t> syn_idx = syn_min;
  syn_idx.insert(syn_idx.end(), syn_maj.begin(), syn_maj.end());
  return {assemble(std::move(real_idx)), assemble(std::move(syn_idx))};
}

}  // namespace cti::pipeline
