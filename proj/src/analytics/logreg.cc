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


#include "cti/analytics/logreg.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <map>

#include "cti/common/error.h"

namespace cti::analytics {
namespace {

void CheckBinary(const Dataset& d) {
  for (int y : d.y) {
    if (y != 0 && y != 1) throw Error(ErrorCode::kInvalidArgument, "labels must be 0 or 1");
  }
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Adds sum over `rows` of (act(x.w) - y) x into g.
void AccumulateGradient(std::span<const double> w, const Dataset& d,
                        std::span<const size_t> rows, const Activation& act,
                        std::vector<double>& g) {
  for (size_t r : rows) {
    const auto x = d.row(r);
    const double e = act(Dot(x, w)) - d.y[r];
    for (size_t j = 0; j < x.size(); ++j) g[j] += e * x[j];
  }
}

uint64_t Mix(uint64_t h, uint64_t v) {
  h ^= v;
  return h * 0x100000001b3ull;
}

}  // namespace

Activation ExactActivation() { return [](double x) { return Sigmoid(x); }; }

Activation PolyActivation(const PolySigmoid& p) {
  return [p](double x) { return p(x); };
}

uint64_t ConfigHash(const TrainConfig& c) {
  uint64_t h = 0xcbf29ce484222325ull;
  h = Mix(h, std::bit_cast<uint64_t>(c.eta));
  h = Mix(h, static_cast<uint64_t>(c.iterations));
  h = Mix(h, c.batch);
  h = Mix(h, static_cast<uint64_t>(c.poly.degree));
  h = Mix(h, std::bit_cast<uint64_t>(c.poly.b_act));
  for (double a : c.poly.coeffs) h = Mix(h, std::bit_cast<uint64_t>(a));
  h = Mix(h, c.seed);
  h = Mix(h, std::bit_cast<uint64_t>(c.l2));
  return h;
}

TrainMode ParseTrainMode(std::string_view s) {
  if (s == "central") return TrainMode::kCentral;
  if (s == "local" || s == "federated-local-only") return TrainMode::kFederatedLocalOnly;
  if (s == "federated" || s == "federated-aggregated") return TrainMode::kFederatedAggregated;
  throw Error(ErrorCode::kInvalidArgument, "unknown training mode: " + std::string(s));
}

std::vector<double> LrGradient(std::span<const double> w, const Dataset& d,
                               const Activation& act) {
  if (w.size() != d.cols()) throw Error(ErrorCode::kInvalidArgument, "weight size mismatch");
  if (d.rows() == 0) throw Error(ErrorCode::kInvalidArgument, "empty batch");
  std::vector<size_t> all(d.rows());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<double> g(d.cols(), 0.0);
  AccumulateGradient(w, d, all, act, g);
  for (double& v : g) v /= static_cast<double>(d.rows());
  return g;
}

double LogLoss(std::span<const double> w, const Dataset& d) {
  double s = 0.0;
  for (size_t r = 0; r < d.rows(); ++r) {
    const double z = Dot(d.row(r), w);
    // log(1 + e^z) - y z, computed stably.
    const double softplus = z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
    s += softplus - d.y[r] * z;
  }
  return s / static_cast<double>(d.rows());
}

std::vector<std::vector<double>> LrTrainCleartext(const std::vector<Dataset>& nodes,
                                                  const TrainConfig& config, TrainMode mode,
                                                  const Activation& act) {
  if (nodes.empty()) throw Error(ErrorCode::kInvalidArgument, "no training data");
  if (mode == TrainMode::kCentral) {
    Dataset pooled = nodes[0];
    for (size_t i = 1; i < nodes.size(); ++i) pooled = pooled.Concat(nodes[i]);
    return LrTrainCleartext({pooled}, config, TrainMode::kFederatedAggregated, act);
  }
  if (mode == TrainMode::kFederatedLocalOnly) {
    std::vector<std::vector<double>> out;
    for (const Dataset& d : nodes) {
      out.push_back(LrTrainCleartext({d}, config, TrainMode::kFederatedAggregated, act)[0]);
    }
    return out;
  }
  size_t total = 0;
  std::map<int, size_t> classes;
  for (const Dataset& d : nodes) {
    CheckBinary(d);
    if (d.cols() != nodes[0].cols()) throw Error(ErrorCode::kInvalidArgument, "schema mismatch");
    total += d.rows();
    for (auto [c, n] : d.ClassCounts()) classes[c] += n;
  }
  if (total == 0) throw Error(ErrorCode::kInvalidArgument, "empty training set");
  if (classes.size() < 2) throw Error(ErrorCode::kInvalidArgument, "single-class training set");
  const size_t m = nodes[0].cols();
  std::vector<double> w(m, 0.0);
  std::vector<pipeline::Rng> rngs;
  for (size_t i = 0; i < nodes.size(); ++i) {
    rngs.push_back(pipeline::MakeRng(config.seed, "batch/" + std::to_string(i)));
  }
  for (int it = 0; it < config.iterations; ++it) {
    std::vector<double> g(m, 0.0);
    size_t used = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
      const size_t n = nodes[i].rows();
      std::vector<size_t> rows(n);
      for (size_t r = 0; r < n; ++r) rows[r] = r;
      if (config.batch > 0 && config.batch < n) {
        pipeline::Shuffle(rngs[i], rows);
        rows.resize(config.batch);
      }
      AccumulateGradient(w, nodes[i], rows, act, g);
      used += rows.size();
    }
    for (size_t j = 0; j < m; ++j) {
      w[j] -= config.eta * (g[j] / static_cast<double>(used) + config.l2 * w[j]);
    }
  }
  return {w};
}

std::vector<double> LrTrain(const Dataset& d, const TrainConfig& config,
                            const Activation& act) {
  return LrTrainCleartext({d}, config, TrainMode::kCentral, act)[0];
}

std::vector<double> PredictProba(std::span<const double> w, const Dataset& d,
                                 const Activation& act) {
  if (w.size() != d.cols()) throw Error(ErrorCode::kInvalidArgument, "weight size mismatch");
  std::vector<double> p(d.rows());
  for (size_t r = 0; r < d.rows(); ++r) p[r] = act(Dot(d.row(r), w));
  return p;
}

std::vector<int> PredictLabels(std::span<const double> w, const Dataset& d,
                               const Activation& act) {
  std::vector<int> out;
  for (double p : PredictProba(w, d, act)) out.push_back(p >= 0.5 ? 1 : 0);
  return out;
}

FeatureStats PooledStats(const std::vector<Dataset>& nodes) {
  if (nodes.empty()) throw Error(ErrorCode::kInvalidArgument, "no datasets");
  FeatureStats s;
  s.names = nodes[0].feature_names;
  const size_t m = s.names.size();
  std::vector<double> sum(m, 0.0), sq(m, 0.0);
  for (const Dataset& d : nodes) {
    if (d.feature_names != s.names) throw Error(ErrorCode::kInvalidArgument, "schema mismatch");
    for (size_t r = 0; r < d.rows(); ++r) {
      for (size_t j = 0; j < m; ++j) {
        sum[j] += d.row(r)[j];
        sq[j] += d.row(r)[j] * d.row(r)[j];
      }
    }
    s.count += d.rows();
  }
  if (s.count == 0) throw Error(ErrorCode::kInvalidArgument, "empty global dataset");
  const double n = static_cast<double>(s.count);
  for (size_t j = 0; j < m; ++j) {
    const double mu = sum[j] / n;
    const double sd = std::sqrt(std::max(0.0, sq[j] / n - mu * mu));
    s.mean.push_back(mu);
    s.std.push_back(sd);
    s.constant.push_back(sd < 1e-9);
  }
  return s;
}

Dataset Standardize(const Dataset& d, const FeatureStats& stats, bool add_intercept) {
  if (d.feature_names != stats.names) {
    throw Error(ErrorCode::kInvalidArgument, "statistics do not match the schema");
  }
  Dataset out;
  if (add_intercept) out.feature_names.push_back("intercept");
  std::vector<size_t> keep;
  for (size_t j = 0; j < stats.names.size(); ++j) {
    if (stats.constant[j]) continue;
    keep.push_back(j);
    out.feature_names.push_back(stats.names[j]);
  }
  std::vector<double> row;
  for (size_t r = 0; r < d.rows(); ++r) {
    row.clear();
    if (add_intercept) row.push_back(1.0);
    for (size_t j : keep) row.push_back((d.row(r)[j] - stats.mean[j]) / stats.std[j]);
    out.AddRow(row, d.y[r]);
  }
  return out;
}

}  // namespace cti::analytics
