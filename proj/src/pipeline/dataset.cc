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


#include "cti/pipeline/dataset.h"

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>
#include <cmath>
#include <nlohmann/json.hpp>

#include "cti/common/error.h"

namespace cti::pipeline {

void Dataset::AddRow(std::span<const double> values, int label) {
  if (values.size() != cols()) {
    throw Error(ErrorCode::kInvalidArgument, "row width " + std::to_string(values.size()) +
                                                 " != " + std::to_string(cols()));
  }
  x.insert(x.end(), values.begin(), values.end());
  y.push_back(label);
}

std::map<int, size_t> Dataset::ClassCounts() const {
  std::map<int, size_t> c;
  for (int v : y) ++c[v];
  return c;
}

std::vector<double> Dataset::ColumnMeans() const {
  std::vector<double> m(cols(), 0.0);
  if (rows() == 0) return m;
  for (size_t i = 0; i < rows(); ++i) {
    auto r = row(i);
    for (size_t j = 0; j < cols(); ++j) m[j] += r[j];
  }
  for (double& v : m) v /= static_cast<double>(rows());
  return m;
}

Dataset Dataset::Select(std::span<const size_t> indices) const {
  Dataset out;
  out.feature_names = feature_names;
  out.x.reserve(indices.size() * cols());
  out.y.reserve(indices.size());
  for (size_t i : indices) {
    if (i >= rows()) throw Error(ErrorCode::kInvalidArgument, "row index out of range");
    out.AddRow(row(i), y[i]);
  }
  return out;
}

Dataset Dataset::Concat(const Dataset& other) const {
  if (other.feature_names != feature_names) {
    throw Error(ErrorCode::kInvalidArgument, "datasets have different columns");
  }
  Dataset out = *this;
  out.x.insert(out.x.end(), other.x.begin(), other.x.end());
  out.y.insert(out.y.end(), other.y.begin(), other.y.end());
  return out;
}

void Dataset::Validate() const {
  if (x.size() != rows() * cols()) throw Error(ErrorCode::kInvalidArgument, "matrix shape mismatch");
  for (double v : x) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite feature value");
  }
}

std::string ManifestJson(const Dataset& d, uint64_t seed) {
  nlohmann::json j;
  j["rows"] = d.rows();
  j["cols"] = d.cols();
  nlohmann::json counts = nlohmann::json::object();
  for (auto [label, n] : d.ClassCounts()) counts[std::to_string(label)] = n;
  j["class_counts"] = counts;
  j["column_means"] = d.ColumnMeans();
  j["seed"] = seed;
  return j.dump(2);
}

Rng MakeRng(uint64_t seed, std::string_view stream) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : stream) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(h), static_cast<uint32_t>(h >> 32)};
  return Rng(seq);
}

double UniformReal(Rng& rng, double lo, double hi) {
  return boost::random::uniform_real_distribution<double>(lo, hi)(rng);
}

double Normal(Rng& rng, double mean, double stddev) {
  return boost::random::normal_distribution<double>(mean, stddev)(rng);
}

size_t UniformIndex(Rng& rng, size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  return boost::random::uniform_int_distribution<size_t>(0, n - 1)(rng);
}

void Shuffle(Rng& rng, std::vector<size_t>& v) {
  // Fisher-Yates with a portable index draw.
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[UniformIndex(rng, i)]);
}

}  // namespace cti::pipeline
