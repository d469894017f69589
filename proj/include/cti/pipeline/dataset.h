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


#ifndef CTI_PIPELINE_DATASET_H_
#define CTI_PIPELINE_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cti::pipeline {

// Dense n x m feature matrix (row-major) with integer labels.
struct Dataset {
  std::vector<std::string> feature_names;
  std::vector<double> x;
  std::vector<int> y;

  size_t rows() const { return y.size(); }
  size_t cols() const { return feature_names.size(); }
  std::span<const double> row(size_t i) const { return {x.data() + i * cols(), cols()}; }
  std::span<double> row(size_t i) { return {x.data() + i * cols(), cols()}; }

  void AddRow(std::span<const double> values, int label);
  std::map<int, size_t> ClassCounts() const;
  std::vector<double> ColumnMeans() const;
  // Rows in the given order (duplicates allowed).
  Dataset Select(std::span<const size_t> indices) const;
  Dataset Concat(const Dataset& other) const;
  // Throws kInvalidArgument on shape problems or NaN entries.
  void Validate() const;
  bool operator==(const Dataset&) const = default;
};

// {rows, cols, class_counts, column_means, seed}
std::string ManifestJson(const Dataset& d, uint64_t seed);

// Random streams split from one master seed by a name, so that
// independent steps do not perturb each other. Engine output is fully
// specified by the standard; distributions come from Boost.Random for
// identical results on every platform.
using Rng = std::mt19937_64;
Rng MakeRng(uint64_t seed, std::string_view stream);

double UniformReal(Rng& rng, double lo, double hi);
double Normal(Rng& rng, double mean, double stddev);
// Uniform integer in [0, n).
size_t UniformIndex(Rng& rng, size_t n);
void Shuffle(Rng& rng, std::vector<size_t>& v);

}  // namespace cti::pipeline

#endif  // CTI_PIPELINE_DATASET_H_
