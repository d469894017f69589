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


#ifndef CTI_PIPELINE_RESAMPLE_H_
#define CTI_PIPELINE_RESAMPLE_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cti/pipeline/dataset.h"
#include "cti/pipeline/generator.h"

namespace cti::pipeline {

// Keeps every minority row and a random subset of the majority class of
// the same size. Retained rows keep their input order. Requires exactly two
// classes.
Dataset RandomUndersample(const Dataset& d, uint64_t seed);

struct SmoteOptions {
  size_t k = 5;
  uint64_t seed = 1;
};

// Appends synthetic minority rows x + t (x_nn - x), t ~ U(0,1), with x a
// random minority row and x_nn one of its k nearest minority neighbours
// (Euclidean, ties by index), until both classes have the same count.
// `origin`, if given, receives for each synthetic row the pair of input row
// indices it was interpolated between. Throws when the minority count is
// not larger than k.
Dataset Smote(const Dataset& d, const SmoteOptions& opts,
              std::vector<std::pair<size_t, size_t>>* origin = nullptr);

// All rare events plus an equal random subsample of common events.
Dataset MakeRealDataset(const Dataset& imbalanced, uint64_t seed);
// SMOTE to a 50/50 split, then a class-wise balanced random subsample down
// to the size of MakeRealDataset's output.
Dataset MakeSyntheticDataset(const Dataset& imbalanced, uint64_t seed, size_t k = 5);

struct ExperimentSets {
  Dataset real;
  Dataset synthetic;
};

// MakeRealDataset and MakeSyntheticDataset of GenDdosLike(config), row for
// row, without holding the imbalanced set or the full SMOTE output. Only the
// minority and the sampled majority rows are kept.
ExperimentSets MakeExperimentSets(const GeneratorConfig& config, uint64_t seed, size_t k = 5);

}  // namespace cti::pipeline

#endif  // CTI_PIPELINE_RESAMPLE_H_
