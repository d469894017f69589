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


#ifndef CTI_PIPELINE_SPLIT_H_
#define CTI_PIPELINE_SPLIT_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cti/pipeline/dataset.h"

namespace cti::pipeline {

struct NodeSplit {
  std::vector<Dataset> nodes;  // training partitions
  Dataset test;                // global held-out set
};

// Shuffles, keeps round(train_frac * n) rows for training and partitions
// them into n_nodes parts whose sizes differ by at most one.
NodeSplit PartitionAndSplit(const Dataset& d, size_t n_nodes, double train_frac, uint64_t seed);

// Shuffled split without partitioning.
struct TrainTest {
  Dataset train;
  Dataset test;
};
TrainTest TrainTestSplit(const Dataset& d, double train_frac, uint64_t seed);

// Contiguous near-equal parts, in row order.
std::vector<Dataset> Partition(const Dataset& d, size_t n_nodes);

}  // namespace cti::pipeline

#endif  // CTI_PIPELINE_SPLIT_H_
