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


#include "cti/pipeline/split.h"

#include <cmath>
#include <numeric>

#include "cti/common/error.h"

namespace cti::pipeline {

TrainTest TrainTestSplit(const Dataset& d, double train_frac, uint64_t seed) {
  if (!(train_frac > 0.0 && train_frac <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "train fraction must be in (0, 1]");
  }
  std::vector<size_t> idx(d.rows());
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng = MakeRng(seed, "split");
  Shuffle(rng, idx);
  const auto n_train = static_cast<size_t>(std::llround(train_frac * static_cast<double>(d.rows())));
  TrainTest tt;
  tt.train = d.Select(std::span(idx).first(n_train));
  tt.test = d.Select(std::span(idx).subspan(n_train));
  return tt;
}

std::vector<Dataset> Partition(const Dataset& d, size_t n_nodes) {
  if (n_nodes == 0) throw Error(ErrorCode::kInvalidArgument, "n_nodes must be positive");
  if (d.rows() < n_nodes) {
    throw Error(ErrorCode::kInvalidArgument, "fewer rows than nodes");
  }
  std::vector<Dataset> parts;
  const size_t base = d.rows() / n_nodes;
  const size_t extra = d.rows() % n_nodes;
  size_t start = 0;
  for (size_t k = 0; k < n_nodes; ++k) {
    const size_t len = base + (k < extra ? 1 : 0);
    std::vector<size_t> idx(len);
    std::iota(idx.begin(), idx.end(), start);
    parts.push_back(d.Select(idx));
    start += len;
  }
  return parts;
}

NodeSplit PartitionAndSplit(const Dataset& d, size_t n_nodes, double train_frac, uint64_t seed) {
  if (n_nodes == 0) throw Error(ErrorCode::kInvalidArgument, "n_nodes must be positive");
  if (d.rows() < n_nodes) throw Error(ErrorCode::kInvalidArgument, "fewer rows than nodes");
  TrainTest tt = TrainTestSplit(d, train_frac, seed);
  NodeSplit out;
  out.nodes = Partition(tt.train, n_nodes);
  out.test = std::move(tt.test);
  return out;
}

}  // namespace cti::pipeline
