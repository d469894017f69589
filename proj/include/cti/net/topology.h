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


#ifndef CTI_NET_TOPOLOGY_H_
#define CTI_NET_TOPOLOGY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cti::net {

enum class TopologyKind { kTree, kStar, kFull };

TopologyKind ParseTopologyKind(std::string_view name);
std::string_view TopologyKindName(TopologyKind kind);

// Undirected communication graph over nodes 0..n-1.
class Topology {
 public:
  // kTree: binary heap layout (parent of i is (i-1)/2). kStar: hub 0.
  // kFull: complete graph.
  static Topology Make(TopologyKind kind, size_t n);
  static Topology FromEdges(size_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges);

  size_t size() const { return adj_.size(); }
  const std::vector<uint32_t>& neighbors(uint32_t node) const { return adj_.at(node); }
  bool Connected() const;

 private:
  std::vector<std::vector<uint32_t>> adj_;
};

// Rooted spanning tree used for aggregation and broadcast.
struct SpanningTree {
  uint32_t root = 0;
  std::vector<std::optional<uint32_t>> parent;
  std::vector<std::vector<uint32_t>> children;  // ascending ids
  size_t depth = 0;
};

// Breadth-first tree from `root`, neighbors visited in ascending order.
// Throws kInvalidArgument when the graph is disconnected.
SpanningTree BfsTree(const Topology& topo, uint32_t root);

}  // namespace cti::net

#endif  // CTI_NET_TOPOLOGY_H_
