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


#include "cti/net/topology.h"

#include <algorithm>
#include <deque>

#include "cti/common/error.h"

namespace cti::net {

TopologyKind ParseTopologyKind(std::string_view name) {
  if (name == "tree") return TopologyKind::kTree;
  if (name == "star") return TopologyKind::kStar;
  if (name == "full") return TopologyKind::kFull;
  throw Error(ErrorCode::kInvalidArgument, "unknown topology '" + std::string(name) + "'");
}

std::string_view TopologyKindName(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::kTree: return "tree";
    case TopologyKind::kStar: return "star";
    case TopologyKind::kFull: return "full";
  }
  return "?";
}

Topology Topology::Make(TopologyKind kind, size_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 1; i < n; ++i) {
    switch (kind) {
      case TopologyKind::kTree: edges.emplace_back((i - 1) / 2, i); break;
      case TopologyKind::kStar: edges.emplace_back(0, i); break;
      case TopologyKind::kFull:
        for (uint32_t j = 0; j < i; ++j) edges.emplace_back(j, i);
        break;
    }
  }
  return FromEdges(n, edges);
}

Topology Topology::FromEdges(size_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty topology");
  Topology t;
  t.adj_.resize(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n || a == b) {
      throw Error(ErrorCode::kInvalidArgument, "bad edge in topology");
    }
    t.adj_[a].push_back(b);
    t.adj_[b].push_back(a);
  }
  for (auto& v : t.adj_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return t;
}

bool Topology::Connected() const {
  std::vector<bool> seen(size(), false);
  std::deque<uint32_t> q{0};
  seen[0] = true;
  size_t count = 1;
  while (!q.empty()) {
    uint32_t u = q.front();
    q.pop_front();
    for (uint32_t v : adj_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        q.push_back(v);
      }
    }
  }
  return count == size();
}

SpanningTree BfsTree(const Topology& topo, uint32_t root) {
  const size_t n = topo.size();
  if (root >= n) throw Error(ErrorCode::kInvalidArgument, "root outside topology");
  SpanningTree tree;
  tree.root = root;
  tree.parent.assign(n, std::nullopt);
  tree.children.assign(n, {});
  std::vector<size_t> level(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<uint32_t> q{root};
  seen[root] = true;
  size_t count = 1;
  while (!q.empty()) {
    uint32_t u = q.front();
    q.pop_front();
    for (uint32_t v : topo.neighbors(u)) {
      if (seen[v]) continue;
      seen[v] = true;
      ++count;
      tree.parent[v] = u;
      tree.children[u].push_back(v);
      level[v] = level[u] + 1;
      tree.depth = std::max(tree.depth, level[v]);
      q.push_back(v);
    }
  }
  if (count != n) throw Error(ErrorCode::kInvalidArgument, "topology is disconnected");
  return tree;
}

}  // namespace cti::net
