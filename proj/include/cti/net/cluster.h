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


#ifndef CTI_NET_CLUSTER_H_
#define CTI_NET_CLUSTER_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "cti/net/endpoint.h"
#include "cti/net/meter.h"
#include "cti/net/topology.h"

namespace cti::net {

enum class TransportKind { kInMemory, kTcp };

struct ClusterOptions {
  size_t nodes = 1;
  TopologyKind topology = TopologyKind::kTree;
  TransportKind transport = TransportKind::kInMemory;
  SessionId session{};
  std::chrono::milliseconds round_timeout{30000};
  std::chrono::milliseconds latency{0};  // in-memory only
  std::set<uint32_t> offline;            // nodes that never start
  Meter* meter = nullptr;
};

// Runs `body` once per online node, each on its own thread with its own
// Party. If any node fails, the failure is broadcast as an abort and the
// root cause is rethrown after all threads finish.
void RunSpmd(const ClusterOptions& options, const std::function<void(Party&)>& body);

// Session wrapper: results are released only when every node succeeded.
// Nodes that are not designated recipients return nullopt.
template <class T>
std::vector<std::optional<T>> RunSession(const ClusterOptions& options,
                                         const std::function<std::optional<T>(Party&)>& body) {
  std::vector<std::optional<T>> staged(options.nodes);
  RunSpmd(options, [&](Party& p) { staged[p.id()] = body(p); });
  return staged;
}

}  // namespace cti::net

#endif  // CTI_NET_CLUSTER_H_
