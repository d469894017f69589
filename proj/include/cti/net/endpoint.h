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


#ifndef CTI_NET_ENDPOINT_H_
#define CTI_NET_ENDPOINT_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cti/net/topology.h"
#include "cti/net/transport.h"

namespace cti::net {

using Bytes = std::vector<uint8_t>;

// One node's view of a session: its transport, the session id, the
// communication topology and the round timeout. Collective helpers run
// over the breadth-first spanning tree rooted at the designated node.
class Party {
 public:
  Party(Transport& transport, SessionId session, Topology topology,
        std::chrono::milliseconds round_timeout = std::chrono::seconds(30));

  uint32_t id() const { return transport_.self(); }
  size_t size() const { return topology_.size(); }
  const SessionId& session() const { return session_; }
  const Topology& topology() const { return topology_; }

  // Subsequent round labels are prefixed with "it<k>/"; -1 clears.
  void SetIteration(int k) { iteration_ = k; }
  std::string Label(std::string_view round) const;

  void Send(uint32_t to, MsgType type, std::string_view round, Bytes payload);
  Bytes Receive(uint32_t from, std::string_view round);

  // Tree reduction toward `root`: every node folds its children's values
  // (ascending id) into its own and forwards the result to its parent.
  // Only the root gets a value.
  std::optional<Bytes> Reduce(uint32_t root, std::string_view round, MsgType type,
                              Bytes local,
                              const std::function<Bytes(Bytes acc, const Bytes& child)>& fold);
  // Root value pushed down the tree; every node returns it.
  Bytes Broadcast(uint32_t root, std::string_view round, MsgType type, Bytes value);

  // Best-effort abort notice to every other node.
  void Abort() noexcept;

 private:
  const SpanningTree& Tree(uint32_t root);

  Transport& transport_;
  SessionId session_;
  Topology topology_;
  std::chrono::milliseconds round_timeout_;
  int iteration_ = -1;
  std::map<uint32_t, SpanningTree> trees_;
};

}  // namespace cti::net

#endif  // CTI_NET_ENDPOINT_H_
