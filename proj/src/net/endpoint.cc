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


#include "cti/net/endpoint.h"

#include "cti/common/error.h"

namespace cti::net {

Party::Party(Transport& transport, SessionId session, Topology topology,
             std::chrono::milliseconds round_timeout)
    : transport_(transport),
      session_(session),
      topology_(std::move(topology)),
      round_timeout_(round_timeout) {
  if (transport_.self() >= topology_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "node id outside topology");
  }
}

std::string Party::Label(std::string_view round) const {
  if (iteration_ < 0) return std::string(round);
  return "it" + std::to_string(iteration_) + "/" + std::string(round);
}

void Party::Send(uint32_t to, MsgType type, std::string_view round, Bytes payload) {
  Frame f;
  f.type = type;
  f.session = session_;
  f.label = Label(round);
  f.payload = std::move(payload);
  transport_.Send(to, std::move(f));
}

Bytes Party::Receive(uint32_t from, std::string_view round) {
  Frame f = transport_.Receive(from, session_, Label(round), Clock::now() + round_timeout_);
  return std::move(f.payload);
}

const SpanningTree& Party::Tree(uint32_t root) {
  auto it = trees_.find(root);
  if (it == trees_.end()) it = trees_.emplace(root, BfsTree(topology_, root)).first;
  return it->second;
}

std::optional<Bytes> Party::Reduce(
    uint32_t root, std::string_view round, MsgType type, Bytes local,
    const std::function<Bytes(Bytes acc, const Bytes& child)>& fold) {
  const SpanningTree& tree = Tree(root);
  Bytes acc = std::move(local);
  for (uint32_t child : tree.children[id()]) acc = fold(std::move(acc), Receive(child, round));
  if (id() == root) return acc;
  Send(*tree.parent[id()], type, round, std::move(acc));
  return std::nullopt;
}

Bytes Party::Broadcast(uint32_t root, std::string_view round, MsgType type, Bytes value) {
  const SpanningTree& tree = Tree(root);
  if (id() != root) value = Receive(*tree.parent[id()], round);
  for (uint32_t child : tree.children[id()]) Send(child, type, round, value);
  return value;
}

void Party::Abort() noexcept {
  for (uint32_t to = 0; to < topology_.size(); ++to) {
    if (to == id()) continue;
    try {
      Send(to, MsgType::kAbort, "abort", {});
    } catch (...) {
      // Unreachable peers simply time out.
    }
  }
}

}  // namespace cti::net
