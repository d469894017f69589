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


#include "cti/net/cluster.h"

#include <exception>
#include <memory>
#include <thread>

#include "cti/common/error.h"
#include "cti/net/tcp_transport.h"
#include "cti/net/transport.h"

namespace cti::net {
namespace {

// Prefers the failure that started the cascade over timeouts and aborts it
// caused elsewhere.
int Rank(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::kAborted) return 2;
    if (err.code() == ErrorCode::kTimeout) return 1;
    return 0;
  } catch (...) {
    return 0;
  }
}

}  // namespace

void RunSpmd(const ClusterOptions& options, const std::function<void(Party&)>& body) {
  if (options.nodes == 0) throw Error(ErrorCode::kInvalidArgument, "no nodes");
  const Topology topo = Topology::Make(options.topology, options.nodes);
  if (options.meter != nullptr) options.meter->OpenSession(options.session);

  std::unique_ptr<InMemoryNetwork> mem;
  std::vector<std::unique_ptr<TcpTransport>> tcp;
  std::vector<Transport*> transports(options.nodes);
  if (options.transport == TransportKind::kInMemory) {
    mem = std::make_unique<InMemoryNetwork>(options.nodes, options.meter, options.latency);
    for (uint32_t i = 0; i < options.nodes; ++i) transports[i] = &mem->node(i);
  } else {
    for (uint32_t i = 0; i < options.nodes; ++i) {
      tcp.push_back(std::make_unique<TcpTransport>(i, "127.0.0.1:0", options.meter,
                                                   options.round_timeout));
      transports[i] = tcp.back().get();
    }
    for (uint32_t i = 0; i < options.nodes; ++i) {
      for (uint32_t j = 0; j < options.nodes; ++j) {
        if (i != j) tcp[i]->SetPeer(j, "127.0.0.1:" + std::to_string(tcp[j]->port()));
      }
    }
  }

  std::vector<std::exception_ptr> errors(options.nodes);
  std::vector<std::thread> threads;
  for (uint32_t i = 0; i < options.nodes; ++i) {
    if (options.offline.contains(i)) continue;
    threads.emplace_back([&, i] {
      Party party(*transports[i], options.session, topo, options.round_timeout);
      try {
        body(party);
      } catch (...) {
        errors[i] = std::current_exception();
        party.Abort();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& t : tcp) t->Shutdown();

  std::exception_ptr first;
  for (const auto& e : errors) {
    if (e && (!first || Rank(e) < Rank(first))) first = e;
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace cti::net
