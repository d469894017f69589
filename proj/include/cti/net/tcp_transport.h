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


#ifndef CTI_NET_TCP_TRANSPORT_H_
#define CTI_NET_TCP_TRANSPORT_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "cti/net/transport.h"

namespace cti::net {

struct HostPort {
  std::string host;
  uint16_t port = 0;
};

// "host:port"; throws kInvalidArgument.
HostPort ParseHostPort(const std::string& addr);

// Blocking TCP transport. One listener thread accepts peers; each inbound
// connection gets a reader thread that decodes frames into the mailbox.
// Outbound connections are opened lazily and retried until the deadline
// given by `connect_timeout`.
class TcpTransport : public Transport {
 public:
  TcpTransport(uint32_t self, const std::string& listen_addr, Meter* meter = nullptr,
               std::chrono::milliseconds connect_timeout = std::chrono::seconds(10));
  ~TcpTransport() override;
  TcpTransport(const TcpTransport&) = delete;
  TcpTransport& operator=(const TcpTransport&) = delete;

  // Port actually bound (useful with port 0).
  uint16_t port() const;
  void SetPeer(uint32_t id, const std::string& addr);
  void Shutdown();

  uint32_t self() const override;
  void Send(uint32_t to, Frame frame) override;
  Frame Receive(uint32_t from, const SessionId& session, std::string_view label,
                Clock::time_point deadline) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cti::net

#endif  // CTI_NET_TCP_TRANSPORT_H_
