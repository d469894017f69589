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


#ifndef CTI_NET_TRANSPORT_H_
#define CTI_NET_TRANSPORT_H_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

#include "cti/net/frame.h"
#include "cti/net/meter.h"

namespace cti::net {

using Clock = std::chrono::steady_clock;

// Inbound queue of one node. Frames are matched by (sender, session, label)
// so rounds can arrive in any order.
class Mailbox {
 public:
  void Push(Frame frame, Clock::time_point deliver_at = Clock::time_point{});
  // Blocks until a matching frame is deliverable. An abort frame for the
  // session raises kAborted; the deadline raises kTimeout.
  Frame Pop(uint32_t from, const SessionId& session, std::string_view label,
            Clock::time_point deadline);
  void Close();

 private:
  struct Item {
    Clock::time_point deliver_at;
    Frame frame;
  };
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Item> items_;
  bool closed_ = false;
};

class Transport {
 public:
  virtual ~Transport() = default;
  virtual uint32_t self() const = 0;
  // The sender field is overwritten with self().
  virtual void Send(uint32_t to, Frame frame) = 0;
  virtual Frame Receive(uint32_t from, const SessionId& session, std::string_view label,
                        Clock::time_point deadline) = 0;
};

// Records one outbound frame in `meter` (if any) and returns its encoding.
std::vector<uint8_t> EncodeAndMeter(Meter* meter, uint32_t to, const Frame& frame);

// Deterministic in-process network. Every frame is encoded and decoded, so
// the bytes metered are the bytes a socket would carry. Delivery of each
// frame is delayed by the injected latency.
class InMemoryNetwork {
 public:
  explicit InMemoryNetwork(size_t n, Meter* meter = nullptr,
                           std::chrono::milliseconds latency = std::chrono::milliseconds(0));
  ~InMemoryNetwork();

  size_t size() const { return nodes_.size(); }
  Transport& node(uint32_t id) { return *nodes_.at(id); }

 private:
  class Endpoint;
  Meter* meter_;
  std::chrono::milliseconds latency_;
  std::vector<std::unique_ptr<Mailbox>> boxes_;
  std::vector<std::unique_ptr<Transport>> nodes_;
};

}  // namespace cti::net

#endif  // CTI_NET_TRANSPORT_H_
