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


#include "cti/net/transport.h"

#include <algorithm>

#include "cti/common/error.h"

namespace cti::net {

void Mailbox::Push(Frame frame, Clock::time_point deliver_at) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    items_.push_back({deliver_at, std::move(frame)});
  }
  cv_.notify_all();
}

Frame Mailbox::Pop(uint32_t from, const SessionId& session, std::string_view label,
                   Clock::time_point deadline) {
  std::unique_lock<std::mutex> lock(mu_);
  while (true) {
    if (closed_) throw Error(ErrorCode::kIo, "mailbox closed");
    const Clock::time_point now = Clock::now();
    Clock::time_point wake = deadline;
    for (auto it = items_.begin(); it != items_.end(); ++it) {
      const Frame& f = it->frame;
      if (f.session != session) continue;
      if (f.type == MsgType::kAbort && it->deliver_at <= now) {
        throw Error(ErrorCode::kAborted, "by node " + std::to_string(f.sender));
      }
      if (f.sender != from || f.label != label) continue;
      if (it->deliver_at <= now) {
        Frame out = std::move(it->frame);
        items_.erase(it);
        return out;
      }
      wake = std::min(wake, it->deliver_at);
    }
    if (now >= deadline) {
      throw Error(ErrorCode::kTimeout, "no '" + std::string(label) + "' from node " +
                                           std::to_string(from) + " before deadline");
    }
    cv_.wait_until(lock, wake);
  }
}

void Mailbox::Close() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    closed_ = true;
  }
  cv_.notify_all();
}

std::vector<uint8_t> EncodeAndMeter(Meter* meter, uint32_t to, const Frame& frame) {
  std::vector<uint8_t> bytes = EncodeFrame(frame);
  if (meter != nullptr) {
    meter->Record({.session = frame.session,
                   .from = frame.sender,
                   .to = to,
                   .type = frame.type,
                   .label = frame.label,
                   .iteration = IterationOfLabel(frame.label),
                   .wire_bytes = bytes.size(),
                   .payload_bytes = frame.payload.size(),
                   .digest = Fnv1a(bytes.data(), bytes.size()),
                   .bytes = meter->capture() ? bytes : std::vector<uint8_t>{}});
  }
  return bytes;
}

class InMemoryNetwork::Endpoint : public Transport {
 public:
  Endpoint(InMemoryNetwork* net, uint32_t id) : net_(net), id_(id) {}

  uint32_t self() const override { return id_; }

  void Send(uint32_t to, Frame frame) override {
    if (to >= net_->boxes_.size() || to == id_) {
      throw Error(ErrorCode::kInvalidArgument, "bad destination " + std::to_string(to));
    }
    frame.sender = id_;
    const std::vector<uint8_t> bytes = EncodeAndMeter(net_->meter_, to, frame);
    net_->boxes_[to]->Push(DecodeFrame(bytes), Clock::now() + net_->latency_);
  }

  Frame Receive(uint32_t from, const SessionId& session, std::string_view label,
                Clock::time_point deadline) override {
    return net_->boxes_[id_]->Pop(from, session, label, deadline);
  }

 private:
  InMemoryNetwork* net_;
  uint32_t id_;
};

InMemoryNetwork::InMemoryNetwork(size_t n, Meter* meter, std::chrono::milliseconds latency)
    : meter_(meter), latency_(latency) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty network");
  for (size_t i = 0; i < n; ++i) {
    boxes_.push_back(std::make_unique<Mailbox>());
    nodes_.push_back(std::make_unique<Endpoint>(this, static_cast<uint32_t>(i)));
  }
}

InMemoryNetwork::~InMemoryNetwork() {
  for (auto& b : boxes_) b->Close();
}

}  // namespace cti::net
