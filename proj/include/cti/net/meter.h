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


#ifndef CTI_NET_METER_H_
#define CTI_NET_METER_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cti/net/frame.h"

namespace cti::net {

// One frame as seen on the wire.
struct FrameRecord {
  SessionId session{};
  uint32_t from = 0;
  uint32_t to = 0;
  MsgType type = MsgType::kControl;
  std::string label;
  int iteration = -1;
  uint64_t wire_bytes = 0;
  uint64_t payload_bytes = 0;
  uint64_t digest = 0;  // FNV-1a of the encoded frame
  std::vector<uint8_t> bytes;  // whole frame, only when capturing
};

struct ByteCount {
  uint64_t sent = 0;
  uint64_t received = 0;
  bool operator==(const ByteCount&) const = default;
};

struct NodeBandwidth {
  std::map<std::string, ByteCount> per_round;
  std::map<int, ByteCount> per_iteration;
  ByteCount total;
};

struct BandwidthReport {
  SessionId session{};
  std::map<uint32_t, NodeBandwidth> nodes;
  uint64_t total_wire_bytes = 0;
  uint64_t total_payload_bytes = 0;
  size_t frames = 0;

  // Total bytes sent in one iteration, across all nodes.
  uint64_t IterationBytes(int iteration) const;
  // Sent bytes per node and iteration, divided by a ciphertext size: the
  // measured counterpart of the 1.5 factor in the bandwidth estimate.
  double MeasuredFactor(size_t n_nodes, int iterations, uint64_t ciphertext_bytes) const;
};

// Bytes of a degree-1 ciphertext payload: 2 polynomials of n x limbs words.
uint64_t CiphertextPayloadBytes(size_t n, size_t limbs);
// #iterations x #nodes x ciphertext size x 1.5.
double EstimatedBandwidthBytes(int iterations, size_t n_nodes, uint64_t ciphertext_bytes);

// Iteration tag of a round label: "it<k>/..." gives k, anything else -1.
int IterationOfLabel(std::string_view label);

uint64_t Fnv1a(const uint8_t* data, size_t n);

// Thread-safe frame log shared by the transports of one network.
class Meter {
 public:
  // Marks a session as known so that a session without traffic reports
  // zeros instead of kNotFound.
  void OpenSession(const SessionId& session);
  void Record(FrameRecord rec);
  // Keep full frame bytes in the log (tests and audits).
  void set_capture(bool on) { capture_ = on; }
  bool capture() const { return capture_; }
  BandwidthReport Report(const SessionId& session) const;
  // Frames sent by `node`, in send order.
  std::vector<FrameRecord> Transcript(uint32_t node) const;
  std::vector<FrameRecord> All() const;
  void Clear();

 private:
  mutable std::mutex mu_;
  std::vector<FrameRecord> log_;
  std::set<SessionId> sessions_;
  std::atomic<bool> capture_{false};
};

}  // namespace cti::net

#endif  // CTI_NET_METER_H_
