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


#include "cti/net/meter.h"

#include "cti/common/error.h"

namespace cti::net {

uint64_t BandwidthReport::IterationBytes(int iteration) const {
  uint64_t total = 0;
  for (const auto& [id, node] : nodes) {
    auto it = node.per_iteration.find(iteration);
    if (it != node.per_iteration.end()) total += it->second.sent;
  }
  return total;
}

double BandwidthReport::MeasuredFactor(size_t n_nodes, int iterations,
                                       uint64_t ciphertext_bytes) const {
  if (n_nodes == 0 || iterations <= 0 || ciphertext_bytes == 0) return 0.0;
  uint64_t sent = 0;
  for (const auto& [id, node] : nodes) {
    for (const auto& [it, bytes] : node.per_iteration) {
      if (it >= 0) sent += bytes.sent;
    }
  }
  return static_cast<double>(sent) /
         (static_cast<double>(n_nodes) * iterations * static_cast<double>(ciphertext_bytes));
}

uint64_t CiphertextPayloadBytes(size_t n, size_t limbs) {
  return static_cast<uint64_t>(n) * limbs * 2 * 8;
}

double EstimatedBandwidthBytes(int iterations, size_t n_nodes, uint64_t ciphertext_bytes) {
  return static_cast<double>(iterations) * static_cast<double>(n_nodes) *
         static_cast<double>(ciphertext_bytes) * 1.5;
}

int IterationOfLabel(std::string_view label) {
  if (label.size() < 4 || label.substr(0, 2) != "it") return -1;
  int k = 0;
  size_t i = 2;
  for (; i < label.size() && label[i] >= '0' && label[i] <= '9'; ++i) {
    if (k > 100000000) return -1;
    k = k * 10 + (label[i] - '0');
  }
  if (i == 2 || i >= label.size() || label[i] != '/') return -1;
  return k;
}

uint64_t Fnv1a(const uint8_t* data, size_t n) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

void Meter::OpenSession(const SessionId& session) {
  std::lock_guard<std::mutex> lock(mu_);
  sessions_.insert(session);
}

void Meter::Record(FrameRecord rec) {
  std::lock_guard<std::mutex> lock(mu_);
  sessions_.insert(rec.session);
  log_.push_back(std::move(rec));
}

BandwidthReport Meter::Report(const SessionId& session) const {
  std::lock_guard<std::mutex> lock(mu_);
  BandwidthReport r;
  r.session = session;
  for (const FrameRecord& f : log_) {
    if (f.session != session) continue;
    ++r.frames;
    r.total_wire_bytes += f.wire_bytes;
    r.total_payload_bytes += f.payload_bytes;
    NodeBandwidth& src = r.nodes[f.from];
    NodeBandwidth& dst = r.nodes[f.to];
    src.per_round[f.label].sent += f.wire_bytes;
    dst.per_round[f.label].received += f.wire_bytes;
    src.per_iteration[f.iteration].sent += f.wire_bytes;
    dst.per_iteration[f.iteration].received += f.wire_bytes;
    src.total.sent += f.wire_bytes;
    dst.total.received += f.wire_bytes;
  }
  if (!sessions_.contains(session)) throw Error(ErrorCode::kNotFound, "no traffic recorded for session");
  return r;
}

std::vector<FrameRecord> Meter::Transcript(uint32_t node) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<FrameRecord> out;
  for (const FrameRecord& f : log_) {
    if (f.from == node) out.push_back(f);
  }
  return out;
}

std::vector<FrameRecord> Meter::All() const {
  std::lock_guard<std::mutex> lock(mu_);
  return log_;
}

void Meter::Clear() {
  std::lock_guard<std::mutex> lock(mu_);
  log_.clear();
  sessions_.clear();
}

}  // namespace cti::net
