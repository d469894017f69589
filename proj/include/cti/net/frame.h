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


#ifndef CTI_NET_FRAME_H_
#define CTI_NET_FRAME_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cti/mhe/xof.h"

namespace cti::net {

using mhe::SessionId;

enum class MsgType : uint16_t {
  kControl = 1,
  kShare = 2,
  kCiphertext = 3,
  kAbort = 4,
};

bool IsKnownMsgType(uint16_t type);

inline constexpr uint16_t kFrameVersion = 1;
// Fixed header bytes before the label: magic, version, type, session, sender,
// label length.
inline constexpr size_t kFramePrefixBytes = 4 + 2 + 2 + 16 + 4 + 1;
inline constexpr uint64_t kMaxPayloadBytes = uint64_t{1} << 32;

struct Frame {
  MsgType type = MsgType::kControl;
  SessionId session{};
  uint32_t sender = 0;
  std::string label;  // round label, at most 255 ASCII bytes
  std::vector<uint8_t> payload;

  // Header plus payload bytes on the wire.
  size_t WireSize() const { return kFramePrefixBytes + label.size() + 8 + payload.size(); }
  bool operator==(const Frame&) const = default;
};

std::vector<uint8_t> EncodeFrame(const Frame& frame);
// Decodes exactly one frame from the start of `bytes`; trailing bytes are
// reported through `consumed` or rejected when it is null.
Frame DecodeFrame(std::span<const uint8_t> bytes, size_t* consumed = nullptr);
// Stream form: `read_exact` fills the whole buffer or throws.
Frame ReadFrame(const std::function<void(uint8_t*, size_t)>& read_exact);

}  // namespace cti::net

#endif  // CTI_NET_FRAME_H_
