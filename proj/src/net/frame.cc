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


#include "cti/net/frame.h"

#include <algorithm>
#include <cstring>

#include "cti/common/error.h"

namespace cti::net {
namespace {

void PutU16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void PutU32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void PutU64(std::vector<uint8_t>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint64_t GetLe(const uint8_t* p, int bytes) {
  uint64_t v = 0;
  for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kProtocol, "bad frame: " + what);
}

// Parses the fixed prefix; returns the label length.
size_t ParsePrefix(const uint8_t* p, Frame& f) {
  if (std::memcmp(p, "CTI1", 4) != 0) Bad("magic");
  if (GetLe(p + 4, 2) != kFrameVersion) Bad("version");
  const auto type = static_cast<uint16_t>(GetLe(p + 6, 2));
  if (!IsKnownMsgType(type)) Bad("unknown message type " + std::to_string(type));
  f.type = static_cast<MsgType>(type);
  std::copy(p + 8, p + 24, f.session.begin());
  f.sender = static_cast<uint32_t>(GetLe(p + 24, 4));
  return p[28];
}

}  // namespace

bool IsKnownMsgType(uint16_t type) { return type >= 1 && type <= 4; }

std::vector<uint8_t> EncodeFrame(const Frame& frame) {
  if (!IsKnownMsgType(static_cast<uint16_t>(frame.type))) Bad("unknown message type");
  if (frame.label.size() > 255) Bad("label longer than 255 bytes");
  if (frame.payload.size() > kMaxPayloadBytes) Bad("payload too large");
  std::vector<uint8_t> out;
  out.reserve(frame.WireSize());
  for (char c : std::string_view("CTI1")) out.push_back(static_cast<uint8_t>(c));
  PutU16(out, kFrameVersion);
  PutU16(out, static_cast<uint16_t>(frame.type));
  out.insert(out.end(), frame.session.begin(), frame.session.end());
  PutU32(out, frame.sender);
  out.push_back(static_cast<uint8_t>(frame.label.size()));
  out.insert(out.end(), frame.label.begin(), frame.label.end());
  PutU64(out, frame.payload.size());
  out.insert(out.end(), frame.payload.begin(), frame.payload.end());
  return out;
}

Frame DecodeFrame(std::span<const uint8_t> bytes, size_t* consumed) {
  size_t pos = 0;
  Frame f = ReadFrame([&](uint8_t* dst, size_t n) {
    if (bytes.size() - pos < n) Bad("truncated");
    std::memcpy(dst, bytes.data() + pos, n);
    pos += n;
  });
  if (consumed != nullptr) {
    *consumed = pos;
  } else if (pos != bytes.size()) {
    Bad("trailing bytes");
  }
  return f;
}

Frame ReadFrame(const std::function<void(uint8_t*, size_t)>& read_exact) {
  Frame f;
  uint8_t prefix[kFramePrefixBytes];
  read_exact(prefix, sizeof(prefix));
  const size_t label_len = ParsePrefix(prefix, f);
  f.label.resize(label_len);
  if (label_len > 0) read_exact(reinterpret_cast<uint8_t*>(f.label.data()), label_len);
  uint8_t len[8];
  read_exact(len, 8);
  const uint64_t n = GetLe(len, 8);
  if (n > kMaxPayloadBytes) Bad("payload length " + std::to_string(n));
  f.payload.resize(n);
  if (n > 0) read_exact(f.payload.data(), n);
  return f;
}

}  // namespace cti::net
