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


#include <gtest/gtest.h>

#include <fstream>
#include <iterator>

#include "cti/common/error.h"
#include "cti/net/frame.h"

namespace cti::net {
namespace {

std::vector<uint8_t> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Frame ReferenceFrame() {
  Frame f;
  f.type = MsgType::kShare;
  for (int i = 0; i < 16; ++i) f.session[i] = static_cast<uint8_t>(i);
  f.sender = 7;
  f.label = "ref/1";
  f.payload = {1, 2, 3};
  return f;
}

TEST(FrameTest, MatchesGoldenLayout) {
  const auto golden = ReadFile(std::string(CTI_TEST_DATA_DIR) + "/golden_frame.bin");
  ASSERT_EQ(golden.size(), 45u);
  EXPECT_EQ(EncodeFrame(ReferenceFrame()), golden);
  EXPECT_EQ(DecodeFrame(golden), ReferenceFrame());
  EXPECT_EQ(ReferenceFrame().WireSize(), golden.size());
}

TEST(FrameTest, RoundTripsEmptyAndLargePayloads) {
  Frame f = ReferenceFrame();
  f.label.clear();
  f.payload.clear();
  EXPECT_EQ(DecodeFrame(EncodeFrame(f)), f);
  f.label = std::string(255, 'x');
  f.payload.assign(100000, 0xab);
  EXPECT_EQ(DecodeFrame(EncodeFrame(f)), f);
}

TEST(FrameTest, RejectsUnknownTypes) {
  auto bytes = EncodeFrame(ReferenceFrame());
  for (uint16_t t : {0, 5, 0xffff}) {
    bytes[6] = static_cast<uint8_t>(t);
    bytes[7] = static_cast<uint8_t>(t >> 8);
    try {
      DecodeFrame(bytes);
      FAIL() << "type " << t << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kProtocol);
    }
  }
  Frame bad = ReferenceFrame();
  bad.type = static_cast<MsgType>(9);
  EXPECT_THROW(EncodeFrame(bad), Error);
}

TEST(FrameTest, RejectsMalformedInput) {
  const auto good = EncodeFrame(ReferenceFrame());
  auto bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_THROW(DecodeFrame(bad_magic), Error);
  auto bad_version = good;
  bad_version[4] = 2;
  EXPECT_THROW(DecodeFrame(bad_version), Error);
  for (size_t cut : {0ul, 10ul, 29ul, 35ul, 44ul}) {
    EXPECT_THROW(DecodeFrame(std::span(good).first(cut)), Error) << cut;
  }
  auto trailing = good;
  trailing.push_back(0);
  EXPECT_THROW(DecodeFrame(trailing), Error);
  size_t used = 0;
  EXPECT_EQ(DecodeFrame(trailing, &used), ReferenceFrame());
  EXPECT_EQ(used, good.size());
  // Payload length larger than what follows.
  auto lying = good;
  lying[34] = 200;
  EXPECT_THROW(DecodeFrame(lying), Error);
  Frame long_label = ReferenceFrame();
  long_label.label = std::string(256, 'a');
  EXPECT_THROW(EncodeFrame(long_label), Error);
}

TEST(FrameTest, WhitelistIsTheFourMessageTypes) {
  for (uint16_t t = 0; t < 64; ++t) EXPECT_EQ(IsKnownMsgType(t), t >= 1 && t <= 4) << t;
}

}  // namespace
}  // namespace cti::net
