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

#include "cti/common/error.h"
#include "cti/mhe/params.h"
#include "cti/net/meter.h"
#include "cti/net/transport.h"

namespace cti::net {
namespace {

TEST(MeterTest, CiphertextSizesFromTheBandwidthEstimate) {
  EXPECT_EQ(CiphertextPayloadBytes(16384, 1), 262144u);
  EXPECT_EQ(CiphertextPayloadBytes(65536, 30), 31457280u);
  EXPECT_EQ(CiphertextPayloadBytes(16384, 1), mhe::PolyPayloadBytes(16384, 1, 1));
  EXPECT_DOUBLE_EQ(EstimatedBandwidthBytes(10, 8, 262144), 10 * 8 * 262144 * 1.5);
}

TEST(MeterTest, IterationTags) {
  EXPECT_EQ(IterationOfLabel("it0/grad"), 0);
  EXPECT_EQ(IterationOfLabel("it12/ref/1"), 12);
  EXPECT_EQ(IterationOfLabel("ckg/1"), -1);
  EXPECT_EQ(IterationOfLabel("it/x"), -1);
  EXPECT_EQ(IterationOfLabel("it3"), -1);
  EXPECT_EQ(IterationOfLabel("itx/"), -1);
}

TEST(MeterTest, ReportReconcilesWithTheFrameLog) {
  Meter meter;
  InMemoryNetwork net(3, &meter);
  SessionId s{};
  s[0] = 9;
  uint64_t expected = 0;
  uint64_t expected_payload = 0;
  const std::vector<std::tuple<uint32_t, uint32_t, std::string, size_t>> sends = {
      {0, 1, "it0/a", 10}, {1, 2, "it0/a", 20}, {2, 0, "it1/b", 0}, {0, 2, "setup", 7}};
  for (const auto& [from, to, label, n] : sends) {
    Frame f;
    f.type = MsgType::kShare;
    f.session = s;
    f.label = label;
    f.payload.assign(n, 1);
    // Oracle: header layout is 4+2+2+16+4+1 + label + 8 + payload.
    expected += 37 + label.size() + n;
    expected_payload += n;
    net.node(from).Send(to, f);
  }
  const BandwidthReport r = meter.Report(s);
  EXPECT_EQ(r.frames, 4u);
  EXPECT_EQ(r.total_wire_bytes, expected);
  EXPECT_EQ(r.total_payload_bytes, expected_payload);
  uint64_t sent = 0;
  uint64_t received = 0;
  for (const auto& [id, nb] : r.nodes) {
    uint64_t round_sent = 0;
    for (const auto& [label, c] : nb.per_round) round_sent += c.sent;
    uint64_t iter_sent = 0;
    for (const auto& [it, c] : nb.per_iteration) iter_sent += c.sent;
    EXPECT_EQ(round_sent, nb.total.sent);
    EXPECT_EQ(iter_sent, nb.total.sent);
    sent += nb.total.sent;
    received += nb.total.received;
  }
  EXPECT_EQ(sent, expected);
  EXPECT_EQ(received, expected);
  EXPECT_EQ(r.IterationBytes(0), (37 + 5 + 10) + (37 + 5 + 20u));
  EXPECT_EQ(r.IterationBytes(1), 37 + 5u);
}

TEST(MeterTest, UnknownSessionIsAnError) {
  Meter meter;
  SessionId s{};
  try {
    meter.Report(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
  meter.OpenSession(s);
  EXPECT_EQ(meter.Report(s).frames, 0u);
}

}  // namespace
}  // namespace cti::net
