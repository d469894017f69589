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
#include "cti/net/node_config.h"

namespace cti::net {
namespace {

constexpr char kSample[] = R"(# node 0 of a three-node tree
node_id = 0
listen = "127.0.0.1:7000"
topology = "tree"
roles = ["provider", "compute"]
preset = "toy"
latency_ms = 10   # test only
round_timeout_ms = 5_000

[peers]
1 = "127.0.0.1:7001"
2 = "127.0.0.1:7002"

[tokens]
"s3cret#1" = ["querier"]
)";

TEST(NodeConfigTest, ParsesAllFields) {
  const NodeConfig c = ParseNodeConfig(kSample);
  EXPECT_EQ(c.node_id, 0u);
  EXPECT_EQ(c.listen, "127.0.0.1:7000");
  EXPECT_EQ(c.topology, TopologyKind::kTree);
  EXPECT_EQ(c.roles, (std::vector<Role>{Role::kProvider, Role::kCompute}));
  EXPECT_EQ(c.preset, "toy");
  EXPECT_EQ(c.latency_ms, 10);
  EXPECT_EQ(c.round_timeout_ms, 5000);
  EXPECT_EQ(c.peers.size(), 2u);
  EXPECT_EQ(c.peers.at(2), "127.0.0.1:7002");
  EXPECT_TRUE(c.HasRole(Role::kCompute));
  EXPECT_FALSE(c.HasRole(Role::kQuerier));
  EXPECT_EQ(c.MakeTokenTable().Authorize("s3cret#1", Role::kQuerier).role, Role::kQuerier);
}

TEST(NodeConfigTest, FormatRoundTrips) {
  const NodeConfig c = ParseNodeConfig(kSample);
  const NodeConfig d = ParseNodeConfig(FormatNodeConfig(c));
  EXPECT_EQ(FormatNodeConfig(d), FormatNodeConfig(c));
  EXPECT_EQ(d.tokens, c.tokens);
  EXPECT_EQ(d.peers, c.peers);
}

TEST(NodeConfigTest, ValueTypes) {
  const ConfigDocument doc = ParseConfigText("a = 1\nb = -2.5\nc = true\nd = \"x\\\"y\"\ne = []\n");
  const ConfigTable& t = doc.at("");
  EXPECT_EQ(std::get<int64_t>(t.at("a")), 1);
  EXPECT_DOUBLE_EQ(std::get<double>(t.at("b")), -2.5);
  EXPECT_TRUE(std::get<bool>(t.at("c")));
  EXPECT_EQ(std::get<std::string>(t.at("d")), "x\"y");
  EXPECT_TRUE(std::get<std::vector<std::string>>(t.at("e")).empty());
}

TEST(NodeConfigTest, SyntaxErrorsAreParseErrors) {
  for (const char* bad : {"a = ", "a 1", "a = \"open", "[t\n", "a = 1 2", "a = 1\na = 2",
                          "= 3", "a = [\"x\" \"y\"]"}) {
    try {
      ParseConfigText(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(NodeConfigTest, SemanticErrors) {
  EXPECT_THROW(ParseNodeConfig("listen = \"a:1\"\n"), Error);  // no node_id
  EXPECT_THROW(ParseNodeConfig("node_id = 0\ntopology = \"ring\"\n"), Error);
  EXPECT_THROW(ParseNodeConfig("node_id = 0\nroles = [\"root\"]\n"), Error);
  EXPECT_THROW(ParseNodeConfig("node_id = 0\nbogus = 1\n"), Error);
  EXPECT_THROW(ParseNodeConfig("node_id = 0\n[peers]\n0 = \"a:1\"\n"), Error);
  EXPECT_THROW(ParseNodeConfig("node_id = \"zero\"\n"), Error);
}

TEST(NodeConfigTest, ClusterValidation) {
  std::vector<NodeConfig> cfgs(3);
  for (uint32_t i = 0; i < 3; ++i) cfgs[i].node_id = i;
  cfgs[0].peers = {{1, "h:1"}, {2, "h:2"}};
  EXPECT_NO_THROW(ValidateClusterConfigs(cfgs));
  cfgs[0].peers = {{1, "h:1"}};
  EXPECT_THROW(ValidateClusterConfigs(cfgs), Error);  // node 2 unreachable
  cfgs[2].node_id = 1;
  EXPECT_THROW(ValidateClusterConfigs(cfgs), Error);  // duplicate id
}

}  // namespace
}  // namespace cti::net
