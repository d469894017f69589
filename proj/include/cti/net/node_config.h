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


#ifndef CTI_NET_NODE_CONFIG_H_
#define CTI_NET_NODE_CONFIG_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cti/net/auth.h"
#include "cti/net/topology.h"

namespace cti::net {

// A small TOML subset: comments, [table] headers, and key = value lines
// where value is a basic string, integer, float, boolean or a single-line
// array of strings. Keys are bare or quoted.
using ConfigValue = std::variant<std::string, int64_t, double, bool, std::vector<std::string>>;
using ConfigTable = std::map<std::string, ConfigValue>;
using ConfigDocument = std::map<std::string, ConfigTable>;  // "" is the root table

ConfigDocument ParseConfigText(std::string_view text);

struct NodeConfig {
  uint32_t node_id = 0;
  std::string listen;
  std::map<uint32_t, std::string> peers;
  TopologyKind topology = TopologyKind::kTree;
  std::vector<Role> roles;
  std::map<std::string, std::vector<Role>> tokens;
  std::string preset = "toy";
  int latency_ms = 0;
  int round_timeout_ms = 30000;

  bool HasRole(Role r) const;
  TokenTable MakeTokenTable() const;
};

// Throws kParse on syntax errors and kInvalidArgument on bad field values.
NodeConfig ParseNodeConfig(std::string_view text);
NodeConfig LoadNodeConfig(const std::string& path);
std::string FormatNodeConfig(const NodeConfig& cfg);

// Node ids unique, peers cover 0..n-1 except self, topology connected.
void ValidateClusterConfigs(const std::vector<NodeConfig>& cfgs);

}  // namespace cti::net

#endif  // CTI_NET_NODE_CONFIG_H_
