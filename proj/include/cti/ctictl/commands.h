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


#ifndef CTI_CTICTL_COMMANDS_H_
#define CTI_CTICTL_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cti/common/error.h"
#include "cti/mhe/keys.h"
#include "cti/mhe/ring.h"
#include "cti/mhe/xof.h"
#include "cti/net/node_config.h"

namespace cti::ctictl {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitProtocol = 3,
  kExitAuth = 4,
};

int ExitCodeFor(ErrorCode code);

struct NetInitOptions {
  size_t parties = 0;
  std::string preset = "toy";
  std::string out;
  bool force = false;
  uint64_t seed = 1;
  // Querier token written into every node's token table; generated from
  // the seed when empty.
  std::string token;
  int base_port = 7400;
};

struct NetInitResult {
  std::string token;
  std::vector<std::string> files;
};

// Runs the key ceremony with in-process parties and writes, under `out`:
// cluster.json, pk.bin, rlk.bin and node<i>/{share.key,node.toml}.
NetInitResult NetInit(const NetInitOptions& opts);

// Key material and configs written by NetInit.
struct Cluster {
  std::string dir;
  mhe::ContextPtr ctx;
  mhe::SessionId session{};
  std::vector<net::NodeConfig> configs;
  std::vector<mhe::SecretKey> shares;
  mhe::PublicKey pk;
  mhe::RelinKey rlk;
  std::string NodeDir(uint32_t id) const;
};

Cluster LoadCluster(const std::string& dir);

struct QueryOptions {
  std::string config;  // querier node config
  std::string token;
  // Cluster directory; defaults to the parent of the config's directory.
  std::string cluster;
  // Per-node inputs in node order (MISP exports for stats, CSV for train);
  // a single CSV for predict, held by the querier.
  std::vector<std::string> data;
  std::vector<std::string> taxonomy;
  std::string from;
  std::string to;
  std::string out;
  int iterations = 20;
  double eta = 0.1;
  std::set<uint32_t> offline;
  int round_timeout_ms = 0;  // 0 keeps the node config value
  uint64_t seed = 1;
};

// Histogram CSV ("entry,count") written to `out` at the querier only.
void QueryStats(const QueryOptions& opts);
// Encrypted model (plus public standardization statistics) stored in every
// node directory as model.json and model.ct.
void QueryTrain(const QueryOptions& opts);
// Probability CSV ("row,probability") written to `out` at the querier only.
void QueryPredict(const QueryOptions& opts);

}  // namespace cti::ctictl

#endif  // CTI_CTICTL_COMMANDS_H_
