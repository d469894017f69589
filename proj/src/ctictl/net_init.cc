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


#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cti/analytics/secure.h"
#include "cti/ctictl/commands.h"
#include "cti/mhe/params.h"
#include "cti/mhe/serialize.h"
#include "cti/net/cluster.h"

namespace cti::ctictl {
namespace fs = std::filesystem;
namespace {

std::string Hex(std::span<const uint8_t> b) {
  static const char* kDigits = "0123456789abcdef";
  std::string s;
  for (uint8_t v : b) {
    s += kDigits[v >> 4];
    s += kDigits[v & 15];
  }
  return s;
}

mhe::SessionId SessionFromHex(const std::string& s) {
  mhe::SessionId id{};
  if (s.size() != 32) throw Error(ErrorCode::kParse, "session id must be 32 hex digits");
  for (size_t i = 0; i < 16; ++i) id[i] = static_cast<uint8_t>(std::stoi(s.substr(2 * i, 2), nullptr, 16));
  return id;
}

void WriteBytes(const fs::path& p, std::span<const uint8_t> b) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + p.string());
}

std::vector<uint8_t> ReadBytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void WriteText(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  out << s;
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + p.string());
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kParse:
      return kExitUsage;
    case ErrorCode::kAuth:
      return kExitAuth;
    case ErrorCode::kProtocol:
    case ErrorCode::kTimeout:
    case ErrorCode::kAborted:
    case ErrorCode::kParamsMismatch:
    case ErrorCode::kScaleMismatch:
    case ErrorCode::kHeadroom:
    case ErrorCode::kNotFound:
    case ErrorCode::kFailedPrecondition:
      return kExitProtocol;
    case ErrorCode::kIo:
      return kExitFailure;
  }
  return kExitFailure;
}

std::string Cluster::NodeDir(uint32_t id) const {
  return (fs::path(dir) / ("node" + std::to_string(id))).string();
}

NetInitResult NetInit(const NetInitOptions& opts) {
  if (opts.parties == 0) throw Error(ErrorCode::kInvalidArgument, "--parties must be at least 1");
  if (opts.out.empty()) throw Error(ErrorCode::kInvalidArgument, "--out is required");
  const mhe::RingParams params = mhe::GenParams(opts.preset);
  if (opts.parties > static_cast<size_t>(params.max_parties)) {
    throw Error(ErrorCode::kInvalidArgument, "preset " + opts.preset + " supports at most " +
                                                 std::to_string(params.max_parties) + " parties");
  }
  const fs::path out(opts.out);
  if (fs::exists(out) && !fs::is_empty(out) && !opts.force) {
    throw Error(ErrorCode::kInvalidArgument,
                out.string() + " is not empty; pass --force to overwrite");
  }
  fs::create_directories(out);

  mhe::Xof seeder(opts.seed, "net-init");
  mhe::SessionId session{};
  seeder.Read(session);
  NetInitResult res;
  res.token = opts.token;
  if (res.token.empty()) {
    std::array<uint8_t, 16> t{};
    seeder.Read(t);
    res.token = "q-" + Hex(t);
  }

  const mhe::ContextPtr ctx = mhe::Context::Make(params);
  struct NodeKeys {
    mhe::SecretKey sk;
    mhe::PublicKey pk;
    mhe::RelinKey rlk;
  };
  net::ClusterOptions o;
  o.nodes = opts.parties;
  o.session = session;
  o.round_timeout = std::chrono::seconds(600);
  const auto keys = net::RunSession<NodeKeys>(o, [&](net::Party& p) {
    mhe::Xof xof = seeder.Fork("party", p.id());
    analytics::MheKeys k = analytics::SetupKeys(p, *ctx, xof);
    return std::optional(NodeKeys{std::move(k.sk), std::move(k.pk), std::move(k.rlk)});
  });

  auto add = [&](const fs::path& p) { res.files.push_back(p.string()); };
  WriteBytes(out / "pk.bin", mhe::SerializePublicKey(*ctx, keys[0]->pk));
  add(out / "pk.bin");
  WriteBytes(out / "rlk.bin", mhe::SerializeRelinKey(*ctx, keys[0]->rlk));
  add(out / "rlk.bin");
  for (uint32_t i = 0; i < opts.parties; ++i) {
    const fs::path nd = out / ("node" + std::to_string(i));
    fs::create_directories(nd);
    WriteBytes(nd / "share.key", mhe::SerializeSecretKey(*ctx, keys[i]->sk));
    add(nd / "share.key");
    net::NodeConfig cfg;
    cfg.node_id = i;
    cfg.listen = "127.0.0.1:" + std::to_string(opts.base_port + static_cast<int>(i));
    for (uint32_t j = 0; j < opts.parties; ++j) {
      if (j != i) cfg.peers[j] = "127.0.0.1:" + std::to_string(opts.base_port + static_cast<int>(j));
    }
    cfg.roles = {net::Role::kProvider, net::Role::kCompute};
    if (i == 0) cfg.roles.push_back(net::Role::kQuerier);
    cfg.preset = opts.preset;
    cfg.tokens[res.token] = {net::Role::kQuerier};
    WriteText(nd / "node.toml", net::FormatNodeConfig(cfg));
    add(nd / "node.toml");
  }
  const nlohmann::json meta = {{"parties", opts.parties},
                               {"preset", opts.preset},
                               {"session", Hex(session)},
                               {"params_id", mhe::ParamsId(params)}};
  WriteText(out / "cluster.json", meta.dump(2) + "\n");
  add(out / "cluster.json");
  return res;
}

Cluster LoadCluster(const std::string& dir) {
  Cluster c;
  c.dir = dir;
  const fs::path root(dir);
  nlohmann::json meta;
  try {
    const auto text = ReadBytes(root / "cluster.json");
    meta = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("cluster.json: ") + e.what());
  }
  const auto parties = meta.at("parties").get<size_t>();
  const mhe::RingParams params = mhe::GenParams(meta.at("preset").get<std::string>());
  if (mhe::ParamsId(params) != meta.at("params_id").get<uint64_t>()) {
    throw Error(ErrorCode::kParamsMismatch, "cluster parameters differ from preset");
  }
  c.ctx = mhe::Context::Make(params);
  c.session = SessionFromHex(meta.at("session").get<std::string>());
  c.pk = mhe::DeserializePublicKey(*c.ctx, ReadBytes(root / "pk.bin"));
  c.rlk = mhe::DeserializeRelinKey(*c.ctx, ReadBytes(root / "rlk.bin"));
  for (uint32_t i = 0; i < parties; ++i) {
    c.configs.push_back(net::LoadNodeConfig(c.NodeDir(i) + "/node.toml"));
    c.shares.push_back(mhe::DeserializeSecretKey(*c.ctx, ReadBytes(c.NodeDir(i) + "/share.key")));
    if (c.configs.back().preset != meta.at("preset").get<std::string>()) {
      throw Error(ErrorCode::kParamsMismatch, "node " + std::to_string(i) + " uses another preset");
    }
  }
  net::ValidateClusterConfigs(c.configs);
  return c;
}

}  // namespace cti::ctictl
