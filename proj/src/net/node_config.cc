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


#include "cti/net/node_config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "cti/common/error.h"

namespace cti::net {
namespace {

class LineParser {
 public:
  LineParser(std::string_view s, int line) : s_(s), line_(line) {}

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, "config line " + std::to_string(line_) + ": " + what);
  }

  void SkipWs() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool AtEndOrComment() {
    SkipWs();
    return pos_ >= s_.size() || s_[pos_] == '#';
  }

  bool Eat(char c) {
    SkipWs();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Expect(char c) {
    if (!Eat(c)) Fail(std::string("expected '") + c + "'");
  }

  std::string Key() {
    SkipWs();
    if (pos_ < s_.size() && s_[pos_] == '"') return String();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
            s_[pos_] == '-')) {
      ++pos_;
    }
    if (start == pos_) Fail("expected key");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string String() {
    Expect('"');
    std::string out;
    while (true) {
      if (pos_ >= s_.size()) Fail("unterminated string");
      char c = s_[pos_++];
      if (c == '"') return out;
      if (c == '\\') {
        if (pos_ >= s_.size()) Fail("bad escape");
        char e = s_[pos_++];
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: Fail(std::string("unsupported escape \\") + e);
        }
      } else {
        out += c;
      }
    }
  }

  ConfigValue Value() {
    SkipWs();
    if (pos_ >= s_.size()) Fail("missing value");
    const char c = s_[pos_];
    if (c == '"') return String();
    if (c == '[') {
      ++pos_;
      std::vector<std::string> items;
      if (Eat(']')) return items;
      while (true) {
        items.push_back(String());
        if (Eat(']')) return items;
        Expect(',');
        if (Eat(']')) return items;  // trailing comma
      }
    }
    size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '#') ++pos_;
    std::string tok(s_.substr(start, pos_ - start));
    if (tok == "true") return true;
    if (tok == "false") return false;
    std::string digits = tok;
    digits.erase(std::remove(digits.begin(), digits.end(), '_'), digits.end());
    int64_t iv = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), iv);
    if (ec == std::errc() && p == digits.data() + digits.size()) return iv;
    double dv = 0;
    auto [p2, ec2] = std::from_chars(digits.data(), digits.data() + digits.size(), dv);
    if (ec2 == std::errc() && p2 == digits.data() + digits.size()) return dv;
    Fail("bad value '" + tok + "'");
  }

 private:
  std::string_view s_;
  int line_;
  size_t pos_ = 0;
};

template <class T>
const T& Get(const ConfigTable& t, const std::string& key, const T& fallback) {
  auto it = t.find(key);
  if (it == t.end()) return fallback;
  const T* v = std::get_if<T>(&it->second);
  if (v == nullptr) throw Error(ErrorCode::kInvalidArgument, "config field '" + key + "' has wrong type");
  return *v;
}

uint32_t ParseNodeId(const std::string& s) {
  uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw Error(ErrorCode::kInvalidArgument, "peer key '" + s + "' is not a node id");
  }
  return v;
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

ConfigDocument ParseConfigText(std::string_view text) {
  ConfigDocument doc;
  doc[""];
  std::string table;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;
    LineParser lp(line, line_no);
    if (lp.AtEndOrComment()) continue;
    if (lp.Eat('[')) {
      table = lp.Key();
      lp.Expect(']');
      if (doc.contains(table) && table != "") lp.Fail("duplicate table [" + table + "]");
      doc[table];
    } else {
      std::string key = lp.Key();
      lp.Expect('=');
      ConfigValue v = lp.Value();
      if (!doc[table].emplace(key, std::move(v)).second) lp.Fail("duplicate key '" + key + "'");
    }
    if (!lp.AtEndOrComment()) lp.Fail("trailing characters");
  }
  return doc;
}

bool NodeConfig::HasRole(Role r) const {
  return std::find(roles.begin(), roles.end(), r) != roles.end();
}

TokenTable NodeConfig::MakeTokenTable() const {
  TokenTable t;
  for (const auto& [token, rs] : tokens) t.Add(token, rs);
  return t;
}

NodeConfig ParseNodeConfig(std::string_view text) {
  const ConfigDocument doc = ParseConfigText(text);
  const ConfigTable& root = doc.at("");
  for (const auto& [table, _] : doc) {
    if (table != "" && table != "peers" && table != "tokens") {
      throw Error(ErrorCode::kInvalidArgument, "unknown config table [" + table + "]");
    }
  }
  static const std::set<std::string> kKnown = {"node_id", "listen", "topology", "roles", "preset",
                                               "latency_ms", "round_timeout_ms"};
  for (const auto& [k, _] : root) {
    if (!kKnown.contains(k)) throw Error(ErrorCode::kInvalidArgument, "unknown config key '" + k + "'");
  }
  NodeConfig cfg;
  if (!root.contains("node_id")) throw Error(ErrorCode::kInvalidArgument, "node_id is required");
  const int64_t id = Get<int64_t>(root, "node_id", 0);
  if (id < 0 || id > UINT32_MAX) throw Error(ErrorCode::kInvalidArgument, "node_id out of range");
  cfg.node_id = static_cast<uint32_t>(id);
  cfg.listen = Get<std::string>(root, "listen", "");
  cfg.topology = ParseTopologyKind(Get<std::string>(root, "topology", "tree"));
  for (const auto& r : Get<std::vector<std::string>>(root, "roles", {})) {
    cfg.roles.push_back(ParseRole(r));
  }
  cfg.preset = Get<std::string>(root, "preset", "toy");
  const int64_t lat = Get<int64_t>(root, "latency_ms", 0);
  const int64_t tmo = Get<int64_t>(root, "round_timeout_ms", 30000);
  if (lat < 0 || lat > 600000 || tmo <= 0 || tmo > 3600000) {
    throw Error(ErrorCode::kInvalidArgument, "latency_ms or round_timeout_ms out of range");
  }
  cfg.latency_ms = static_cast<int>(lat);
  cfg.round_timeout_ms = static_cast<int>(tmo);
  if (auto it = doc.find("peers"); it != doc.end()) {
    for (const auto& [k, v] : it->second) {
      const std::string* addr = std::get_if<std::string>(&v);
      if (addr == nullptr) throw Error(ErrorCode::kInvalidArgument, "peer address must be a string");
      const uint32_t pid = ParseNodeId(k);
      if (pid == cfg.node_id) throw Error(ErrorCode::kInvalidArgument, "node lists itself as a peer");
      cfg.peers[pid] = *addr;
    }
  }
  if (auto it = doc.find("tokens"); it != doc.end()) {
    for (const auto& [k, v] : it->second) {
      const auto* rs = std::get_if<std::vector<std::string>>(&v);
      if (rs == nullptr) throw Error(ErrorCode::kInvalidArgument, "token roles must be a string array");
      auto& dst = cfg.tokens[k];
      for (const auto& r : *rs) dst.push_back(ParseRole(r));
    }
  }
  return cfg;
}

NodeConfig LoadNodeConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseNodeConfig(ss.str());
}

std::string FormatNodeConfig(const NodeConfig& cfg) {
  std::ostringstream o;
  o << "node_id = " << cfg.node_id << "\n";
  o << "listen = " << Quote(cfg.listen) << "\n";
  o << "topology = " << Quote(std::string(TopologyKindName(cfg.topology))) << "\n";
  o << "roles = [";
  for (size_t i = 0; i < cfg.roles.size(); ++i) {
    o << (i ? ", " : "") << Quote(std::string(RoleName(cfg.roles[i])));
  }
  o << "]\n";
  o << "preset = " << Quote(cfg.preset) << "\n";
  o << "latency_ms = " << cfg.latency_ms << "\n";
  o << "round_timeout_ms = " << cfg.round_timeout_ms << "\n";
  o << "\n[peers]\n";
  for (const auto& [id, addr] : cfg.peers) o << id << " = " << Quote(addr) << "\n";
  o << "\n[tokens]\n";
  for (const auto& [tok, rs] : cfg.tokens) {
    o << Quote(tok) << " = [";
    for (size_t i = 0; i < rs.size(); ++i) o << (i ? ", " : "") << Quote(std::string(RoleName(rs[i])));
    o << "]\n";
  }
  return o.str();
}

void ValidateClusterConfigs(const std::vector<NodeConfig>& cfgs) {
  const size_t n = cfgs.size();
  std::set<uint32_t> ids;
  for (const auto& c : cfgs) {
    if (!ids.insert(c.node_id).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate node id " + std::to_string(c.node_id));
    }
    if (c.node_id >= n) throw Error(ErrorCode::kInvalidArgument, "node ids must be 0..n-1");
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (const auto& c : cfgs) {
    for (const auto& [p, _] : c.peers) {
      if (p >= n) throw Error(ErrorCode::kInvalidArgument, "peer " + std::to_string(p) + " unknown");
      edges.emplace_back(c.node_id, p);
    }
  }
  if (!Topology::FromEdges(n, edges).Connected()) {
    throw Error(ErrorCode::kInvalidArgument, "peer graph is disconnected");
  }
}

}  // namespace cti::net
