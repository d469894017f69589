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


#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cti/common/error.h"
#include "cti/pipeline/misp.h"

namespace cti::pipeline {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kParse, "MISP export: " + what);
}

// Integer from a JSON number or a numeric string.
int64_t AsInt(const json& v, const std::string& key) {
  if (v.is_number_integer()) return v.get<int64_t>();
  if (v.is_number()) return static_cast<int64_t>(v.get<double>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      size_t used = 0;
      const int64_t n = std::stoll(s, &used);
      if (used == s.size()) return n;
    } catch (const std::exception&) {
    }
  }
  if (v.is_boolean()) return v.get<bool>() ? 1 : 0;
  Bad("field '" + key + "' is not an integer");
}

bool AsBool(const json& v, const std::string& key) {
  if (v.is_boolean()) return v.get<bool>();
  return AsInt(v, key) != 0;
}

std::string AsString(const json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  Bad("field '" + key + "' is not a string");
}

template <class T, class F>
void Field(const json& obj, const char* key, T& out, F convert, std::vector<std::string>* defaulted) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    if (defaulted != nullptr) defaulted->push_back(key);
    return;
  }
  out = static_cast<T>(convert(*it, key));
}

MispAttribute ParseAttribute(const json& a) {
  if (!a.is_object()) Bad("attribute is not an object");
  MispAttribute attr;
  Field(a, "type", attr.type, AsString, nullptr);
  Field(a, "category", attr.category, AsString, nullptr);
  Field(a, "value", attr.value, AsString, nullptr);
  Field(a, "comment", attr.comment, AsString, nullptr);
  Field(a, "to_ids", attr.to_ids, AsBool, nullptr);
  Field(a, "timestamp", attr.timestamp, AsInt, nullptr);
  return attr;
}

MispEvent ParseEvent(const json& e) {
  if (!e.is_object()) Bad("Event is not an object");
  MispEvent ev;
  auto* d = &ev.defaulted;
  Field(e, "id", ev.id, AsString, d);
  Field(e, "date", ev.date, AsString, d);
  Field(e, "timestamp", ev.timestamp, AsInt, d);
  Field(e, "threat_level_id", ev.threat_level_id, AsInt, d);
  Field(e, "analysis", ev.analysis, AsInt, d);
  Field(e, "published", ev.published, AsBool, d);
  Field(e, "distribution", ev.distribution, AsInt, d);
  Field(e, "sharing_group_id", ev.sharing_group_id, AsInt, d);
  Field(e, "info", ev.info, AsString, d);
  if (ev.threat_level_id < 1 || ev.threat_level_id > 4) {
    Bad("threat_level_id " + std::to_string(ev.threat_level_id) + " outside 1..4");
  }
  if (auto it = e.find("Attribute"); it != e.end() && !it->is_null()) {
    if (!it->is_array()) Bad("Attribute is not an array");
    for (const json& a : *it) ev.attributes.push_back(ParseAttribute(a));
  }
  // Recorded as exported; not reconciled with the attribute list.
  ev.attribute_count = static_cast<int>(ev.attributes.size());
  Field(e, "attribute_count", ev.attribute_count, AsInt, d);
  return ev;
}

}  // namespace

std::vector<MispEvent> ParseMispExport(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Bad(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("response")) Bad("missing 'response' envelope");
  const json& resp = doc["response"];
  if (!resp.is_array()) Bad("'response' is not an array");
  std::vector<MispEvent> events;
  for (const json& item : resp) {
    if (!item.is_object() || !item.contains("Event")) Bad("response item without 'Event'");
    events.push_back(ParseEvent(item["Event"]));
  }
  return events;
}

std::vector<MispEvent> LoadMispExport(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseMispExport(ss.str());
}

}  // namespace cti::pipeline
