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


#ifndef CTI_PIPELINE_MISP_H_
#define CTI_PIPELINE_MISP_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cti/pipeline/dataset.h"

namespace cti::pipeline {

struct MispAttribute {
  std::string type;
  std::string category;
  std::string value;
  std::string comment;
  bool to_ids = false;
  int64_t timestamp = 0;  // unix seconds
};

struct MispEvent {
  std::string id;
  std::string date;  // YYYY-MM-DD
  int64_t timestamp = 0;
  int threat_level_id = 4;
  int analysis = 0;
  bool published = false;
  int distribution = 0;
  int sharing_group_id = 0;
  int attribute_count = 0;
  std::string info;
  std::vector<MispAttribute> attributes;
  // Optional fields that were absent and took their default.
  std::vector<std::string> defaulted;
};

// Parses {"response":[{"Event":{..., "Attribute":[...]}}, ...]}. Numbers may
// be JSON numbers or numeric strings, as MISP emits both. Unknown fields are
// ignored. Throws kParse on malformed JSON, a missing envelope or a threat
// level outside 1..4.
std::vector<MispEvent> ParseMispExport(std::string_view json);
std::vector<MispEvent> LoadMispExport(const std::string& path);

// Column recipe for threat-level features.
struct FeatureSpec {
  // Case-insensitive substrings of the event info: column "info_<word>".
  std::vector<std::string> info_keywords;
  // Case-insensitive substrings of the event info or attribute comment.
  std::vector<std::string> text_keywords;
  // Top-level domains checked against the attribute host: "dot<tld>".
  std::vector<std::string> domain_suffixes;
  // File extensions that make an attribute "executable".
  std::vector<std::string> executable_extensions;
  // Categories one-hot encoded in lexicographic order; others map to none.
  std::vector<std::string> categories;

  static FeatureSpec Default();
};

// One row per attribute, labelled with its event's threat level (1..4).
// Columns: attribute_year/hour/week, event_y/h/week, https, executable,
// dot<tld>..., virustotal, text keywords, has_comment, info_<word>...,
// published, analysis, attribute_count, distribution, sharing_group_id,
// category=<name>.... Throws kInvalidArgument for an empty event list.
Dataset ExtractThreatFeatures(const std::vector<MispEvent>& events, const FeatureSpec& spec);

// ISO-8601 week number (1..53) of a civil date.
int IsoWeek(int year, unsigned month, unsigned day);

}  // namespace cti::pipeline

#endif  // CTI_PIPELINE_MISP_H_
