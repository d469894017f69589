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


#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>

#include "cti/common/error.h"
#include "cti/pipeline/misp.h"

namespace cti::pipeline {
namespace {

namespace chr = std::chrono;

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool Contains(const std::string& haystack_lower, std::string_view needle) {
  return haystack_lower.find(Lower(needle)) != std::string::npos;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

struct Civil {
  int year = 1970;
  unsigned month = 1;
  unsigned day = 1;
  int hour = 0;
};

Civil FromUnix(int64_t t) {
  const chr::sys_seconds tp{chr::seconds(t)};
  const chr::sys_days days = chr::floor<chr::days>(tp);
  const chr::year_month_day ymd{days};
  Civil c;
  c.year = static_cast<int>(ymd.year());
  c.month = static_cast<unsigned>(ymd.month());
  c.day = static_cast<unsigned>(ymd.day());
  c.hour = static_cast<int>(chr::duration_cast<chr::hours>(tp - days).count());
  return c;
}

// "YYYY-MM-DD"; falls back to the timestamp's date.
Civil EventDate(const MispEvent& e) {
  Civil c = FromUnix(e.timestamp);
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  if (std::sscanf(e.date.c_str(), "%d-%u-%u", &y, &m, &d) == 3) {
    const chr::year_month_day ymd{chr::year(y), chr::month(m), chr::day(d)};
    if (ymd.ok()) {
      c.year = y;
      c.month = m;
      c.day = d;
    }
  }
  return c;
}

// Host part of a URL or bare domain, lowercased.
std::string Host(const std::string& value_lower) {
  std::string_view v = value_lower;
  if (size_t p = v.find("://"); p != std::string_view::npos) v.remove_prefix(p + 3);
  size_t end = v.find_first_of("/?#:");
  return std::string(v.substr(0, end));
}

std::string PathPart(const std::string& value_lower) {
  std::string_view v = value_lower;
  if (size_t p = v.find("://"); p != std::string_view::npos) {
    v.remove_prefix(p + 3);
    size_t slash = v.find('/');
    v = slash == std::string_view::npos ? std::string_view() : v.substr(slash);
  }
  return std::string(v.substr(0, v.find_first_of("?#")));
}

}  // namespace

int IsoWeek(int year, unsigned month, unsigned day) {
  const chr::sys_days d{chr::year_month_day{chr::year(year), chr::month(month), chr::day(day)}};
  const unsigned iso_wd = chr::weekday{d}.iso_encoding();  // Mon=1..Sun=7
  const chr::sys_days thursday = d - chr::days(iso_wd - 1) + chr::days(3);
  const chr::year iso_year = chr::year_month_day{thursday}.year();
  const chr::sys_days jan1{iso_year / chr::January / 1};
  return static_cast<int>((thursday - jan1).count() / 7 + 1);
}

FeatureSpec FeatureSpec::Default() {
  FeatureSpec s;
  s.info_keywords = {"malware", "IOC",      "report",    "delta",      "MD5",      "endpoint",
                     "Trickbot", "Cryptolaemus", "Campaign", "Emotet", "Incremental",
                     "Ransomware", "Malspam", "attacks",   "Phishing",   "activity"};
  s.text_keywords = {"MSB", "Malicious", "China", "Intel"};
  s.domain_suffixes = {"com", "org", "pl"};
  s.executable_extensions = {".exe", ".dll", ".scr", ".bat", ".ps1", ".msi", ".jar", ".apk", ".bin", ".vbs"};
  s.categories = {"Antivirus detection",  "Artifacts dropped",     "Attribution",
                  "External analysis",    "Financial fraud",       "Internal reference",
                  "Network activity",     "Other",                 "Payload delivery",
                  "Payload installation", "Payload type",          "Persistence mechanism",
                  "Person",               "Social network",        "Support Tool",
                  "Targeting data"};
  return s;
}

Dataset ExtractThreatFeatures(const std::vector<MispEvent>& events, const FeatureSpec& spec) {
  if (events.empty()) throw Error(ErrorCode::kInvalidArgument, "no events to extract");
  std::vector<std::string> cats = spec.categories;
  std::sort(cats.begin(), cats.end());
  cats.erase(std::unique(cats.begin(), cats.end()), cats.end());

  Dataset d;
  auto& names = d.feature_names;
  names = {"attribute_year", "attribute_hour", "attribute_week", "event_y", "event_h", "event_week",
           "https", "executable"};
  for (const auto& t : spec.domain_suffixes) names.push_back("dot" + t);
  names.push_back("virustotal");
  for (const auto& k : spec.text_keywords) names.push_back(k);
  names.push_back("has_comment");
  for (const auto& k : spec.info_keywords) names.push_back("info_" + k);
  for (const char* n : {"published", "analysis", "attribute_count", "distribution", "sharing_group_id"}) {
    names.push_back(n);
  }
  for (const auto& c : cats) names.push_back("category=" + c);

  std::vector<double> row;
  for (const MispEvent& e : events) {
    const Civil ed = EventDate(e);
    const Civil eh = FromUnix(e.timestamp);
    const std::string info = Lower(e.info);
    for (const MispAttribute& a : e.attributes) {
      row.clear();
      const Civil ad = FromUnix(a.timestamp);
      row.push_back(ad.year);
      row.push_back(ad.hour);
      row.push_back(IsoWeek(ad.year, ad.month, ad.day));
      row.push_back(ed.year);
      row.push_back(eh.hour);
      row.push_back(IsoWeek(ed.year, ed.month, ed.day));
      const std::string value = Lower(a.value);
      const std::string host = Host(value);
      const std::string path = PathPart(value);
      row.push_back(value.rfind("https://", 0) == 0 ? 1 : 0);
      bool exe = false;
      for (const auto& ext : spec.executable_extensions) exe = exe || EndsWith(path, Lower(ext));
      row.push_back(exe ? 1 : 0);
      for (const auto& t : spec.domain_suffixes) row.push_back(EndsWith(host, "." + Lower(t)) ? 1 : 0);
      row.push_back(Contains(value, "virustotal") ? 1 : 0);
      const std::string text = info + "\n" + Lower(a.comment);
      for (const auto& k : spec.text_keywords) row.push_back(Contains(text, k) ? 1 : 0);
      row.push_back(a.comment.empty() ? 0 : 1);
      for (const auto& k : spec.info_keywords) row.push_back(Contains(info, k) ? 1 : 0);
      row.push_back(e.published ? 1 : 0);
      row.push_back(e.analysis);
      row.push_back(e.attribute_count);
      row.push_back(e.distribution);
      row.push_back(e.sharing_group_id);
      for (const auto& c : cats) row.push_back(a.category == c ? 1 : 0);
      d.AddRow(row, e.threat_level_id);
    }
  }
  return d;
}

}  // namespace cti::pipeline
