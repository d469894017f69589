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


#ifndef CTI_CTICTL_REPORT_H_
#define CTI_CTICTL_REPORT_H_

#include <map>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

namespace cti::ctictl {

// Output of one experiment command. `aggregates` is always a pure function
// of `records` (see the experiment's Aggregate* function), so a stored
// report can be re-checked without rerunning anything.
struct ExperimentReport {
  std::string experiment;
  uint64_t seed = 0;
  nlohmann::json config;
  nlohmann::json records = nlohmann::json::array();
  nlohmann::json aggregates;
  nlohmann::json verdict;
  // File name -> CSV text, for external plotting.
  std::map<std::string, std::string> tables;
};

struct Summary {
  size_t n = 0;
  double mean = 0.0;
  double std = 0.0;      // sample std (n - 1)
  double ci95 = 0.0;     // half-width, Student t
  double lo() const { return mean - ci95; }
  double hi() const { return mean + ci95; }
};

Summary Summarize(std::span<const double> values);
nlohmann::json SummaryJson(const Summary& s);

nlohmann::json ReportJson(const ExperimentReport& r);
ExperimentReport ReportFromJson(const nlohmann::json& j);

// Writes report.json and every table under `dir` (created if needed).
void WriteReport(const ExperimentReport& r, const std::string& dir);

}  // namespace cti::ctictl

#endif  // CTI_CTICTL_REPORT_H_
