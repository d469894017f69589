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


#include "cti/ctictl/report.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include <boost/math/distributions/students_t.hpp>

#include "cti/common/error.h"

namespace cti::ctictl {

Summary Summarize(std::span<const double> values) {
  Summary s;
  s.n = values.size();
  if (s.n == 0) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n < 2) return s;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
  const boost::math::students_t dist(static_cast<double>(s.n - 1));
  s.ci95 = boost::math::quantile(boost::math::complement(dist, 0.025)) * s.std /
           std::sqrt(static_cast<double>(s.n));
  return s;
}

nlohmann::json SummaryJson(const Summary& s) {
  return {{"n", s.n}, {"mean", s.mean}, {"std", s.std}, {"ci95", s.ci95}};
}

nlohmann::json ReportJson(const ExperimentReport& r) {
  nlohmann::json tables = nlohmann::json::array();
  for (const auto& [name, _] : r.tables) tables.push_back(name);
  return {{"experiment", r.experiment}, {"seed", r.seed},          {"config", r.config},
          {"records", r.records},       {"aggregates", r.aggregates}, {"verdict", r.verdict},
          {"tables", tables}};
}

ExperimentReport ReportFromJson(const nlohmann::json& j) {
  try {
    ExperimentReport r;
    r.experiment = j.at("experiment").get<std::string>();
    r.seed = j.at("seed").get<uint64_t>();
    r.config = j.at("config");
    r.records = j.at("records");
    r.aggregates = j.at("aggregates");
    r.verdict = j.at("verdict");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("report: ") + e.what());
  }
}

void WriteReport(const ExperimentReport& r, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir + ": " + ec.message());
  auto write = [&](const std::string& name, const std::string& text) {
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  };
  write("report.json", ReportJson(r).dump(2) + "\n");
  for (const auto& [name, text] : r.tables) write(name, text);
}

}  // namespace cti::ctictl
