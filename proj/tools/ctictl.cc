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


// ctictl: key ceremony, queries and experiments for a CTI sharing network.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cti/common/error.h"
#include "cti/ctictl/commands.h"
#include "cti/ctictl/experiments.h"

namespace {

using cti::ctictl::ExitCodeFor;

nlohmann::json LoadJsonConfig(const std::string& path) {
  if (path.empty()) return nlohmann::json::object();
  std::ifstream in(path);
  if (!in) throw cti::Error(cti::ErrorCode::kIo, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw cti::Error(cti::ErrorCode::kParse, path + ": " + e.what());
  }
}

void PrintVerdict(const cti::ctictl::ExperimentReport& r, const std::string& out) {
  std::cout << r.experiment << ": " << (r.verdict.value("pass", false) ? "PASS" : "FAIL")
            << "  (report: " << out << "/report.json)\n"
            << r.verdict.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ctictl - collaborative threat intelligence over multiparty HE"};
  app.require_subcommand(1);

  // net-init
  cti::ctictl::NetInitOptions init;
  auto* net_init = app.add_subcommand("net-init", "run the key ceremony and write node material");
  net_init->add_option("--parties", init.parties, "number of nodes")
      ->required()
      ->check(CLI::PositiveNumber);
  net_init->add_option("--preset", init.preset, "parameter preset (toy, standard)")
      ->capture_default_str();
  net_init->add_option("--out", init.out, "output directory")->required();
  net_init->add_flag("--force", init.force, "overwrite a non-empty output directory");
  net_init->add_option("--seed", init.seed)->capture_default_str();
  net_init->add_option("--token", init.token, "querier token (generated if empty)");
  net_init->add_option("--base-port", init.base_port)->capture_default_str();

  // query
  cti::ctictl::QueryOptions query;
  std::string query_kind;
  auto* q = app.add_subcommand("query", "run a query over the network");
  q->add_option("kind", query_kind, "stats | train | predict")
      ->required()
      ->check(CLI::IsMember({"stats", "train", "predict"}));
  q->add_option("--config", query.config, "querier node config")->required();
  q->add_option("--token", query.token, "access token")->required();
  q->add_option("--cluster", query.cluster, "net-init directory (default: from --config)");
  q->add_option("--data", query.data, "per-node inputs in node order (predict: one query CSV)");
  q->add_option("--taxonomy", query.taxonomy, "taxonomy entries (stats)")->delimiter(',');
  q->add_option("--from", query.from, "first event date, YYYY-MM-DD (stats)");
  q->add_option("--to", query.to, "last event date, YYYY-MM-DD (stats)");
  q->add_option("--out", query.out, "result file at the querier");
  q->add_option("--iterations", query.iterations)->capture_default_str()->check(CLI::NonNegativeNumber);
  q->add_option("--eta", query.eta)->capture_default_str()->check(CLI::PositiveNumber);
  q->add_option("--offline", query.offline, "simulate unreachable nodes");
  q->add_option("--round-timeout-ms", query.round_timeout_ms)->check(CLI::NonNegativeNumber);
  q->add_option("--seed", query.seed)->capture_default_str();

  // experiment
  std::string exp_kind, exp_config, exp_out;
  uint64_t exp_seed = 0;
  bool exp_encrypted = false;
  auto* e = app.add_subcommand("experiment", "run an experiment and write report.json + CSVs");
  e->add_option("kind", exp_kind, "smote-bias | collab-gain | perf-bench")
      ->required()
      ->check(CLI::IsMember({"smote-bias", "collab-gain", "perf-bench"}));
  e->add_option("--config", exp_config, "JSON config (defaults otherwise)");
  e->add_option("--out", exp_out, "output directory")->required();
  auto* seed_opt = e->add_option("--seed", exp_seed, "overrides the config seed");
  e->add_flag("--encrypted", exp_encrypted, "collab-gain: encrypted spot check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return cti::ctictl::kExitUsage;
  }

  try {
    if (*net_init) {
      const auto res = cti::ctictl::NetInit(init);
      for (const auto& f : res.files) std::cout << "wrote " << f << "\n";
      std::cout << "querier token: " << res.token << "\n";
    } else if (*q) {
      if (query_kind == "stats") {
        cti::ctictl::QueryStats(query);
      } else if (query_kind == "train") {
        cti::ctictl::QueryTrain(query);
      } else {
        cti::ctictl::QueryPredict(query);
      }
      std::cout << "query " << query_kind << " done" << (query.out.empty() ? "" : ": " + query.out)
                << "\n";
    } else if (*e) {
      const nlohmann::json j = LoadJsonConfig(exp_config);
      cti::ctictl::ExperimentReport r;
      if (exp_kind == "smote-bias") {
        auto c = cti::ctictl::SmoteBiasFromJson(j);
        if (*seed_opt) c.seed = exp_seed;
        r = cti::ctictl::RunSmoteBias(c);
      } else if (exp_kind == "collab-gain") {
        auto c = cti::ctictl::CollabGainFromJson(j);
        if (*seed_opt) c.seed = exp_seed;
        c.encrypted_spot_check = c.encrypted_spot_check || exp_encrypted;
        r = cti::ctictl::RunCollabGain(c);
      } else {
        auto c = cti::ctictl::PerfBenchFromJson(j);
        if (*seed_opt) c.seed = exp_seed;
        r = cti::ctictl::RunPerfBench(c);
      }
      cti::ctictl::WriteReport(r, exp_out);
      PrintVerdict(r, exp_out);
    }
  } catch (const cti::Error& err) {
    std::cerr << "ctictl: " << err.what() << "\n";
    return ExitCodeFor(err.code());
  } catch (const std::exception& err) {
    std::cerr << "ctictl: " << err.what() << "\n";
    return cti::ctictl::kExitFailure;
  }
  return cti::ctictl::kExitOk;
}
