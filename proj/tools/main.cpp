// Copyright 2026 The V2V Match Authors
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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  namespace cli = v2v::cli;
  CLI::App app{"Cooperative V2V charging: matching engine and simulator"};
  app.require_subcommand(1);

  cli::GenerateOptions gen;
  std::uint64_t gen_seed = 0;
  auto* generate = app.add_subcommand("generate", "Generate a scenario");
  generate->add_option("--config", gen.config_path, "Scenario config JSON")
      ->required();
  generate->add_option("--out", gen.out_path, "Scenario JSON output")
      ->required();
  auto* gen_seed_opt =
      generate->add_option("--seed", gen_seed, "Override the config seed");

  cli::RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run the trading protocol");
  run_cmd->add_option("--scenario", run.scenario_path, "Scenario JSON")
      ->required();
  run_cmd->add_option("--algorithm", run.algorithm,
                      "max-weight | consumer | provider");
  run_cmd->add_option("--out", run.out_path, "Trade plan output");
  run_cmd->add_option("--format", run.format, "json | csv");

  cli::SweepOptions sweep;
  std::uint64_t sweep_seed = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Monte-Carlo size sweep");
  sweep_cmd->add_option("--config", sweep.spec_path, "Sweep spec JSON")
      ->required();
  sweep_cmd->add_option("--out", sweep.out_csv, "Result CSV")->required();
  sweep_cmd->add_option("--workers", sweep.workers, "Worker threads");
  auto* sweep_seed_opt =
      sweep_cmd->add_option("--seed", sweep_seed, "Override master_seed");
  sweep_cmd->add_option("--summary", sweep.summary_path,
                        "Per-group mean/std CSV");

  cli::VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Cross-check algorithms against oracles");
  verify_cmd->add_option("--size-limit", verify.size_limit,
                         "Largest instance side (<= 7)");
  verify_cmd->add_option("--trials", verify.trials, "Instances per size");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault,
                       "Corrupt one oracle weight (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  if (generate->parsed()) {
    if (*gen_seed_opt) gen.seed = gen_seed;
    return cli::Generate(gen, std::cout, std::cerr);
  }
  if (run_cmd->parsed()) return cli::Run(run, std::cout, std::cerr);
  if (sweep_cmd->parsed()) {
    if (*sweep_seed_opt) sweep.seed = sweep_seed;
    return cli::Sweep(sweep, std::cout, std::cerr);
  }
  return cli::Verify(verify, std::cout, std::cerr);
}
