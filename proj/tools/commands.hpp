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

// Subcommands of the v2v tool. Each returns the process exit code:
// 0 success, 1 verification failure, 2 usage or configuration error.

#ifndef V2V_TOOLS_COMMANDS_HPP_
#define V2V_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace v2v::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct GenerateOptions {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;  // overrides the config's seed
};
int Generate(const GenerateOptions& opts, std::ostream& out,
             std::ostream& err);

struct RunOptions {
  std::string scenario_path;
  std::string algorithm = "max-weight";
  // Written in `format`; the other format goes next to it with the matching
  // extension (plan.json -> plan.csv).
  std::string out_path;
  std::string format = "json";
};
int Run(const RunOptions& opts, std::ostream& out, std::ostream& err);

struct SweepOptions {
  std::string spec_path;
  std::string out_csv;
  int workers = 1;
  std::optional<std::uint64_t> seed;  // overrides master_seed
  std::string summary_path;           // optional per-group means/stds
};
int Sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  int size_limit = 5;
  int trials = 200;
  std::uint64_t seed = 1;
  // Test hook: perturbs one weight seen by the brute-force oracle so the
  // comparison must fail.
  bool inject_fault = false;
};
int Verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

// Worker count after applying the V2V_WORKERS environment override.
int ResolveWorkers(int flag_value);

}  // namespace v2v::cli

#endif  // V2V_TOOLS_COMMANDS_HPP_
