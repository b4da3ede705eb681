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

// Monte-Carlo sweeps over market sizes. One side (N or K) stays fixed while
// the other takes each listed value; every (value, trial) cell generates one
// scenario and runs every requested algorithm on it. Trial t always uses the
// scenario seed TrialSeed(master_seed, t), so results do not depend on the
// number of workers or on scheduling.

#ifndef V2V_SWEEP_HPP_
#define V2V_SWEEP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "v2v/money.hpp"
#include "v2v/protocol.hpp"
#include "v2v/scenario.hpp"

namespace v2v {

enum class SweepSide { kConsumers, kProviders };

struct SweepSpec {
  SweepSide fixed_side = SweepSide::kConsumers;
  int fixed_value = 10;
  std::vector<int> varied_values;
  int trials = 100;
  std::uint64_t master_seed = 0;
  std::vector<Algorithm> algorithms{std::begin(kAllAlgorithms),
                                    std::end(kAllAlgorithms)};
  ScenarioConfig base;
  // Wall times differ from run to run; without this flag the wall_time_s
  // column is written as 0 so reruns stay byte-identical.
  bool record_timing = false;

  // Throws ConfigError when trials < 1, no values are given, a count is
  // negative or no algorithm is selected.
  void Validate() const;
};

// Keys: fixed_side ("N"|"K"), fixed_value, varied_values, trials,
// master_seed, algorithms, record_timing, config (a ScenarioConfig object).
SweepSpec SweepSpecFromJson(const nlohmann::json& j);

std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t trial);

struct SweepRow {
  int trial = 0;
  int n = 0;
  int k = 0;
  Algorithm algorithm = Algorithm::kMaxWeight;
  Money welfare;
  Money baseline_welfare;
  double energy_v2v_kwh = 0.0;
  double energy_baseline_kwh = 0.0;
  double energy_reduction_kwh = 0.0;
  int matched_count = 0;
  int fallback_count = 0;
  double wall_time_s = 0.0;
};

// Rows ordered by varied value, then trial, then algorithm as listed.
std::vector<SweepRow> RunSweep(const SweepSpec& spec, int workers);

std::string SweepCsv(const std::vector<SweepRow>& rows, bool with_timing);

struct SweepSummary {
  int n = 0;
  int k = 0;
  Algorithm algorithm = Algorithm::kMaxWeight;
  int trials = 0;
  double welfare_mean = 0.0;
  double welfare_std = 0.0;
  double baseline_mean = 0.0;
  double energy_reduction_mean = 0.0;
  double energy_reduction_std = 0.0;
  double wall_time_mean = 0.0;
};

// Mean and sample standard deviation per (N, K, algorithm), in row order of
// first appearance. Money columns are reported in cents.
std::vector<SweepSummary> Summarize(const std::vector<SweepRow>& rows);

std::string SummaryCsv(const std::vector<SweepSummary>& summary);

}  // namespace v2v

#endif  // V2V_SWEEP_HPP_
