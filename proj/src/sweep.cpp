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

#include "v2v/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "v2v/errors.hpp"
#include "v2v/metrics.hpp"

namespace v2v {

void SweepSpec::Validate() const {
  if (trials < 1) throw ConfigError("sweep needs trials >= 1");
  if (varied_values.empty()) throw ConfigError("sweep needs varied_values");
  if (fixed_value < 0) throw ConfigError("fixed_value must be >= 0");
  for (int v : varied_values) {
    if (v < 0) throw ConfigError("varied_values must be >= 0");
  }
  if (algorithms.empty()) throw ConfigError("sweep needs an algorithm");
  base.Validate();
}

SweepSpec SweepSpecFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("sweep spec must be a JSON object");
  try {
    SweepSpec spec;
    if (j.contains("config")) spec.base = ConfigFromJson(j.at("config"));
    const std::string side = j.value("fixed_side", std::string("N"));
    if (side == "N") {
      spec.fixed_side = SweepSide::kConsumers;
    } else if (side == "K") {
      spec.fixed_side = SweepSide::kProviders;
    } else {
      throw ConfigError("fixed_side must be \"N\" or \"K\"");
    }
    spec.fixed_value = j.value("fixed_value", spec.fixed_value);
    spec.varied_values = j.value("varied_values", std::vector<int>{});
    spec.trials = j.value("trials", spec.trials);
    spec.master_seed = j.value("master_seed", spec.master_seed);
    spec.record_timing = j.value("record_timing", spec.record_timing);
    if (j.contains("algorithms")) {
      spec.algorithms.clear();
      for (const auto& name : j.at("algorithms")) {
        try {
          spec.algorithms.push_back(AlgorithmFromString(name.get<std::string>()));
        } catch (const ArgumentError& e) {
          throw ConfigError(e.what());
        }
      }
    }
    spec.Validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad sweep spec field: ") + e.what());
  }
}

std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t trial) {
  // splitmix64 finalizer over a combination of both inputs.
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<SweepRow> RunSweep(const SweepSpec& spec, int workers) {
  spec.Validate();
  const std::size_t n_values = spec.varied_values.size();
  const std::size_t n_trials = static_cast<std::size_t>(spec.trials);
  const std::size_t n_algs = spec.algorithms.size();
  const std::size_t cells = n_values * n_trials;
  std::vector<SweepRow> rows(cells * n_algs);

  auto run_cell = [&](std::size_t cell) {
    const std::size_t value_idx = cell / n_trials;
    const int trial = static_cast<int>(cell % n_trials);
    ScenarioConfig config = spec.base;
    const int varied = spec.varied_values[value_idx];
    config.n_consumers =
        spec.fixed_side == SweepSide::kConsumers ? spec.fixed_value : varied;
    config.k_providers =
        spec.fixed_side == SweepSide::kProviders ? spec.fixed_value : varied;
    const Scenario scenario =
        GenerateScenario(config, TrialSeed(spec.master_seed, trial));
    for (std::size_t a = 0; a < n_algs; ++a) {
      auto [plan, seconds] = TimedRun(scenario, spec.algorithms[a]);
      const RunReport report = Report(plan, scenario, seconds);
      SweepRow& row = rows[cell * n_algs + a];
      row.trial = trial;
      row.n = config.n_consumers;
      row.k = config.k_providers;
      row.algorithm = spec.algorithms[a];
      row.welfare = report.welfare.v2v;
      row.baseline_welfare = report.welfare.baseline;
      row.energy_v2v_kwh = report.energy.v2v_kwh;
      row.energy_baseline_kwh = report.energy.baseline_kwh;
      row.energy_reduction_kwh = report.energy.reduction_kwh;
      row.matched_count = static_cast<int>(plan.trades.size());
      row.fallback_count = static_cast<int>(plan.station_fallbacks.size());
      row.wall_time_s = spec.record_timing ? seconds : 0.0;
    }
  };

  const std::size_t n_workers =
      std::clamp<std::size_t>(workers < 1 ? 1 : workers, 1, cells);
  if (n_workers == 1) {
    for (std::size_t cell = 0; cell < cells; ++cell) run_cell(cell);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (std::size_t w = 0; w < n_workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t cell = next++; cell < cells; cell = next++) {
        try {
          run_cell(cell);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

namespace {

std::string FormatDouble(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

}  // namespace

std::string SweepCsv(const std::vector<SweepRow>& rows, bool with_timing) {
  std::string out =
      "trial,N,K,algorithm,social_welfare_c,baseline_welfare_c,"
      "energy_v2v_kwh,energy_baseline_kwh,energy_reduction_kwh,"
      "matched_count,fallback_count,wall_time_s\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.trial) + ',' + std::to_string(r.n) + ',' +
           std::to_string(r.k) + ',' + ToString(r.algorithm) + ',' +
           r.welfare.ToString() + ',' + r.baseline_welfare.ToString() + ',' +
           FormatDouble(r.energy_v2v_kwh, 6) + ',' +
           FormatDouble(r.energy_baseline_kwh, 6) + ',' +
           FormatDouble(r.energy_reduction_kwh, 6) + ',' +
           std::to_string(r.matched_count) + ',' +
           std::to_string(r.fallback_count) + ',' +
           (with_timing ? FormatDouble(r.wall_time_s, 9) : std::string("0")) +
           '\n';
  }
  return out;
}

std::vector<SweepSummary> Summarize(const std::vector<SweepRow>& rows) {
  struct Acc {
    SweepSummary s;
    double w_sq = 0.0;
    double e_sq = 0.0;
  };
  std::vector<Acc> groups;
  for (const SweepRow& r : rows) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Acc& a) {
      return a.s.n == r.n && a.s.k == r.k && a.s.algorithm == r.algorithm;
    });
    if (it == groups.end()) {
      groups.push_back({});
      it = groups.end() - 1;
      it->s.n = r.n;
      it->s.k = r.k;
      it->s.algorithm = r.algorithm;
    }
    const double w = r.welfare.cents();
    it->s.trials += 1;
    it->s.welfare_mean += w;
    it->w_sq += w * w;
    it->s.baseline_mean += r.baseline_welfare.cents();
    it->s.energy_reduction_mean += r.energy_reduction_kwh;
    it->e_sq += r.energy_reduction_kwh * r.energy_reduction_kwh;
    it->s.wall_time_mean += r.wall_time_s;
  }
  std::vector<SweepSummary> out;
  for (Acc& a : groups) {
    const double n = a.s.trials;
    a.s.welfare_mean /= n;
    a.s.baseline_mean /= n;
    a.s.energy_reduction_mean /= n;
    a.s.wall_time_mean /= n;
    if (a.s.trials > 1) {
      a.s.welfare_std = std::sqrt(
          std::max(0.0, (a.w_sq - n * a.s.welfare_mean * a.s.welfare_mean) /
                            (n - 1)));
      a.s.energy_reduction_std = std::sqrt(std::max(
          0.0, (a.e_sq - n * a.s.energy_reduction_mean *
                             a.s.energy_reduction_mean) /
                   (n - 1)));
    }
    out.push_back(a.s);
  }
  return out;
}

std::string SummaryCsv(const std::vector<SweepSummary>& summary) {
  std::string out =
      "N,K,algorithm,trials,social_welfare_mean_c,social_welfare_std_c,"
      "baseline_welfare_mean_c,energy_reduction_mean_kwh,"
      "energy_reduction_std_kwh,wall_time_mean_s\n";
  for (const SweepSummary& s : summary) {
    out += std::to_string(s.n) + ',' + std::to_string(s.k) + ',' +
           ToString(s.algorithm) + ',' + std::to_string(s.trials) + ',' +
           FormatDouble(s.welfare_mean, 4) + ',' +
           FormatDouble(s.welfare_std, 4) + ',' +
           FormatDouble(s.baseline_mean, 4) + ',' +
           FormatDouble(s.energy_reduction_mean, 6) + ',' +
           FormatDouble(s.energy_reduction_std, 6) + ',' +
           FormatDouble(s.wall_time_mean, 9) + '\n';
  }
  return out;
}

}  // namespace v2v
