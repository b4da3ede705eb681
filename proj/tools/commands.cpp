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

#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "v2v/errors.hpp"
#include "v2v/graph.hpp"
#include "v2v/matching.hpp"
#include "v2v/metrics.hpp"
#include "v2v/oracles.hpp"
#include "v2v/protocol.hpp"
#include "v2v/scenario.hpp"
#include "v2v/sweep.hpp"

namespace v2v::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Reads and parses a JSON file. Errors carry the exit message.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json ReadJson(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw InputError(std::string(what) + " not found: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON in ") + path + ": " +
                     e.what());
  }
}

void WriteFile(const std::string& path, const std::string& contents) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
  if (!out) throw InputError("write failed for " + path);
}

// Runs body(), mapping configuration and input problems onto exit code 2.
template <typename Body>
int Guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
  } catch (const ArgumentError& e) {
    err << "argument error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace

int ResolveWorkers(int flag_value) {
  if (const char* env = std::getenv("V2V_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1, flag_value);
}

int Generate(const GenerateOptions& opts, std::ostream& out,
             std::ostream& err) {
  return Guarded(err, [&] {
    const ScenarioConfig config =
        ConfigFromJson(ReadJson(opts.config_path, "config"));
    const Scenario scenario =
        GenerateScenario(config, opts.seed.value_or(config.seed));
    WriteFile(opts.out_path, ScenarioToJson(scenario).dump(2) + '\n');
    out << "wrote scenario with " << scenario.consumers.size()
        << " consumers, " << scenario.providers.size() << " providers to "
        << opts.out_path << '\n';
    return kExitOk;
  });
}

int Run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const Algorithm algorithm = AlgorithmFromString(opts.algorithm);
    if (opts.format != "json" && opts.format != "csv") {
      throw ArgumentError("unknown format '" + opts.format + "'");
    }
    const Scenario scenario =
        ScenarioFromJson(ReadJson(opts.scenario_path, "scenario"));
    auto [plan, seconds] = TimedRun(scenario, algorithm);
    const RunReport report = Report(plan, scenario, seconds);

    if (!opts.out_path.empty()) {
      const std::string json_text = ToJson(plan).dump(2) + '\n';
      const std::string csv_text = ToCsv(plan);
      fs::path primary(opts.out_path);
      fs::path companion = primary;
      companion.replace_extension(opts.format == "json" ? ".csv" : ".json");
      if (companion == primary) companion += opts.format == "json" ? ".csv"
                                                                   : ".json";
      WriteFile(primary.string(), opts.format == "json" ? json_text : csv_text);
      WriteFile(companion.string(),
                opts.format == "json" ? csv_text : json_text);
    }
    out << "algorithm=" << ToString(algorithm)
        << " matched=" << plan.trades.size()
        << " fallbacks=" << plan.station_fallbacks.size()
        << " idle_providers=" << plan.idle_providers.size()
        << " rounds=" << plan.rounds_used
        << " welfare_c=" << report.welfare.v2v.ToString()
        << " baseline_c=" << report.welfare.baseline.ToString()
        << " energy_reduction_kwh=" << report.energy.reduction_kwh << '\n';
    return kExitOk;
  });
}

int Sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    SweepSpec spec = SweepSpecFromJson(ReadJson(opts.spec_path, "sweep spec"));
    if (opts.seed) spec.master_seed = *opts.seed;
    const int workers = ResolveWorkers(opts.workers);
    const std::vector<SweepRow> rows = RunSweep(spec, workers);
    WriteFile(opts.out_csv, SweepCsv(rows, spec.record_timing));
    if (!opts.summary_path.empty()) {
      WriteFile(opts.summary_path, SummaryCsv(Summarize(rows)));
    }
    out << "wrote " << rows.size() << " rows to " << opts.out_csv << '\n';
    return kExitOk;
  });
}

namespace {

constexpr int kMaxVerifySize = 7;

int Counterexample(std::ostream& err, const json& details) {
  err << "verification failed; counterexample:\n" << details.dump(2) << '\n';
  return kExitVerifyFailed;
}

}  // namespace

int Verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.size_limit < 1 || opts.size_limit > kMaxVerifySize) {
    err << "capacity error: size limit must be within 1.." << kMaxVerifySize
        << '\n';
    return kExitUsage;
  }
  if (opts.trials < 1) {
    err << "argument error: trials must be >= 1\n";
    return kExitUsage;
  }
  std::mt19937_64 rng(opts.seed);
  long checks = 0;
  bool fault_pending = opts.inject_fault;

  for (int n = 1; n <= opts.size_limit; ++n) {
    for (int t = 0; t < opts.trials; ++t) {
      const WeightMatrix w = RandomWeightMatrix(rng, n, -100, 100);
      bool labels_ok = true;
      const Matching m = MaxWeightMatching(
          w, [&](const VertexLabeling& l, const std::vector<std::size_t>&) {
            labels_ok = labels_ok && l.IsFeasible(w);
          });
      const std::int64_t km_weight = MatchingWeight(w, m).units();
      WeightMatrix oracle_input = w;
      if (fault_pending) {
        oracle_input(0, *m.PartnerOfLeft(0)) += 1;
        fault_pending = false;
      }
      const BruteForceResult bf = BruteForceMaxWeight(oracle_input);
      if (!labels_ok || km_weight != bf.weight) {
        return Counterexample(
            err, {{"check", labels_ok ? "max-weight" : "labeling-feasibility"},
                  {"matrix", ToJson(w)},
                  {"km_matching", ToJson(m)},
                  {"km_weight", km_weight},
                  {"oracle_weight", bf.weight},
                  {"oracle_permutation", bf.permutation}});
      }
      ++checks;
    }
  }

  std::uniform_int_distribution<int> size(0, opts.size_limit);
  for (int t = 0; t < opts.trials; ++t) {
    const PreferenceLists prefs =
        RandomPreferences(rng, size(rng), size(rng), 0.7);
    const Matching co = ConsumerOrientedMatching(prefs);
    const Matching po = ProviderOrientedMatching(prefs);
    const std::vector<Matching> stable = EnumerateStableMatchings(prefs);
    const json instance = {{"preferences", ToJson(prefs)},
                           {"consumer_oriented", ToJson(co)},
                           {"provider_oriented", ToJson(po)}};
    for (const Matching* m : {&co, &po}) {
      const StabilityReport report = IsStable(*m, prefs);
      if (!report.stable) {
        json details = instance;
        details["check"] = "stability";
        details["violation"] = {report.violation->left,
                                report.violation->right};
        return Counterexample(err, details);
      }
    }
    for (const Matching& s : stable) {
      for (std::size_t i = 0; i < prefs.num_consumers(); ++i) {
        if (ConsumerPartnerRank(co, prefs, i) >
            ConsumerPartnerRank(s, prefs, i)) {
          json details = instance;
          details["check"] = "consumer-optimality";
          details["better_stable_matching"] = ToJson(s);
          return Counterexample(err, details);
        }
      }
      for (std::size_t j = 0; j < prefs.num_providers(); ++j) {
        if (ProviderPartnerRank(po, prefs, j) >
            ProviderPartnerRank(s, prefs, j)) {
          json details = instance;
          details["check"] = "provider-optimality";
          details["better_stable_matching"] = ToJson(s);
          return Counterexample(err, details);
        }
      }
    }
    ++checks;
  }
  out << "verify: " << checks << " checks passed (size limit "
      << opts.size_limit << ", " << opts.trials << " trials)\n";
  return kExitOk;
}

}  // namespace v2v::cli
