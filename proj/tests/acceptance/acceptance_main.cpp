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

// Acceptance checks for the matching engine and simulator. Prints one
// PASS/FAIL line per criterion; exits 1 if any selected criterion fails.
//
//   v2v_acceptance            run all criteria
//   v2v_acceptance 3 5        run criteria 3 and 5

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "v2v/graph.hpp"
#include "v2v/matching.hpp"
#include "v2v/metrics.hpp"
#include "v2v/oracles.hpp"
#include "v2v/protocol.hpp"
#include "v2v/scenario.hpp"
#include "v2v/sweep.hpp"
#include "v2v/utility.hpp"

namespace v2v::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// 1. KM weight equals the permutation maximum, 1000 matrices per n in 2..7.
Outcome MaxWeightCorrectness() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  long mismatches = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    for (int t = 0; t < 1000; ++t) {
      const WeightMatrix w = RandomWeightMatrix(rng, n, -1000, 1000);
      if (MatchingWeight(w, MaxWeightMatching(w)).units() !=
          BruteForceMaxWeight(w).weight) {
        ++mismatches;
      }
    }
  }
  const double elapsed = Seconds(start);
  return {mismatches == 0 && elapsed < 60.0,
          Format("6000 matrices, %ld mismatches, %.2f s (limit 60 s)",
                 mismatches, elapsed)};
}

// 2. Labeling feasibility at every observed step on 1000 10x10 matrices.
Outcome LabelingFeasibility() {
  std::mt19937_64 rng(202);
  long steps = 0;
  long violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const WeightMatrix w = RandomWeightMatrix(rng, 10, -1000, 1000);
    MaxWeightMatching(
        w, [&](const VertexLabeling& l, const std::vector<std::size_t>&) {
          ++steps;
          if (!l.IsFeasible(w)) ++violations;
        });
  }
  return {violations == 0 && steps > 0,
          Format("1000 matrices, %ld labeling snapshots, %ld violations",
                 steps, violations)};
}

// 3. Both deferred-acceptance variants are stable on 10000 instances.
Outcome Stability() {
  const auto start = Clock::now();
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<std::size_t> side(0, 20);
  std::uniform_real_distribution<double> accept(0.1, 1.0);
  long blocking = 0;
  for (int t = 0; t < 10'000; ++t) {
    const std::size_t n = side(rng);
    const std::size_t k = side(rng);
    const PreferenceLists p = RandomPreferences(rng, n, k, accept(rng));
    if (!IsStable(ConsumerOrientedMatching(p), p).stable) ++blocking;
    if (!IsStable(ProviderOrientedMatching(p), p).stable) ++blocking;
  }
  const double elapsed = Seconds(start);
  return {blocking == 0 && elapsed < 60.0,
          Format("10000 instances x 2 variants, %ld unstable, %.2f s "
                 "(limit 60 s)",
                 blocking, elapsed)};
}

// 4. Proposer-optimality against the enumerated stable set.
Outcome Polarization() {
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<std::size_t> side(1, 6);
  std::uniform_real_distribution<double> accept(0.3, 1.0);
  long violations = 0;
  long stable_sets = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = side(rng);
    const PreferenceLists p = RandomPreferences(rng, n, n, accept(rng));
    const Matching co = ConsumerOrientedMatching(p);
    const Matching po = ProviderOrientedMatching(p);
    const std::vector<Matching> all = EnumerateStableMatchings(p);
    stable_sets += static_cast<long>(all.size());
    for (const Matching& s : all) {
      for (std::size_t i = 0; i < n; ++i) {
        if (ConsumerPartnerRank(co, p, i) > ConsumerPartnerRank(s, p, i)) {
          ++violations;
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (ProviderPartnerRank(po, p, j) > ProviderPartnerRank(s, p, j)) {
          ++violations;
        }
      }
    }
  }
  return {violations == 0,
          Format("500 instances, %ld stable matchings enumerated, "
                 "%ld rank violations",
                 stable_sets, violations)};
}

// Station utility recomputed from positions with plain doubles.
double StationUtilityOracle(const ConsumerEV& c, const Scenario& s) {
  double nearest = std::numeric_limits<double>::infinity();
  for (const Facility& st : s.stations) {
    nearest = std::min(nearest, std::hypot(c.position.x - st.position.x,
                                           c.position.y - st.position.y));
  }
  return -s.prices.p_s * c.a_c - s.prices.p_s * c.beta_c * nearest;
}

// 5. Accepted trades beat both outside options; fallbacks get the station
// utility within 0.01 c.
Outcome ProtocolSoundness() {
  ScenarioConfig config;
  long trades = 0;
  long fallbacks = 0;
  long violations = 0;
  double worst_fallback_error = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Scenario s = GenerateScenario(config, TrialSeed(505, seed));
    for (Algorithm a : kAllAlgorithms) {
      const TradePlan plan = RunProtocol(s, a);
      for (const Trade& t : plan.trades) {
        ++trades;
        const ConsumerEV& c = s.consumers[t.consumer_index];
        const ProviderEV& p = s.providers[t.provider_index];
        const Facility& lot = s.lots[t.lot_id - 1];
        const double dc = std::hypot(c.position.x - lot.position.x,
                                     c.position.y - lot.position.y);
        const double dp = std::hypot(p.position.x - lot.position.x,
                                     p.position.y - lot.position.y);
        const auto& pr = s.prices;
        const double uc = -pr.p_t * c.a_c - pr.p_t * c.beta_c * dc;
        const double up = pr.p_t * c.a_c - pr.p_0 * c.a_c / pr.eta -
                          pr.p_t * p.beta_p * dp -
                          p.theta_p * (dp / p.velocity + pr.tau * c.a_c / pr.eta) -
                          p.phi * p.degradation * c.a_c;
        if (!(p.a_p >= c.a_c && uc > StationUtilityOracle(c, s) && up > 0.0 &&
              t.u_consumer.cents() > StationUtilityOracle(c, s) &&
              t.u_provider.cents() > 0.0)) {
          ++violations;
        }
      }
      for (const StationFallback& f : plan.station_fallbacks) {
        ++fallbacks;
        const double err = std::abs(
            f.u_consumer.cents() -
            StationUtilityOracle(s.consumers[f.consumer_index], s));
        worst_fallback_error = std::max(worst_fallback_error, err);
        if (err > 0.01) ++violations;
      }
      if (plan.trades.size() + plan.station_fallbacks.size() !=
          s.consumers.size()) {
        ++violations;
      }
    }
  }
  return {violations == 0,
          Format("1000 scenarios x 3 algorithms: %ld trades, %ld fallbacks, "
                 "%ld violations, max fallback error %.5f c (limit 0.01)",
                 trades, fallbacks, violations, worst_fallback_error)};
}

struct TrendPoint {
  int n;
  int k;
  std::map<Algorithm, double> welfare;
  std::map<Algorithm, double> reduction;
};

std::vector<TrendPoint> SweepMeans(SweepSide fixed, int fixed_value,
                                   std::vector<int> values, int trials,
                                   std::uint64_t seed) {
  SweepSpec spec;
  spec.fixed_side = fixed;
  spec.fixed_value = fixed_value;
  spec.varied_values = std::move(values);
  spec.trials = trials;
  spec.master_seed = seed;
  std::vector<TrendPoint> points;
  for (const SweepSummary& s : Summarize(RunSweep(spec, 1))) {
    if (points.empty() || points.back().n != s.n || points.back().k != s.k) {
      points.push_back({s.n, s.k, {}, {}});
    }
    points.back().welfare[s.algorithm] = s.welfare_mean;
    points.back().reduction[s.algorithm] = s.energy_reduction_mean;
  }
  return points;
}

// 6. Mean welfare ordering over 500 seeds per swept point.
Outcome WelfareTrend() {
  const auto start = Clock::now();
  constexpr auto kMw = Algorithm::kMaxWeight;
  constexpr auto kCo = Algorithm::kConsumerOriented;
  constexpr auto kPo = Algorithm::kProviderOriented;
  const std::vector<int> sizes{20, 25, 30, 35, 40};
  std::string detail;
  bool pass = true;
  for (const TrendPoint& p :
       SweepMeans(SweepSide::kConsumers, 10, sizes, 500, 606)) {
    const bool ok = p.welfare.at(kMw) >= p.welfare.at(kCo) &&
                    p.welfare.at(kCo) >= p.welfare.at(kPo);
    pass = pass && ok;
    detail += Format(" [N=10 K=%d MW %.1f CO %.1f PO %.1f %s]", p.k,
                     p.welfare.at(kMw), p.welfare.at(kCo), p.welfare.at(kPo),
                     ok ? "ok" : "x");
  }
  for (const TrendPoint& p :
       SweepMeans(SweepSide::kProviders, 10, sizes, 500, 607)) {
    const bool ok = p.welfare.at(kMw) >= p.welfare.at(kPo) &&
                    p.welfare.at(kPo) >= p.welfare.at(kCo);
    pass = pass && ok;
    detail += Format(" [K=10 N=%d MW %.1f PO %.1f CO %.1f %s]", p.n,
                     p.welfare.at(kMw), p.welfare.at(kPo), p.welfare.at(kCo),
                     ok ? "ok" : "x");
  }
  const double elapsed = Seconds(start);
  pass = pass && elapsed < 600.0;
  return {pass, Format("mean welfare (c), 500 seeds/point, %.1f s:", elapsed) +
                    detail};
}

// 7. Mean energy reduction positive at N=K=10 for every algorithm.
Outcome EnergyReduction() {
  const std::vector<TrendPoint> points =
      SweepMeans(SweepSide::kConsumers, 10, {10}, 500, 707);
  bool pass = true;
  std::string detail = "mean reduction over 500 seeds (kWh):";
  for (const auto& [alg, mean] : points.at(0).reduction) {
    pass = pass && mean > 0.0;
    detail += Format(" %s %.3f", ToString(alg).c_str(), mean);
  }
  return {pass, detail};
}

// 8. Median time of one matching call on a full N=K=n market.
Outcome ComplexityScaling() {
  std::map<int, std::map<Algorithm, std::vector<double>>> times;
  for (int n : {100, 200}) {
    ScenarioConfig config;
    config.n_consumers = n;
    config.k_providers = n;
    for (int t = 0; t < 50; ++t) {
      const Scenario s = GenerateScenario(config, TrialSeed(808, t));
      const MarketGraph g = BuildMarketGraph(s);
      const PreferenceLists prefs = BuildPreferences(s, g);
      auto start = Clock::now();
      MaxWeightMatching(g);
      times[n][Algorithm::kMaxWeight].push_back(Seconds(start));
      start = Clock::now();
      ConsumerOrientedMatching(prefs);
      times[n][Algorithm::kConsumerOriented].push_back(Seconds(start));
      start = Clock::now();
      ProviderOrientedMatching(prefs);
      times[n][Algorithm::kProviderOriented].push_back(Seconds(start));
    }
  }
  bool pass = true;
  std::string detail = "medians over 50 trials:";
  for (Algorithm a : kAllAlgorithms) {
    const double t100 = Median(times[100][a]);
    const double t200 = Median(times[200][a]);
    const double ratio = t200 / t100;
    const bool ok = a == Algorithm::kMaxWeight ? ratio >= 4.0 && ratio <= 16.0
                                               : ratio >= 1.0 && ratio <= 4.0;
    pass = pass && ok;
    detail += Format(" [%s %.3g s -> %.3g s ratio %.2f %s]",
                     ToString(a).c_str(), t100, t200, ratio, ok ? "ok" : "x");
  }
  const double km = Median(times[200][Algorithm::kMaxWeight]);
  for (Algorithm a :
       {Algorithm::kConsumerOriented, Algorithm::kProviderOriented}) {
    pass = pass && km > Median(times[200][a]);
  }
  return {pass, detail};
}

// 9. Sweep CSV is byte-identical for 1, 4 and 8 workers.
Outcome Determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "v2v_acceptance_c9";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path spec = dir / "spec.json";
  std::ofstream(spec) << R"({"fixed_side": "N", "fixed_value": 10,
    "varied_values": [10, 20, 30], "trials": 40, "master_seed": 909})";

  std::vector<std::string> outputs;
  std::string detail = "sweep CSV sizes:";
  for (int workers : {1, 4, 8}) {
    cli::SweepOptions opts;
    opts.spec_path = spec.string();
    opts.out_csv = (dir / ("w" + std::to_string(workers) + ".csv")).string();
    opts.workers = workers;
    std::ostringstream out;
    std::ostringstream err;
    if (cli::Sweep(opts, out, err) != cli::kExitOk) {
      return {false, "sweep failed: " + err.str()};
    }
    std::ifstream in(opts.out_csv, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    outputs.push_back(buffer.str());
    detail += Format(" %d workers %zu bytes", workers, outputs.back().size());
  }
  fs::remove_all(dir);
  const bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2];
  return {same && !outputs[0].empty(),
          detail + (same ? ", identical" : ", differ")};
}

}  // namespace
}  // namespace v2v::acceptance

int main(int argc, char** argv) {
  using namespace v2v::acceptance;
  const std::vector<std::pair<const char*, std::function<Outcome()>>>
      criteria{{"max-weight correctness", MaxWeightCorrectness},
               {"labeling feasibility", LabelingFeasibility},
               {"stability", Stability},
               {"polarization", Polarization},
               {"protocol soundness", ProtocolSoundness},
               {"welfare trend", WelfareTrend},
               {"energy reduction", EnergyReduction},
               {"complexity scaling", ComplexityScaling},
               {"determinism", Determinism}};

  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  app.add_option("criteria", selected, "Criterion numbers (default: all)")
      ->check(CLI::Range(1, static_cast<int>(criteria.size())));
  CLI11_PARSE(app, argc, argv);
  ::unsetenv("V2V_WORKERS");
  if (selected.empty()) {
    for (std::size_t i = 1; i <= criteria.size(); ++i) {
      selected.push_back(static_cast<int>(i));
    }
  }

  int failures = 0;
  for (int id : selected) {
    const auto& [name, check] = criteria[id - 1];
    const Outcome o = check();
    std::printf("criterion %d (%s): %s  %s\n", id, name,
                o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
