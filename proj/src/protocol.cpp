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

#include "v2v/protocol.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "v2v/errors.hpp"
#include "v2v/graph.hpp"
#include "v2v/matching.hpp"
#include "v2v/utility.hpp"

namespace v2v {

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kMaxWeight:
      return "max-weight";
    case Algorithm::kConsumerOriented:
      return "consumer";
    case Algorithm::kProviderOriented:
      return "provider";
  }
  return "unknown";
}

Algorithm AlgorithmFromString(const std::string& name) {
  for (Algorithm a : kAllAlgorithms) {
    if (ToString(a) == name) return a;
  }
  throw ArgumentError("unknown algorithm '" + name +
                      "' (expected max-weight, consumer or provider)");
}

namespace {

Matching RunAlgorithm(const Scenario& scenario, const MarketGraph& graph,
                      Algorithm algorithm, ProtocolStats* stats) {
  using Clock = std::chrono::steady_clock;
  if (algorithm == Algorithm::kMaxWeight) {
    const auto start = Clock::now();
    Matching m = MaxWeightMatching(graph);
    if (stats) {
      stats->matching_seconds +=
          std::chrono::duration<double>(Clock::now() - start).count();
    }
    return m;
  }
  const PreferenceLists prefs = BuildPreferences(scenario, graph);
  const auto start = Clock::now();
  Matching m = algorithm == Algorithm::kConsumerOriented
                   ? ConsumerOrientedMatching(prefs)
                   : ProviderOrientedMatching(prefs);
  if (stats) {
    stats->matching_seconds +=
        std::chrono::duration<double>(Clock::now() - start).count();
  }
  return m;
}

}  // namespace

TradePlan RunProtocol(const Scenario& scenario, Algorithm algorithm,
                      ProtocolStats* stats) {
  const std::size_t n = scenario.consumers.size();
  const std::size_t k = scenario.providers.size();

  std::vector<StationChoice> station(n);
  std::vector<int> fails(n);
  for (std::size_t i = 0; i < n; ++i) {
    station[i] = ConsumerStationUtility(scenario.consumers[i],
                                        scenario.stations, scenario.prices,
                                        scenario.metric);
    fails[i] = scenario.consumers[i].fail_count;
  }

  std::vector<std::size_t> buffer_c(n);
  std::vector<std::size_t> buffer_p(k);
  std::iota(buffer_c.begin(), buffer_c.end(), 0);
  std::iota(buffer_p.begin(), buffer_p.end(), 0);
  std::vector<bool> rejected_pair(n * k, false);
  const PairFilter excluded = [&](std::size_t ci, std::size_t pj) {
    return rejected_pair[ci * k + pj];
  };

  TradePlan plan;
  auto fall_back = [&](std::size_t ci) {
    plan.station_fallbacks.push_back({scenario.consumers[ci].id,
                                      station[ci].station_id,
                                      station[ci].utility, fails[ci], ci});
  };

  while (!buffer_c.empty() && !buffer_p.empty()) {
    const MarketGraph graph =
        BuildMarketGraph(scenario, buffer_c, buffer_p, excluded);
    ++plan.rounds_used;
    const Matching matching = RunAlgorithm(scenario, graph, algorithm, stats);

    bool rejected_any = false;
    std::vector<bool> consumer_done(n, false);
    std::vector<bool> provider_done(k, false);
    for (const Edge& e : matching.edges) {
      // Virtual vertices and penalty edges are padding, not proposals.
      if (e.left >= graph.n_consumers || e.right >= graph.n_providers) continue;
      const auto& eval = graph.Eval(e.left, e.right);
      if (!eval) continue;
      const std::size_t ci = graph.left[e.left].index;
      const std::size_t pj = graph.right[e.right].index;
      if (eval->u_consumer > station[ci].utility && eval->u_provider > Money()) {
        plan.trades.push_back({eval->consumer_id, eval->provider_id,
                               eval->lot_id, scenario.consumers[ci].a_c,
                               eval->u_consumer, eval->u_provider, ci, pj});
        consumer_done[ci] = true;
        provider_done[pj] = true;
      } else {
        ++fails[ci];
        rejected_pair[ci * k + pj] = true;
        rejected_any = true;
        if (stats) ++stats->rejections;
      }
    }
    for (std::size_t ci : buffer_c) {
      if (!consumer_done[ci] && fails[ci] > scenario.m_max) {
        fall_back(ci);
        consumer_done[ci] = true;
      }
    }
    std::erase_if(buffer_c, [&](std::size_t ci) { return consumer_done[ci]; });
    std::erase_if(buffer_p, [&](std::size_t pj) { return provider_done[pj]; });
    if (!rejected_any) break;
  }
  for (std::size_t ci : buffer_c) fall_back(ci);

  std::vector<bool> provider_traded(k, false);
  for (const Trade& t : plan.trades) provider_traded[t.provider_index] = true;
  for (std::size_t pj = 0; pj < k; ++pj) {
    if (!provider_traded[pj]) {
      plan.idle_providers.push_back(scenario.providers[pj].id);
    }
  }
  std::sort(plan.idle_providers.begin(), plan.idle_providers.end());
  std::sort(plan.trades.begin(), plan.trades.end(),
            [](const Trade& a, const Trade& b) {
              return a.consumer_id < b.consumer_id;
            });
  std::sort(plan.station_fallbacks.begin(), plan.station_fallbacks.end(),
            [](const StationFallback& a, const StationFallback& b) {
              return a.consumer_id < b.consumer_id;
            });
  return plan;
}

nlohmann::json ToJson(const TradePlan& plan) {
  nlohmann::json trades = nlohmann::json::array();
  for (const Trade& t : plan.trades) {
    trades.push_back({{"consumer_id", t.consumer_id},
                      {"provider_id", t.provider_id},
                      {"lot_id", t.lot_id},
                      {"energy", t.energy_kwh},
                      {"u_consumer", t.u_consumer.cents()},
                      {"u_provider", t.u_provider.cents()}});
  }
  nlohmann::json fallbacks = nlohmann::json::array();
  for (const StationFallback& f : plan.station_fallbacks) {
    fallbacks.push_back({{"consumer_id", f.consumer_id},
                         {"station_id", f.station_id},
                         {"u_consumer", f.u_consumer.cents()},
                         {"fail_count", f.fail_count}});
  }
  return {{"trades", trades},
          {"station_fallbacks", fallbacks},
          {"idle_providers", plan.idle_providers},
          {"rounds_used", plan.rounds_used}};
}

std::string ToCsv(const TradePlan& plan) {
  struct Row {
    int consumer_id;
    std::string line;
  };
  std::vector<Row> rows;
  for (const Trade& t : plan.trades) {
    std::ostringstream line;
    line << t.consumer_id << ",trade," << t.provider_id << ',' << t.lot_id
         << ',' << t.u_consumer.ToString() << ',' << t.u_provider.ToString();
    rows.push_back({t.consumer_id, line.str()});
  }
  for (const StationFallback& f : plan.station_fallbacks) {
    std::ostringstream line;
    line << f.consumer_id << ",station,," << f.station_id << ','
         << f.u_consumer.ToString() << ',';
    rows.push_back({f.consumer_id, line.str()});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.consumer_id < b.consumer_id;
  });
  std::string out =
      "consumer_id,outcome,partner_id,lot_or_station_id,u_consumer_cents,"
      "u_provider_cents\n";
  for (const Row& r : rows) out += r.line + '\n';
  return out;
}

}  // namespace v2v
