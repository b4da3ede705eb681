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

#include "v2v/metrics.hpp"

#include <string>
#include <unordered_map>

#include "v2v/errors.hpp"
#include "v2v/utility.hpp"

namespace v2v {

namespace {

template <typename T>
std::unordered_map<int, const T*> IndexById(const std::vector<T>& items) {
  std::unordered_map<int, const T*> index;
  for (const T& item : items) index.emplace(item.id, &item);
  return index;
}

template <typename T>
const T& Lookup(const std::unordered_map<int, const T*>& index, int id,
                const char* what) {
  auto it = index.find(id);
  if (it == index.end()) {
    throw ArgumentError(std::string("plan references unknown ") + what + " " +
                        std::to_string(id));
  }
  return *it->second;
}

}  // namespace

WelfareReport SocialWelfare(const TradePlan& plan, const Scenario& scenario) {
  const auto consumers = IndexById(scenario.consumers);
  const auto providers = IndexById(scenario.providers);
  WelfareReport report;
  for (const Trade& t : plan.trades) {
    Lookup(consumers, t.consumer_id, "consumer");
    Lookup(providers, t.provider_id, "provider");
    report.v2v += t.u_consumer + t.u_provider;
  }
  for (const StationFallback& f : plan.station_fallbacks) {
    Lookup(consumers, f.consumer_id, "consumer");
    report.v2v += f.u_consumer;
  }
  for (const ConsumerEV& c : scenario.consumers) {
    report.baseline += ConsumerStationUtility(c, scenario.stations,
                                              scenario.prices, scenario.metric)
                           .utility;
  }
  report.baseline += StationSumUtility(scenario.consumers, scenario.prices);
  return report;
}

EnergyReport EnergyConsumption(const TradePlan& plan,
                               const Scenario& scenario) {
  const auto consumers = IndexById(scenario.consumers);
  const auto providers = IndexById(scenario.providers);
  const auto lots = IndexById(scenario.lots);
  auto station_km = [&](const ConsumerEV& c) {
    return ConsumerStationUtility(c, scenario.stations, scenario.prices,
                                  scenario.metric)
        .distance_km;
  };

  EnergyReport report;
  for (const Trade& t : plan.trades) {
    const ConsumerEV& c = Lookup(consumers, t.consumer_id, "consumer");
    const ProviderEV& p = Lookup(providers, t.provider_id, "provider");
    const Facility& lot = Lookup(lots, t.lot_id, "lot");
    report.v2v_kwh += c.beta_c * scenario.Dist(c.position, lot.position) +
                      p.beta_p * scenario.Dist(p.position, lot.position);
    report.transfer_loss_kwh += (1.0 - scenario.prices.eta) * c.a_c;
  }
  for (const StationFallback& f : plan.station_fallbacks) {
    const ConsumerEV& c = Lookup(consumers, f.consumer_id, "consumer");
    report.v2v_kwh += c.beta_c * station_km(c);
  }
  for (const ConsumerEV& c : scenario.consumers) {
    report.baseline_kwh += c.beta_c * station_km(c);
  }
  report.reduction_kwh = report.baseline_kwh - report.v2v_kwh;
  return report;
}

std::pair<TradePlan, double> TimedRun(const Scenario& scenario,
                                      Algorithm algorithm) {
  ProtocolStats stats;
  TradePlan plan = RunProtocol(scenario, algorithm, &stats);
  return {std::move(plan), stats.matching_seconds};
}

RunReport Report(const TradePlan& plan, const Scenario& scenario,
                 double wall_time_s) {
  RunReport r;
  for (const Trade& t : plan.trades) {
    r.consumer_utilities[t.consumer_id] = t.u_consumer;
    r.provider_utilities[t.provider_id] = t.u_provider;
  }
  for (const StationFallback& f : plan.station_fallbacks) {
    r.consumer_utilities[f.consumer_id] = f.u_consumer;
  }
  for (int id : plan.idle_providers) r.provider_utilities[id] = Money();
  r.welfare = SocialWelfare(plan, scenario);
  r.energy = EnergyConsumption(plan, scenario);
  r.wall_time_s = wall_time_s;
  return r;
}

}  // namespace v2v
