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

#include "v2v/utility.hpp"

#include <string>

#include "v2v/errors.hpp"

namespace v2v {

Money ConsumerTradeUtility(const ConsumerEV& c, const Facility& lot,
                           const PriceSchedule& prices, DistanceMetric metric) {
  const double travel = Distance(c.position, lot.position, metric);
  return Money::FromCents(-prices.p_t * c.a_c -
                          prices.p_t * c.beta_c * travel);
}

StationChoice ConsumerStationUtility(const ConsumerEV& c,
                                     std::span<const Facility> stations,
                                     const PriceSchedule& prices,
                                     DistanceMetric metric) {
  if (stations.empty()) throw ConfigError("no charging stations configured");
  const Facility* best = nullptr;
  double best_dist = 0.0;
  for (const Facility& s : stations) {
    const double d = Distance(c.position, s.position, metric);
    if (best == nullptr || d < best_dist ||
        (d == best_dist && s.id < best->id)) {
      best = &s;
      best_dist = d;
    }
  }
  return {Money::FromCents(-prices.p_s * c.a_c -
                           prices.p_s * c.beta_c * best_dist),
          best->id, best_dist};
}

Money ProviderTradeUtility(const ProviderEV& p, const ConsumerEV& c,
                           const Facility& lot, const PriceSchedule& prices,
                           DistanceMetric metric) {
  if (p.a_p < c.a_c) {
    throw FeasibilityError("provider " + std::to_string(p.id) +
                           " cannot cover consumer " + std::to_string(c.id));
  }
  const double travel = Distance(p.position, lot.position, metric);
  const double revenue = prices.p_t * c.a_c;
  const double energy_cost = prices.p_0 * c.a_c / prices.eta;
  const double driving_cost = prices.p_t * p.beta_p * travel;
  const double time_cost =
      p.theta_p * (travel / p.velocity + prices.tau * c.a_c / prices.eta);
  const double degradation_cost = p.DegradationPerKwh() * c.a_c;
  return Money::FromCents(revenue - energy_cost - driving_cost - time_cost -
                          degradation_cost);
}

const Facility& SelectParkingLot(const ConsumerEV& c, const ProviderEV& p,
                                 std::span<const Facility> lots,
                                 const PriceSchedule& prices,
                                 DistanceMetric metric) {
  if (lots.empty()) throw ConfigError("no parking lots configured");
  const Facility* best = nullptr;
  double best_cost = 0.0;
  for (const Facility& lot : lots) {
    const double dc = Distance(c.position, lot.position, metric);
    const double dp = Distance(p.position, lot.position, metric);
    const double cost = prices.p_t * c.beta_c * dc +
                        prices.p_t * p.beta_p * dp +
                        p.theta_p * dp / p.velocity;
    if (best == nullptr || cost < best_cost ||
        (cost == best_cost && lot.id < best->id)) {
      best = &lot;
      best_cost = cost;
    }
  }
  return *best;
}

TradeEvaluation EvaluatePair(const ConsumerEV& c, const ProviderEV& p,
                             const Scenario& scenario) {
  TradeEvaluation e;
  e.consumer_id = c.id;
  e.provider_id = p.id;
  if (p.a_p < c.a_c) {
    e.feasible = false;
    e.edge_weight = scenario.virtual_edge;
    return e;
  }
  const Facility& lot =
      SelectParkingLot(c, p, scenario.lots, scenario.prices, scenario.metric);
  e.lot_id = lot.id;
  e.u_consumer = ConsumerTradeUtility(c, lot, scenario.prices, scenario.metric);
  e.u_provider =
      ProviderTradeUtility(p, c, lot, scenario.prices, scenario.metric);
  e.edge_weight = e.u_consumer + e.u_provider;
  e.feasible = true;
  return e;
}

Money StationSumUtility(std::span<const ConsumerEV> consumers,
                        const PriceSchedule& prices) {
  Money total;
  for (const auto& c : consumers) total += Money::FromCents(prices.p_s * c.a_c);
  return total;
}

nlohmann::json ToJson(const TradeEvaluation& e) {
  return {{"consumer_id", e.consumer_id},
          {"provider_id", e.provider_id},
          {"lot_id", e.lot_id},
          {"u_consumer", e.u_consumer.cents()},
          {"u_provider", e.u_provider.cents()},
          {"edge_weight", e.edge_weight.cents()},
          {"feasible", e.feasible}};
}

}  // namespace v2v
