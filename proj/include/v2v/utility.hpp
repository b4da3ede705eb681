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

// Trading utilities of consumers and providers, the charging-station
// alternative, and parking-lot selection.
//
// Consumer, trading at a lot:
//   U_c = -p_t * a_c - p_t * beta_c * d(c, lot)
// Consumer, charging at the nearest station:
//   U_cs = -p_s * a_c - p_s * beta_c * d(c, station)
// Provider:
//   U_p = p_t * a_c - p_0 * a_c / eta - p_t * beta_p * d(p, lot)
//         - theta_p * (d(p, lot) / v_p + tau * a_c / eta) - phi * D * a_c
//
// The consumer's travel to a lot is priced at p_t while travel to a station
// is priced at p_s, so the same physical kWh carries two prices. Only the
// provider pays for time.

#ifndef V2V_UTILITY_HPP_
#define V2V_UTILITY_HPP_

#include <span>

#include "json.hpp"
#include "v2v/money.hpp"
#include "v2v/scenario.hpp"

namespace v2v {

struct TradeEvaluation {
  int consumer_id = 0;
  int provider_id = 0;
  int lot_id = 0;
  Money u_consumer;
  Money u_provider;
  Money edge_weight;
  bool feasible = false;
};

struct StationChoice {
  Money utility;
  int station_id = 0;
  double distance_km = 0.0;
};

Money ConsumerTradeUtility(const ConsumerEV& c, const Facility& lot,
                           const PriceSchedule& prices,
                           DistanceMetric metric = DistanceMetric::kEuclidean);

// Nearest station wins; equal distances go to the lowest station id.
// Throws ConfigError on an empty station list.
StationChoice ConsumerStationUtility(
    const ConsumerEV& c, std::span<const Facility> stations,
    const PriceSchedule& prices,
    DistanceMetric metric = DistanceMetric::kEuclidean);

// Throws FeasibilityError when p.a_p < c.a_c.
Money ProviderTradeUtility(const ProviderEV& p, const ConsumerEV& c,
                           const Facility& lot, const PriceSchedule& prices,
                           DistanceMetric metric = DistanceMetric::kEuclidean);

// Lot minimizing the pair's combined travel terms (and so maximizing the edge
// weight). Ties go to the lowest lot id. Throws ConfigError on no lots.
const Facility& SelectParkingLot(
    const ConsumerEV& c, const ProviderEV& p, std::span<const Facility> lots,
    const PriceSchedule& prices,
    DistanceMetric metric = DistanceMetric::kEuclidean);

// Infeasible pairs come back with feasible=false and the scenario's virtual
// edge penalty as weight; nothing is thrown.
TradeEvaluation EvaluatePair(const ConsumerEV& c, const ProviderEV& p,
                             const Scenario& scenario);

// Charging-station revenue sum_i p_s * a_c.
Money StationSumUtility(std::span<const ConsumerEV> consumers,
                        const PriceSchedule& prices);

nlohmann::json ToJson(const TradeEvaluation& e);

}  // namespace v2v

#endif  // V2V_UTILITY_HPP_
