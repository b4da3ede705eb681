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

// The control-center loop. Each round builds the market over the EVs still
// in the trading buffer, runs the selected matching algorithm and checks
// every matched pair: the consumer must beat its nearest-station utility and
// the provider must earn a positive utility. Accepted pairs leave the
// buffer. A rejected pair stays in the buffer, is never offered again this
// epoch, and costs the consumer one failure; more than m_max failures send
// the consumer to the nearest charging station. The loop stops once a round
// produces no new rejection.

#ifndef V2V_PROTOCOL_HPP_
#define V2V_PROTOCOL_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "v2v/money.hpp"
#include "v2v/scenario.hpp"

namespace v2v {

enum class Algorithm { kMaxWeight, kConsumerOriented, kProviderOriented };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kMaxWeight,
                                               Algorithm::kConsumerOriented,
                                               Algorithm::kProviderOriented};

// "max-weight", "consumer", "provider".
std::string ToString(Algorithm algorithm);
// Throws ArgumentError on unknown names.
Algorithm AlgorithmFromString(const std::string& name);

struct Trade {
  int consumer_id = 0;
  int provider_id = 0;
  int lot_id = 0;
  double energy_kwh = 0.0;
  Money u_consumer;
  Money u_provider;
  std::size_t consumer_index = 0;
  std::size_t provider_index = 0;
};

struct StationFallback {
  int consumer_id = 0;
  int station_id = 0;
  Money u_consumer;
  int fail_count = 0;
  std::size_t consumer_index = 0;
};

struct TradePlan {
  std::vector<Trade> trades;                 // sorted by consumer id
  std::vector<StationFallback> station_fallbacks;  // sorted by consumer id
  std::vector<int> idle_providers;           // ascending
  int rounds_used = 0;
};

struct ProtocolStats {
  // Wall time spent inside the matching algorithm calls only.
  double matching_seconds = 0.0;
  int rejections = 0;
};

TradePlan RunProtocol(const Scenario& scenario, Algorithm algorithm,
                      ProtocolStats* stats = nullptr);

nlohmann::json ToJson(const TradePlan& plan);

// One row per consumer: consumer_id, outcome, partner_id,
// lot_or_station_id, u_consumer_cents, u_provider_cents.
std::string ToCsv(const TradePlan& plan);

}  // namespace v2v

#endif  // V2V_PROTOCOL_HPP_
