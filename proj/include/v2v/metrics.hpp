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

#ifndef V2V_METRICS_HPP_
#define V2V_METRICS_HPP_

#include <map>
#include <utility>

#include "v2v/money.hpp"
#include "v2v/protocol.hpp"
#include "v2v/scenario.hpp"

namespace v2v {

struct WelfareReport {
  // Sum over trades of u_consumer + u_provider, plus the station utility of
  // every fallback consumer.
  Money v2v;
  // Every consumer charges at its nearest station; the stations' revenue
  // sum_i p_s * a_c is added.
  Money baseline;
};

// Driving energy in kWh. Transfer losses are reported separately and are not
// part of the reduction.
struct EnergyReport {
  double v2v_kwh = 0.0;
  double baseline_kwh = 0.0;
  double reduction_kwh = 0.0;  // baseline - v2v; may be negative
  double transfer_loss_kwh = 0.0;  // sum over trades of (1 - eta) * a_c
};

// Throws ArgumentError when the plan names ids absent from the scenario.
WelfareReport SocialWelfare(const TradePlan& plan, const Scenario& scenario);
EnergyReport EnergyConsumption(const TradePlan& plan, const Scenario& scenario);

struct RunReport {
  std::map<int, Money> consumer_utilities;
  std::map<int, Money> provider_utilities;  // idle providers get zero
  WelfareReport welfare;
  EnergyReport energy;
  double wall_time_s = 0.0;
};

// The plan plus the seconds spent inside the matching calls.
std::pair<TradePlan, double> TimedRun(const Scenario& scenario,
                                      Algorithm algorithm);

RunReport Report(const TradePlan& plan, const Scenario& scenario,
                 double wall_time_s = 0.0);

}  // namespace v2v

#endif  // V2V_METRICS_HPP_
