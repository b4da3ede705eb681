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

// Domain entities of the V2V charging market and the seeded generator of
// randomized world snapshots.
//
// Units used throughout: positions in km, velocities in km/h, energy in kWh,
// prices in cents/kWh, time values in cents/hour.

#ifndef V2V_SCENARIO_HPP_
#define V2V_SCENARIO_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "v2v/money.hpp"

namespace v2v {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class DistanceMetric { kEuclidean, kManhattan };

// Driving distance between two positions. Symmetric and nonnegative.
double Distance(Point a, Point b,
                DistanceMetric metric = DistanceMetric::kEuclidean);

struct PriceSchedule {
  double p_t = 15.0;   // V2V trading price
  double p_s = 18.0;   // grid selling price at charging stations
  double p_b = 10.0;   // grid buying price for surplus energy
  double p_0 = 8.0;    // provider's original cost price
  double eta = 0.95;   // V2V transfer efficiency
  double tau = 0.01;   // transfer time, hours per kWh

  // Throws ConfigError unless p_b < p_t < p_s, 0 < eta <= 1, tau >= 0 and
  // every price is nonnegative.
  void Validate() const;
  friend bool operator==(const PriceSchedule&, const PriceSchedule&) = default;
};

struct ConsumerEV {
  int id = 0;
  Point position;
  double velocity = 0.0;
  Point heading{1.0, 0.0};
  double a_c = 0.0;     // requested energy
  double beta_c = 0.0;  // driving energy, kWh/km
  int fail_count = 0;
  friend bool operator==(const ConsumerEV&, const ConsumerEV&) = default;
};

struct ProviderEV {
  int id = 0;
  Point position;
  double velocity = 0.0;
  Point heading{1.0, 0.0};
  double a_p = 0.0;      // surplus available for trading
  double beta_p = 0.0;   // driving energy, kWh/km
  double theta_p = 0.0;  // value of time, cents/hour
  double phi = 0.0;      // battery replacement cost, cents
  double degradation = 0.0;  // capacity degradation coefficient, 1/kWh

  // Battery degradation cost per transferred kWh.
  double DegradationPerKwh() const { return phi * degradation; }
  friend bool operator==(const ProviderEV&, const ProviderEV&) = default;
};

enum class FacilityKind { kChargingStation, kParkingLot };

struct Facility {
  FacilityKind kind = FacilityKind::kParkingLot;
  Point position;
  int id = 0;
  friend bool operator==(const Facility&, const Facility&) = default;
};

struct Range {
  double low = 0.0;
  double high = 0.0;
  friend bool operator==(const Range&, const Range&) = default;
};

struct ScenarioConfig {
  int n_consumers = 10;
  int k_providers = 10;
  double width_km = 20.0;
  double height_km = 20.0;
  PriceSchedule prices;
  Range velocity{20.0, 60.0};
  Range beta{0.2, 0.5};
  Range a_c{20.0, 40.0};
  Range a_p{20.0, 60.0};
  Range theta{30.0, 90.0};
  // phi * D, applied with phi = this value and D = 1.
  double phi_d = 0.5;
  int m_max = 3;
  double virtual_edge_cents = -1e9;
  DistanceMetric metric = DistanceMetric::kEuclidean;
  std::uint64_t seed = 0;

  void Validate() const;
};

struct Scenario {
  std::vector<ConsumerEV> consumers;
  std::vector<ProviderEV> providers;
  std::vector<Facility> stations;
  std::vector<Facility> lots;
  PriceSchedule prices;
  double width_km = 20.0;
  double height_km = 20.0;
  std::uint64_t seed = 0;
  int m_max = 3;
  Money virtual_edge = Money::FromCents(-1e9);
  DistanceMetric metric = DistanceMetric::kEuclidean;

  double Dist(Point a, Point b) const { return Distance(a, b, metric); }

  // Checks id uniqueness, positive EV parameters and the price ordering.
  void Validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Two stations at (w/2, h/4) and (w/2, 3h/4), i.e. (10,5) and (10,15) on the
// 20 km square.
std::vector<Facility> DefaultStations(double width_km, double height_km);

// 25 parking lots at the centers of a uniform 5x5 grid.
std::vector<Facility> DefaultLots(double width_km, double height_km);

// Identical (config, seed) pairs give identical scenarios on every platform:
// the generator uses mt19937_64 and its own double conversion.
Scenario GenerateScenario(const ScenarioConfig& config, std::uint64_t seed);

// Moves every EV along its heading for dt hours, clamping to the bounds.
Scenario AdvanceMotion(const Scenario& scenario, double dt_hours);

// JSON mapping for configs and scenarios.
ScenarioConfig ConfigFromJson(const nlohmann::json& j);
nlohmann::json ConfigToJson(const ScenarioConfig& config);
nlohmann::json ScenarioToJson(const Scenario& scenario);
Scenario ScenarioFromJson(const nlohmann::json& j);

std::string ToString(DistanceMetric metric);
DistanceMetric DistanceMetricFromString(const std::string& name);

}  // namespace v2v

#endif  // V2V_SCENARIO_HPP_
