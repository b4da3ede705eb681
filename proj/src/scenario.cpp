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

#include "v2v/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "v2v/errors.hpp"

namespace v2v {

using nlohmann::json;

double Distance(Point a, Point b, DistanceMetric metric) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  if (metric == DistanceMetric::kManhattan) return std::abs(dx) + std::abs(dy);
  return std::hypot(dx, dy);
}

void PriceSchedule::Validate() const {
  if (p_t < 0 || p_s < 0 || p_b < 0 || p_0 < 0) {
    throw ConfigError("prices must be nonnegative");
  }
  if (!(p_b < p_t && p_t < p_s)) {
    throw ConfigError("price ordering p_b < p_t < p_s violated");
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw ConfigError("transfer efficiency eta must lie in (0, 1]");
  }
  if (tau < 0) throw ConfigError("tau must be nonnegative");
}

namespace {

void CheckRange(const Range& r, const char* name, bool positive) {
  if (!(r.low <= r.high)) {
    throw ConfigError(std::string("invalid range for ") + name +
                      ": low > high");
  }
  if (positive ? r.low <= 0 : r.low < 0) {
    throw ConfigError(std::string("range for ") + name +
                      (positive ? " must be positive" : " must be >= 0"));
  }
}

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double Unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double Uniform(std::mt19937_64& rng, const Range& r) {
  return r.low + (r.high - r.low) * Unit(rng);
}

Point RandomHeading(std::mt19937_64& rng) {
  const double angle = 2.0 * std::numbers::pi * Unit(rng);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

void ScenarioConfig::Validate() const {
  if (n_consumers < 0 || k_providers < 0) {
    throw ConfigError("participant counts must be nonnegative");
  }
  if (!(width_km > 0 && height_km > 0)) {
    throw ConfigError("area must be positive");
  }
  prices.Validate();
  CheckRange(velocity, "velocity", true);
  CheckRange(beta, "beta", true);
  CheckRange(a_c, "a_c", true);
  CheckRange(a_p, "a_p", true);
  CheckRange(theta, "theta", false);
  if (phi_d < 0) throw ConfigError("phi_d must be nonnegative");
  if (m_max < 1) throw ConfigError("m_max must be positive");
  if (!(virtual_edge_cents < 0)) {
    throw ConfigError("virtual edge penalty must be negative");
  }
}

void Scenario::Validate() const {
  prices.Validate();
  std::set<int> ids;
  for (const auto& c : consumers) {
    if (!ids.insert(c.id).second) throw ConfigError("duplicate consumer id");
    if (!(c.a_c > 0 && c.beta_c > 0 && c.velocity > 0)) {
      throw ConfigError("consumer " + std::to_string(c.id) +
                        " needs positive a_c, beta_c and velocity");
    }
  }
  ids.clear();
  for (const auto& p : providers) {
    if (!ids.insert(p.id).second) throw ConfigError("duplicate provider id");
    if (!(p.a_p > 0 && p.beta_p > 0 && p.velocity > 0)) {
      throw ConfigError("provider " + std::to_string(p.id) +
                        " needs positive a_p, beta_p and velocity");
    }
    if (p.theta_p < 0 || p.phi < 0 || p.degradation < 0) {
      throw ConfigError("provider " + std::to_string(p.id) +
                        " has a negative cost parameter");
    }
  }
  if (m_max < 1) throw ConfigError("m_max must be positive");
}

std::vector<Facility> DefaultStations(double width_km, double height_km) {
  return {
      {FacilityKind::kChargingStation, {width_km / 2, height_km / 4}, 1},
      {FacilityKind::kChargingStation, {width_km / 2, 3 * height_km / 4}, 2},
  };
}

std::vector<Facility> DefaultLots(double width_km, double height_km) {
  constexpr int kGrid = 5;
  std::vector<Facility> lots;
  lots.reserve(kGrid * kGrid);
  for (int row = 0; row < kGrid; ++row) {
    for (int col = 0; col < kGrid; ++col) {
      lots.push_back({FacilityKind::kParkingLot,
                      {(col + 0.5) * width_km / kGrid,
                       (row + 0.5) * height_km / kGrid},
                      row * kGrid + col + 1});
    }
  }
  return lots;
}

Scenario GenerateScenario(const ScenarioConfig& config, std::uint64_t seed) {
  config.Validate();
  std::mt19937_64 rng(seed);
  const Range x_range{0.0, config.width_km};
  const Range y_range{0.0, config.height_km};

  Scenario s;
  s.prices = config.prices;
  s.width_km = config.width_km;
  s.height_km = config.height_km;
  s.seed = seed;
  s.m_max = config.m_max;
  s.virtual_edge = Money::FromCents(config.virtual_edge_cents);
  s.metric = config.metric;
  s.stations = DefaultStations(config.width_km, config.height_km);
  s.lots = DefaultLots(config.width_km, config.height_km);

  s.consumers.reserve(config.n_consumers);
  for (int i = 0; i < config.n_consumers; ++i) {
    ConsumerEV c;
    c.id = i + 1;
    c.position.x = Uniform(rng, x_range);
    c.position.y = Uniform(rng, y_range);
    c.heading = RandomHeading(rng);
    c.velocity = Uniform(rng, config.velocity);
    c.beta_c = Uniform(rng, config.beta);
    c.a_c = Uniform(rng, config.a_c);
    s.consumers.push_back(c);
  }
  s.providers.reserve(config.k_providers);
  for (int j = 0; j < config.k_providers; ++j) {
    ProviderEV p;
    p.id = j + 1;
    p.position.x = Uniform(rng, x_range);
    p.position.y = Uniform(rng, y_range);
    p.heading = RandomHeading(rng);
    p.velocity = Uniform(rng, config.velocity);
    p.beta_p = Uniform(rng, config.beta);
    p.a_p = Uniform(rng, config.a_p);
    p.theta_p = Uniform(rng, config.theta);
    p.phi = config.phi_d;
    p.degradation = 1.0;
    s.providers.push_back(p);
  }
  return s;
}

namespace {

Point Advance(Point pos, Point heading, double velocity, double dt,
              double width, double height) {
  return {std::clamp(pos.x + heading.x * velocity * dt, 0.0, width),
          std::clamp(pos.y + heading.y * velocity * dt, 0.0, height)};
}

}  // namespace

Scenario AdvanceMotion(const Scenario& scenario, double dt_hours) {
  if (!(dt_hours >= 0)) throw ArgumentError("dt must be nonnegative");
  Scenario next = scenario;
  if (dt_hours == 0) return next;
  for (auto& c : next.consumers) {
    c.position = Advance(c.position, c.heading, c.velocity, dt_hours,
                         next.width_km, next.height_km);
  }
  for (auto& p : next.providers) {
    p.position = Advance(p.position, p.heading, p.velocity, dt_hours,
                         next.width_km, next.height_km);
  }
  return next;
}

std::string ToString(DistanceMetric metric) {
  return metric == DistanceMetric::kManhattan ? "manhattan" : "euclidean";
}

DistanceMetric DistanceMetricFromString(const std::string& name) {
  if (name == "euclidean") return DistanceMetric::kEuclidean;
  if (name == "manhattan") return DistanceMetric::kManhattan;
  throw ConfigError("unknown distance_metric '" + name + "'");
}

// ---------------------------------------------------------------------------
// JSON

namespace {

Range RangeFromJson(const json& j, const char* key, Range fallback) {
  if (!j.contains(key)) return fallback;
  const json& r = j.at(key);
  if (!r.is_array() || r.size() != 2) {
    throw ConfigError(std::string("range '") + key +
                      "' must be a [low, high] pair");
  }
  return {r[0].get<double>(), r[1].get<double>()};
}

json RangeToJson(const Range& r) { return json::array({r.low, r.high}); }

json PointToJson(Point p) { return json::array({p.x, p.y}); }
Point PointFromJson(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json PricesToJson(const PriceSchedule& p) {
  return {{"p_t", p.p_t}, {"p_s", p.p_s}, {"p_b", p.p_b},
          {"p_0", p.p_0}, {"eta", p.eta}, {"tau", p.tau}};
}

PriceSchedule PricesFromJson(const json& j, PriceSchedule p) {
  p.p_t = j.value("p_t", p.p_t);
  p.p_s = j.value("p_s", p.p_s);
  p.p_b = j.value("p_b", p.p_b);
  p.p_0 = j.value("p_0", p.p_0);
  p.eta = j.value("eta", p.eta);
  p.tau = j.value("tau", p.tau);
  return p;
}

json FacilityToJson(const Facility& f) {
  return {{"id", f.id}, {"position", PointToJson(f.position)}};
}

Facility FacilityFromJson(const json& j, FacilityKind kind) {
  return {kind, PointFromJson(j.at("position")), j.at("id").get<int>()};
}

}  // namespace

ScenarioConfig ConfigFromJson(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    ScenarioConfig c;
    c.n_consumers = j.value("n_consumers", c.n_consumers);
    c.k_providers = j.value("k_providers", c.k_providers);
    if (j.contains("area_km")) {
      const json& area = j.at("area_km");
      if (!area.is_array() || area.size() != 2) {
        throw ConfigError("area_km must be [width, height]");
      }
      c.width_km = area[0].get<double>();
      c.height_km = area[1].get<double>();
    }
    if (j.contains("price")) c.prices = PricesFromJson(j.at("price"), c.prices);
    if (j.contains("ranges")) {
      const json& r = j.at("ranges");
      c.velocity = RangeFromJson(r, "velocity", c.velocity);
      c.beta = RangeFromJson(r, "beta", c.beta);
      c.a_c = RangeFromJson(r, "a_c", c.a_c);
      c.a_p = RangeFromJson(r, "a_p", c.a_p);
      c.theta = RangeFromJson(r, "theta", c.theta);
    }
    c.phi_d = j.value("phi_d", c.phi_d);
    c.m_max = j.value("m_max", c.m_max);
    c.virtual_edge_cents = j.value("ne_cents", c.virtual_edge_cents);
    if (j.contains("distance_metric")) {
      c.metric =
          DistanceMetricFromString(j.at("distance_metric").get<std::string>());
    }
    c.seed = j.value("seed", c.seed);
    c.Validate();
    return c;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  }
}

json ConfigToJson(const ScenarioConfig& c) {
  return {{"n_consumers", c.n_consumers},
          {"k_providers", c.k_providers},
          {"area_km", json::array({c.width_km, c.height_km})},
          {"price", PricesToJson(c.prices)},
          {"ranges",
           {{"velocity", RangeToJson(c.velocity)},
            {"beta", RangeToJson(c.beta)},
            {"a_c", RangeToJson(c.a_c)},
            {"a_p", RangeToJson(c.a_p)},
            {"theta", RangeToJson(c.theta)}}},
          {"phi_d", c.phi_d},
          {"m_max", c.m_max},
          {"ne_cents", c.virtual_edge_cents},
          {"distance_metric", ToString(c.metric)},
          {"seed", c.seed}};
}

json ScenarioToJson(const Scenario& s) {
  json consumers = json::array();
  for (const auto& c : s.consumers) {
    consumers.push_back({{"id", c.id},
                         {"position", PointToJson(c.position)},
                         {"velocity", c.velocity},
                         {"heading", PointToJson(c.heading)},
                         {"a_c", c.a_c},
                         {"beta_c", c.beta_c},
                         {"fail_count", c.fail_count}});
  }
  json providers = json::array();
  for (const auto& p : s.providers) {
    providers.push_back({{"id", p.id},
                         {"position", PointToJson(p.position)},
                         {"velocity", p.velocity},
                         {"heading", PointToJson(p.heading)},
                         {"a_p", p.a_p},
                         {"beta_p", p.beta_p},
                         {"theta_p", p.theta_p},
                         {"phi", p.phi},
                         {"degradation", p.degradation}});
  }
  json stations = json::array();
  for (const auto& f : s.stations) stations.push_back(FacilityToJson(f));
  json lots = json::array();
  for (const auto& f : s.lots) lots.push_back(FacilityToJson(f));
  return {{"consumers", consumers},
          {"providers", providers},
          {"stations", stations},
          {"lots", lots},
          {"price", PricesToJson(s.prices)},
          {"area_km", json::array({s.width_km, s.height_km})},
          {"seed", s.seed},
          {"m_max", s.m_max},
          {"ne_units", s.virtual_edge.units()},
          {"distance_metric", ToString(s.metric)}};
}

Scenario ScenarioFromJson(const json& j) {
  try {
    Scenario s;
    for (const auto& c : j.at("consumers")) {
      ConsumerEV ev;
      ev.id = c.at("id").get<int>();
      ev.position = PointFromJson(c.at("position"));
      ev.velocity = c.at("velocity").get<double>();
      ev.heading = PointFromJson(c.at("heading"));
      ev.a_c = c.at("a_c").get<double>();
      ev.beta_c = c.at("beta_c").get<double>();
      ev.fail_count = c.value("fail_count", 0);
      s.consumers.push_back(ev);
    }
    for (const auto& p : j.at("providers")) {
      ProviderEV ev;
      ev.id = p.at("id").get<int>();
      ev.position = PointFromJson(p.at("position"));
      ev.velocity = p.at("velocity").get<double>();
      ev.heading = PointFromJson(p.at("heading"));
      ev.a_p = p.at("a_p").get<double>();
      ev.beta_p = p.at("beta_p").get<double>();
      ev.theta_p = p.at("theta_p").get<double>();
      ev.phi = p.at("phi").get<double>();
      ev.degradation = p.at("degradation").get<double>();
      s.providers.push_back(ev);
    }
    for (const auto& f : j.at("stations")) {
      s.stations.push_back(FacilityFromJson(f, FacilityKind::kChargingStation));
    }
    for (const auto& f : j.at("lots")) {
      s.lots.push_back(FacilityFromJson(f, FacilityKind::kParkingLot));
    }
    s.prices = PricesFromJson(j.at("price"), PriceSchedule{});
    s.width_km = j.at("area_km").at(0).get<double>();
    s.height_km = j.at("area_km").at(1).get<double>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.m_max = j.at("m_max").get<int>();
    s.virtual_edge = Money::FromUnits(j.at("ne_units").get<std::int64_t>());
    s.metric =
        DistanceMetricFromString(j.value("distance_metric", "euclidean"));
    s.Validate();
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad scenario document: ") + e.what());
  }
}

}  // namespace v2v
