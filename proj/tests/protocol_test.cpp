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
#include <set>

#include "gtest/gtest.h"
#include "test_support.hpp"
#include "v2v/errors.hpp"
#include "v2v/utility.hpp"

namespace v2v {
namespace {

using testing::Lot;
using testing::MakeConsumer;
using testing::MakeProvider;

Scenario AcceptedPair() {
  Scenario s = testing::EmptyScenario();
  s.lots = {Lot(1, {10, 9})};
  s.consumers = {MakeConsumer(1, {10, 7}, 20, 0.25)};
  s.providers = {MakeProvider(1, {11, 9}, 40, 0.3, 60, 30)};
  return s;
}

// Trading costs the consumer more than driving to the station.
Scenario RejectedPair() {
  Scenario s = testing::EmptyScenario();
  s.lots = {Lot(1, {10, 20})};
  s.consumers = {MakeConsumer(1, {10, 7}, 20, 0.5)};
  s.providers = {MakeProvider(1, {10, 20}, 40, 0.3, 60, 30)};
  return s;
}

TEST(RunProtocolTest, AcceptedInFirstRound) {
  const Scenario s = AcceptedPair();
  const StationChoice station =
      ConsumerStationUtility(s.consumers[0], s.stations, s.prices);
  ASSERT_EQ(station.utility.ToString(), "-369.0000");
  for (Algorithm a : kAllAlgorithms) {
    const TradePlan plan = RunProtocol(s, a);
    ASSERT_EQ(plan.trades.size(), 1u) << ToString(a);
    const Trade& t = plan.trades[0];
    EXPECT_EQ(t.u_consumer.ToString(), "-307.5000");
    EXPECT_NEAR(t.u_provider.cents(), 102.447, 0.001);
    EXPECT_EQ(t.lot_id, 1);
    EXPECT_EQ(t.energy_kwh, 20.0);
    EXPECT_EQ(plan.rounds_used, 1);
    EXPECT_TRUE(plan.station_fallbacks.empty());
    EXPECT_TRUE(plan.idle_providers.empty());
  }
}

TEST(RunProtocolTest, RejectedPairFallsBackToStation) {
  const Scenario s = RejectedPair();
  const TradeEvaluation e = EvaluatePair(s.consumers[0], s.providers[0], s);
  const StationChoice station =
      ConsumerStationUtility(s.consumers[0], s.stations, s.prices);
  ASSERT_LT(e.u_consumer, station.utility);

  ProtocolStats stats;
  const TradePlan plan = RunProtocol(s, Algorithm::kMaxWeight, &stats);
  EXPECT_TRUE(plan.trades.empty());
  ASSERT_EQ(plan.station_fallbacks.size(), 1u);
  EXPECT_EQ(plan.station_fallbacks[0].station_id, station.station_id);
  EXPECT_EQ(plan.station_fallbacks[0].u_consumer, station.utility);
  // The rejected pairing is withdrawn, so the second round finds nothing
  // left to propose and the consumer falls back without further failures.
  EXPECT_EQ(plan.station_fallbacks[0].fail_count, 1);
  EXPECT_EQ(stats.rejections, 1);
  EXPECT_EQ(plan.rounds_used, 2);
  EXPECT_EQ(plan.idle_providers, std::vector<int>{1});
}

TEST(RunProtocolTest, RepeatOffenderEvictedAfterMaxFailures) {
  Scenario s = RejectedPair();
  s.consumers[0].fail_count = s.m_max;
  const TradePlan plan = RunProtocol(s, Algorithm::kMaxWeight);
  ASSERT_EQ(plan.station_fallbacks.size(), 1u);
  EXPECT_EQ(plan.station_fallbacks[0].fail_count, s.m_max + 1);
  EXPECT_EQ(plan.rounds_used, 1);
}

TEST(RunProtocolTest, StableVariantsNeverProposeUnacceptablePairs) {
  const Scenario s = RejectedPair();
  for (Algorithm a :
       {Algorithm::kConsumerOriented, Algorithm::kProviderOriented}) {
    ProtocolStats stats;
    const TradePlan plan = RunProtocol(s, a, &stats);
    EXPECT_EQ(stats.rejections, 0);
    EXPECT_EQ(plan.rounds_used, 1);
    EXPECT_EQ(plan.station_fallbacks.size(), 1u);
  }
}

TEST(RunProtocolTest, EmptyMarket) {
  ScenarioConfig config;
  config.n_consumers = 0;
  config.k_providers = 4;
  const Scenario s = GenerateScenario(config, 1);
  for (Algorithm a : kAllAlgorithms) {
    const TradePlan plan = RunProtocol(s, a);
    EXPECT_TRUE(plan.trades.empty());
    EXPECT_TRUE(plan.station_fallbacks.empty());
    EXPECT_EQ(plan.idle_providers, (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(plan.rounds_used, 0);
  }
}

TEST(RunProtocolTest, NoProvidersMeansEveryoneFallsBack) {
  ScenarioConfig config;
  config.n_consumers = 3;
  config.k_providers = 0;
  const Scenario s = GenerateScenario(config, 1);
  const TradePlan plan = RunProtocol(s, Algorithm::kMaxWeight);
  EXPECT_EQ(plan.station_fallbacks.size(), 3u);
  EXPECT_EQ(plan.rounds_used, 0);
}

TEST(RunProtocolTest, PlanInvariantsOnRandomScenarios) {
  ScenarioConfig config;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    config.n_consumers = 1 + static_cast<int>(seed % 12);
    config.k_providers = 1 + static_cast<int>((seed / 12) % 12);
    const Scenario s = GenerateScenario(config, seed);
    for (Algorithm a : kAllAlgorithms) {
      const TradePlan plan = RunProtocol(s, a);
      std::multiset<int> consumers;
      std::set<int> providers;
      for (const Trade& t : plan.trades) {
        consumers.insert(t.consumer_id);
        EXPECT_TRUE(providers.insert(t.provider_id).second);
        const ConsumerEV& c = s.consumers[t.consumer_index];
        const ProviderEV& p = s.providers[t.provider_index];
        EXPECT_GE(p.a_p, c.a_c);
        const TradeEvaluation e = EvaluatePair(c, p, s);
        EXPECT_EQ(e.u_consumer, t.u_consumer);
        EXPECT_EQ(e.u_provider, t.u_provider);
        EXPECT_GT(t.u_consumer,
                  ConsumerStationUtility(c, s.stations, s.prices).utility);
        EXPECT_GT(t.u_provider, Money{});
      }
      for (const StationFallback& f : plan.station_fallbacks) {
        consumers.insert(f.consumer_id);
        EXPECT_EQ(f.u_consumer,
                  ConsumerStationUtility(s.consumers[f.consumer_index],
                                         s.stations, s.prices)
                      .utility);
      }
      for (const ConsumerEV& c : s.consumers) {
        EXPECT_EQ(consumers.count(c.id), 1u);
      }
      EXPECT_EQ(consumers.size(), s.consumers.size());
      for (int id : plan.idle_providers) {
        EXPECT_FALSE(providers.contains(id));
      }
      EXPECT_EQ(providers.size() + plan.idle_providers.size(),
                s.providers.size());
      const int bound =
          s.m_max * std::max(config.n_consumers, config.k_providers) + 1;
      EXPECT_LE(plan.rounds_used, bound);
      if (a != Algorithm::kMaxWeight) EXPECT_EQ(plan.rounds_used, 1);
    }
  }
}

TEST(RunProtocolTest, Deterministic) {
  const Scenario s = GenerateScenario(ScenarioConfig{}, 12);
  for (Algorithm a : kAllAlgorithms) {
    EXPECT_EQ(ToJson(RunProtocol(s, a)).dump(), ToJson(RunProtocol(s, a)).dump());
  }
}

TEST(AlgorithmNameTest, RoundTripAndUnknown) {
  for (Algorithm a : kAllAlgorithms) {
    EXPECT_EQ(AlgorithmFromString(ToString(a)), a);
  }
  EXPECT_THROW(AlgorithmFromString("foo"), ArgumentError);
}

TEST(TradePlanCsvTest, OneRowPerConsumer) {
  Scenario s = AcceptedPair();
  s.consumers.push_back(MakeConsumer(2, {10, 5}, 30, 0.3));
  const TradePlan plan = RunProtocol(s, Algorithm::kMaxWeight);
  const std::string csv = ToCsv(plan);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "consumer_id,outcome,partner_id,lot_or_station_id,"
            "u_consumer_cents,u_provider_cents");
  EXPECT_NE(csv.find("\n1,trade,1,1,-307.5000,102.4474\n"), std::string::npos)
      << csv;
  EXPECT_NE(csv.find("\n2,station,,1,-540.0000,\n"), std::string::npos) << csv;
}

}  // namespace
}  // namespace v2v
