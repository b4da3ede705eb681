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

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "v2v/errors.hpp"
#include "v2v/matching.hpp"
#include "v2v/utility.hpp"

namespace v2v {

std::vector<PreferenceLists::StoredRank> PreferenceLists::RankTable(
    const std::vector<std::vector<std::size_t>>& lists, std::size_t others,
    const char* side) {
  std::vector<StoredRank> rank(lists.size() * others, kStoredUnranked);
  for (std::size_t a = 0; a < lists.size(); ++a) {
    if (lists[a].size() >= kStoredUnranked) {
      throw CapacityError(std::string(side) + " preference list too long");
    }
    for (std::size_t pos = 0; pos < lists[a].size(); ++pos) {
      const std::size_t b = lists[a][pos];
      if (b >= others) {
        throw ArgumentError(std::string(side) + " preference out of range");
      }
      StoredRank& slot = rank[a * others + b];
      if (slot != kStoredUnranked) {
        throw ArgumentError(std::string(side) + " preference repeats an entry");
      }
      slot = static_cast<StoredRank>(pos);
    }
  }
  return rank;
}

PreferenceLists::PreferenceLists(
    std::vector<std::vector<std::size_t>> consumer_prefs,
    std::vector<std::vector<std::size_t>> provider_prefs)
    : consumer_prefs_(std::move(consumer_prefs)),
      provider_prefs_(std::move(provider_prefs)) {
  consumer_rank_ =
      RankTable(consumer_prefs_, provider_prefs_.size(), "consumer");
  provider_rank_ =
      RankTable(provider_prefs_, consumer_prefs_.size(), "provider");
}

PreferenceLists PreferenceLists::Transposed() const {
  PreferenceLists t;
  t.consumer_prefs_ = provider_prefs_;
  t.provider_prefs_ = consumer_prefs_;
  t.consumer_rank_ = provider_rank_;
  t.provider_rank_ = consumer_rank_;
  return t;
}

PreferenceLists BuildPreferences(const Scenario& scenario,
                                 const MarketGraph& graph) {
  const std::size_t n = graph.n_consumers;
  const std::size_t k = graph.n_providers;
  std::vector<Money> station(n);
  for (std::size_t i = 0; i < n; ++i) {
    station[i] = ConsumerStationUtility(
                     scenario.consumers.at(graph.left[i].index),
                     scenario.stations, scenario.prices, scenario.metric)
                     .utility;
  }

  std::vector<std::vector<std::size_t>> consumer_prefs(n);
  std::vector<std::vector<std::size_t>> provider_prefs(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& e = graph.Eval(i, j);
      if (!e) continue;
      if (e->u_consumer > station[i]) consumer_prefs[i].push_back(j);
      if (e->u_provider > Money()) provider_prefs[j].push_back(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::stable_sort(consumer_prefs[i].begin(), consumer_prefs[i].end(),
                     [&](std::size_t a, std::size_t b) {
                       const auto& ea = *graph.Eval(i, a);
                       const auto& eb = *graph.Eval(i, b);
                       if (ea.u_consumer != eb.u_consumer) {
                         return ea.u_consumer > eb.u_consumer;
                       }
                       return ea.provider_id < eb.provider_id;
                     });
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::stable_sort(provider_prefs[j].begin(), provider_prefs[j].end(),
                     [&](std::size_t a, std::size_t b) {
                       const auto& ea = *graph.Eval(a, j);
                       const auto& eb = *graph.Eval(b, j);
                       if (ea.u_provider != eb.u_provider) {
                         return ea.u_provider > eb.u_provider;
                       }
                       return ea.consumer_id < eb.consumer_id;
                     });
  }
  return PreferenceLists(std::move(consumer_prefs), std::move(provider_prefs));
}

namespace {

// Deferred acceptance in synchronous rounds. Every free proposer with a
// non-empty list proposes to the head of its list; each receiver keeps the
// best acceptable offer among its hold and the new proposals and rejects the
// rest; rejected proposers drop the head of their list. Ranks are strict, so
// the outcome of a round does not depend on proposal order. Returns the held
// proposer per receiver.
template <typename ListOf, typename RankOf>
std::vector<std::size_t> DeferredAcceptance(std::size_t n_prop,
                                            std::size_t n_recv,
                                            ListOf list_of, RankOf rank_of) {
  std::vector<std::size_t> head(n_prop, 0);
  std::vector<std::size_t> hold(n_recv, kUnmatched);

  std::vector<std::size_t> free;
  for (std::size_t p = 0; p < n_prop; ++p) {
    if (!list_of(p).empty()) free.push_back(p);
  }
  std::vector<std::size_t> rejected;
  while (!free.empty()) {
    rejected.clear();
    for (std::size_t p : free) {
      const std::size_t r = list_of(p)[head[p]];
      const std::size_t rank = rank_of(r, p);
      if (rank == PreferenceLists::kUnranked) {
        rejected.push_back(p);
      } else if (hold[r] == kUnmatched) {
        hold[r] = p;
      } else if (rank < rank_of(r, hold[r])) {
        rejected.push_back(hold[r]);
        hold[r] = p;
      } else {
        rejected.push_back(p);
      }
    }
    free.clear();
    for (std::size_t p : rejected) {
      if (++head[p] < list_of(p).size()) free.push_back(p);
    }
  }
  return hold;
}

}  // namespace

Matching ConsumerOrientedMatching(const PreferenceLists& prefs) {
  const std::vector<std::size_t> hold = DeferredAcceptance(
      prefs.num_consumers(), prefs.num_providers(),
      [&](std::size_t i) -> const auto& { return prefs.consumer(i); },
      [&](std::size_t j, std::size_t i) { return prefs.ProviderRank(j, i); });
  Matching m;
  for (std::size_t j = 0; j < hold.size(); ++j) {
    if (hold[j] != kUnmatched) m.edges.push_back({hold[j], j});
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Matching ProviderOrientedMatching(const PreferenceLists& prefs) {
  const std::vector<std::size_t> hold = DeferredAcceptance(
      prefs.num_providers(), prefs.num_consumers(),
      [&](std::size_t j) -> const auto& { return prefs.provider(j); },
      [&](std::size_t i, std::size_t j) { return prefs.ConsumerRank(i, j); });
  Matching m;
  for (std::size_t i = 0; i < hold.size(); ++i) {
    if (hold[i] != kUnmatched) m.edges.push_back({i, hold[i]});
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

StabilityReport IsStable(const Matching& m, const PreferenceLists& prefs) {
  const std::size_t n = prefs.num_consumers();
  const std::size_t k = prefs.num_providers();
  ValidateMatching(m, n, k);
  std::vector<std::size_t> consumer_mate(n, kUnmatched);
  std::vector<std::size_t> provider_mate(k, kUnmatched);
  for (const Edge& e : m.edges) {
    consumer_mate[e.left] = e.right;
    provider_mate[e.right] = e.left;
  }
  // Unmatched ranks below every acceptable partner.
  auto consumer_current = [&](std::size_t i) {
    return consumer_mate[i] == kUnmatched
               ? PreferenceLists::kUnranked
               : prefs.ConsumerRank(i, consumer_mate[i]);
  };
  auto provider_current = [&](std::size_t j) {
    return provider_mate[j] == kUnmatched
               ? PreferenceLists::kUnranked
               : prefs.ProviderRank(j, provider_mate[j]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t ci = prefs.ConsumerRank(i, j);
      const std::size_t pj = prefs.ProviderRank(j, i);
      if (consumer_mate[i] == j) {
        if (ci == PreferenceLists::kUnranked ||
            pj == PreferenceLists::kUnranked) {
          return {false, Edge{i, j}};
        }
        continue;
      }
      if (ci == PreferenceLists::kUnranked || pj == PreferenceLists::kUnranked) {
        continue;
      }
      if (ci < consumer_current(i) && pj < provider_current(j)) {
        return {false, Edge{i, j}};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

constexpr std::size_t kMaxEnumerationSide = 7;

// Walks the smaller side; each vertex stays single or takes a mutually
// acceptable, still-free partner. Pairs that are not mutually acceptable can
// never appear in a stable matching, so skipping them loses nothing.
class StableEnumerator {
 public:
  explicit StableEnumerator(const PreferenceLists& prefs)
      : prefs_(prefs),
        walk_consumers_(prefs.num_consumers() <= prefs.num_providers()),
        used_(walk_consumers_ ? prefs.num_providers() : prefs.num_consumers(),
              false) {}

  std::vector<Matching> Run() {
    Recurse(0);
    std::sort(found_.begin(), found_.end(),
              [](const Matching& a, const Matching& b) {
                return a.edges < b.edges;
              });
    return std::move(found_);
  }

 private:
  std::size_t WalkSize() const {
    return walk_consumers_ ? prefs_.num_consumers() : prefs_.num_providers();
  }

  bool Acceptable(std::size_t walker, std::size_t other) const {
    const std::size_t i = walk_consumers_ ? walker : other;
    const std::size_t j = walk_consumers_ ? other : walker;
    return prefs_.ConsumerRank(i, j) != PreferenceLists::kUnranked &&
           prefs_.ProviderRank(j, i) != PreferenceLists::kUnranked;
  }

  void Recurse(std::size_t walker) {
    if (walker == WalkSize()) {
      Matching m{current_};
      std::sort(m.edges.begin(), m.edges.end());
      if (IsStable(m, prefs_).stable) found_.push_back(std::move(m));
      return;
    }
    Recurse(walker + 1);
    for (std::size_t other = 0; other < used_.size(); ++other) {
      if (used_[other] || !Acceptable(walker, other)) continue;
      used_[other] = true;
      current_.push_back(walk_consumers_ ? Edge{walker, other}
                                         : Edge{other, walker});
      Recurse(walker + 1);
      current_.pop_back();
      used_[other] = false;
    }
  }

  const PreferenceLists& prefs_;
  const bool walk_consumers_;
  std::vector<bool> used_;
  std::vector<Edge> current_;
  std::vector<Matching> found_;
};

}  // namespace

std::vector<Matching> EnumerateStableMatchings(const PreferenceLists& prefs) {
  if (std::min(prefs.num_consumers(), prefs.num_providers()) >
      kMaxEnumerationSide) {
    throw CapacityError("stable-matching enumeration limited to min(N, K) <= " +
                        std::to_string(kMaxEnumerationSide));
  }
  return StableEnumerator(prefs).Run();
}

}  // namespace v2v
