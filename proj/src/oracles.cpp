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

#include "v2v/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "v2v/errors.hpp"

namespace v2v {

BruteForceResult BruteForceMaxWeight(const WeightMatrix& w) {
  const std::size_t n = w.size();
  if (n > 10) throw CapacityError("brute force limited to n <= 10");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BruteForceResult best;
  bool first = true;
  do {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += w(i, perm[i]);
    if (first || total > best.weight) {
      best.weight = total;
      best.permutation = perm;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

WeightMatrix RandomWeightMatrix(std::mt19937_64& rng, std::size_t n,
                                std::int64_t low, std::int64_t high) {
  std::uniform_int_distribution<std::int64_t> dist(low, high);
  WeightMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = dist(rng);
  }
  return w;
}

PreferenceLists RandomPreferences(std::mt19937_64& rng, std::size_t n,
                                  std::size_t k, double accept_prob) {
  std::bernoulli_distribution listed(accept_prob);
  std::vector<std::vector<std::size_t>> consumers(n);
  std::vector<std::vector<std::size_t>> providers(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (listed(rng)) consumers[i].push_back(j);
      if (listed(rng)) providers[j].push_back(i);
    }
  }
  for (auto& list : consumers) std::shuffle(list.begin(), list.end(), rng);
  for (auto& list : providers) std::shuffle(list.begin(), list.end(), rng);
  return PreferenceLists(std::move(consumers), std::move(providers));
}

std::size_t ConsumerPartnerRank(const Matching& m, const PreferenceLists& p,
                                std::size_t i) {
  const auto partner = m.PartnerOfLeft(i);
  return partner ? p.ConsumerRank(i, *partner) : PreferenceLists::kUnranked;
}

std::size_t ProviderPartnerRank(const Matching& m, const PreferenceLists& p,
                                std::size_t j) {
  const auto partner = m.PartnerOfRight(j);
  return partner ? p.ProviderRank(j, *partner) : PreferenceLists::kUnranked;
}

nlohmann::json ToJson(const WeightMatrix& w) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < w.size(); ++j) row.push_back(w(i, j));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json ToJson(const PreferenceLists& prefs) {
  nlohmann::json consumers = nlohmann::json::array();
  for (std::size_t i = 0; i < prefs.num_consumers(); ++i) {
    consumers.push_back(prefs.consumer(i));
  }
  nlohmann::json providers = nlohmann::json::array();
  for (std::size_t j = 0; j < prefs.num_providers(); ++j) {
    providers.push_back(prefs.provider(j));
  }
  return {{"consumers", consumers}, {"providers", providers}};
}

nlohmann::json ToJson(const Matching& m) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : m.edges) edges.push_back({e.left, e.right});
  return edges;
}

}  // namespace v2v
