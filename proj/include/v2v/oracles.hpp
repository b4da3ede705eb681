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

// Exhaustive reference solvers and random instance generators used to
// cross-check the matching algorithms.

#ifndef V2V_ORACLES_HPP_
#define V2V_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "v2v/graph.hpp"
#include "v2v/matching.hpp"

namespace v2v {

struct BruteForceResult {
  std::int64_t weight = 0;
  // permutation[i] is the column assigned to row i.
  std::vector<std::size_t> permutation;
};

// Maximum over all n! permutations. Throws CapacityError for n > 10.
BruteForceResult BruteForceMaxWeight(const WeightMatrix& w);

WeightMatrix RandomWeightMatrix(std::mt19937_64& rng, std::size_t n,
                                std::int64_t low, std::int64_t high);

// Each consumer/provider pair is listed on each side independently with
// probability accept_prob; lists are shuffled into random strict orders.
PreferenceLists RandomPreferences(std::mt19937_64& rng, std::size_t n,
                                  std::size_t k, double accept_prob);

// Rank of the partner of consumer i (or provider j) in m, with
// PreferenceLists::kUnranked for unmatched.
std::size_t ConsumerPartnerRank(const Matching& m, const PreferenceLists& p,
                                std::size_t i);
std::size_t ProviderPartnerRank(const Matching& m, const PreferenceLists& p,
                                std::size_t j);

nlohmann::json ToJson(const WeightMatrix& w);
nlohmann::json ToJson(const PreferenceLists& prefs);
nlohmann::json ToJson(const Matching& m);

}  // namespace v2v

#endif  // V2V_ORACLES_HPP_
