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

// Matching algorithms over the market graph:
//
//  * MaxWeightMatching: Kuhn-Munkres with vertex labels. Starts from the
//    feasible labeling l(left i) = max_j W[i][j], l(right j) = 0, grows an
//    alternating tree from each free consumer inside the equality graph and
//    relabels by the minimum slack over S x (not T) when the tree is stuck.
//    O(n^3) for an n x n matrix.
//
//  * ConsumerOrientedMatching / ProviderOrientedMatching: deferred
//    acceptance in synchronous rounds on acceptability-filtered preference
//    lists. The proposing side gets its optimal stable matching.
//
//  * IsStable and EnumerateStableMatchings: the checks used as oracles.

#ifndef V2V_MATCHING_HPP_
#define V2V_MATCHING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "json.hpp"
#include "v2v/graph.hpp"
#include "v2v/scenario.hpp"

namespace v2v {

inline constexpr std::size_t kUnmatched =
    std::numeric_limits<std::size_t>::max();

struct VertexLabeling {
  std::vector<std::int64_t> left;
  std::vector<std::int64_t> right;

  // l(u) + l(v) >= W[u][v] for every pair.
  bool IsFeasible(const WeightMatrix& w) const;
  bool IsTight(const WeightMatrix& w, std::size_t i, std::size_t j) const {
    return left[i] + right[j] == w(i, j);
  }
};

// Invoked after the initial matching, after every relabeling and after every
// augmentation. left_mate[i] is kUnmatched for free consumers.
using LabelingObserver = std::function<void(
    const VertexLabeling& labels, const std::vector<std::size_t>& left_mate)>;

// Perfect matching of maximum total weight on a square matrix. Free
// consumers are processed in ascending order and ties among candidate
// providers go to the lowest index.
Matching MaxWeightMatching(const WeightMatrix& w,
                           const LabelingObserver& observer = {});
Matching MaxWeightMatching(const MarketGraph& g);

// Strict preference orders over acceptable partners. Indices refer to graph
// rows (consumers) and columns (providers).
class PreferenceLists {
 public:
  static constexpr std::size_t kUnranked = kUnmatched;

  PreferenceLists() = default;
  // Throws ArgumentError for out-of-range or repeated entries.
  PreferenceLists(std::vector<std::vector<std::size_t>> consumer_prefs,
                  std::vector<std::vector<std::size_t>> provider_prefs);

  std::size_t num_consumers() const { return consumer_prefs_.size(); }
  std::size_t num_providers() const { return provider_prefs_.size(); }

  const std::vector<std::size_t>& consumer(std::size_t i) const {
    return consumer_prefs_[i];
  }
  const std::vector<std::size_t>& provider(std::size_t j) const {
    return provider_prefs_[j];
  }

  // Position of provider j in consumer i's list, or kUnranked.
  std::size_t ConsumerRank(std::size_t i, std::size_t j) const {
    return Widen(consumer_rank_[i * num_providers() + j]);
  }
  // Position of consumer i in provider j's list, or kUnranked.
  std::size_t ProviderRank(std::size_t j, std::size_t i) const {
    return Widen(provider_rank_[j * num_consumers() + i]);
  }

  // The same lists with the two sides swapped.
  PreferenceLists Transposed() const;

 private:
  std::vector<std::vector<std::size_t>> consumer_prefs_;
  std::vector<std::vector<std::size_t>> provider_prefs_;
  // Stored narrow to keep the dense tables cache-friendly.
  using StoredRank = std::uint32_t;
  static constexpr StoredRank kStoredUnranked =
      std::numeric_limits<StoredRank>::max();
  static std::size_t Widen(StoredRank r) {
    return r == kStoredUnranked ? kUnranked : r;
  }
  static std::vector<StoredRank> RankTable(
      const std::vector<std::vector<std::size_t>>& lists, std::size_t others,
      const char* side);

  std::vector<StoredRank> consumer_rank_;
  std::vector<StoredRank> provider_rank_;
};

// A provider is acceptable to a consumer when the pair is feasible and the
// trade beats the consumer's nearest-station utility; a consumer is
// acceptable to a provider when the pair is feasible and the provider's
// utility is positive. Equal utilities are ordered by ascending id.
PreferenceLists BuildPreferences(const Scenario& scenario,
                                 const MarketGraph& graph);

// Deferred acceptance with consumers proposing. Edges are (consumer,
// provider).
Matching ConsumerOrientedMatching(const PreferenceLists& prefs);

// Deferred acceptance with providers proposing. Edges are (consumer,
// provider).
Matching ProviderOrientedMatching(const PreferenceLists& prefs);

struct StabilityReport {
  bool stable = true;
  // First violating (consumer, provider) pair in lexicographic order: either
  // a matched pair that one side finds unacceptable, or a blocking pair.
  std::optional<Edge> violation;
};

StabilityReport IsStable(const Matching& m, const PreferenceLists& prefs);

// Every stable matching, partial ones included, in lexicographic order of
// their edge lists. Throws CapacityError when min(N, K) > 7.
std::vector<Matching> EnumerateStableMatchings(const PreferenceLists& prefs);

// Real feasible edges of m as a list of {consumer_id, provider_id, lot_id,
// u_consumer, u_provider, weight}, amounts in cents. Padding and penalty
// edges are left out.
nlohmann::json MatchingToJson(const MarketGraph& graph, const Matching& m);

}  // namespace v2v

#endif  // V2V_MATCHING_HPP_
