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

// The complete weighted bipartite market graph. Consumers sit on the left,
// providers on the right. The smaller side is padded with virtual vertices
// so the weight matrix is square; every edge touching a virtual vertex, and
// every infeasible real pair, carries the scenario's virtual edge penalty.

#ifndef V2V_GRAPH_HPP_
#define V2V_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "v2v/money.hpp"
#include "v2v/scenario.hpp"
#include "v2v/utility.hpp"

namespace v2v {

// Dense square matrix of integer weights in Money units.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t n, std::int64_t fill = 0)
      : n_(n), data_(n * n, fill) {}
  static WeightMatrix FromRows(
      const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return data_[i * n_ + j];
  }

  // One row per line, tab-separated integers.
  std::string ToText() const;
  static WeightMatrix FromText(const std::string& text);

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

struct Edge {
  std::size_t left = 0;
  std::size_t right = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// At most one edge per vertex on either side; edges kept sorted.
struct Matching {
  std::vector<Edge> edges;

  std::optional<std::size_t> PartnerOfLeft(std::size_t left) const;
  std::optional<std::size_t> PartnerOfRight(std::size_t right) const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Throws ArgumentError when an index is out of range or a vertex repeats.
void ValidateMatching(const Matching& m, std::size_t n_left,
                      std::size_t n_right);

struct GraphVertex {
  bool real = false;
  // Index into Scenario::consumers (left) or Scenario::providers (right);
  // meaningless for virtual vertices.
  std::size_t index = 0;
};

struct MarketGraph {
  std::vector<GraphVertex> left;
  std::vector<GraphVertex> right;
  // Real vertices occupy the first n_consumers rows and n_providers columns.
  std::size_t n_consumers = 0;
  std::size_t n_providers = 0;
  WeightMatrix weights;
  // Row-major, present for real feasible non-excluded edges.
  std::vector<std::optional<TradeEvaluation>> evals;
  Money virtual_edge;

  std::size_t size() const { return weights.size(); }
  const std::optional<TradeEvaluation>& Eval(std::size_t i,
                                             std::size_t j) const {
    return evals[i * size() + j];
  }
};

// Pairs the protocol has ruled out; they get the virtual edge penalty.
using PairFilter = std::function<bool(std::size_t consumer_index,
                                      std::size_t provider_index)>;

// Graph over every consumer and provider of the scenario.
MarketGraph BuildMarketGraph(const Scenario& scenario);

// Graph over a subset of participants, given as indices into the scenario's
// consumer and provider lists.
MarketGraph BuildMarketGraph(const Scenario& scenario,
                             std::span<const std::size_t> consumer_indices,
                             std::span<const std::size_t> provider_indices,
                             const PairFilter& excluded = {});

Money MatchingWeight(const WeightMatrix& w, const Matching& m);
Money MatchingWeight(const MarketGraph& g, const Matching& m);

}  // namespace v2v

#endif  // V2V_GRAPH_HPP_
