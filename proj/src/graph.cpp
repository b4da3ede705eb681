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

#include "v2v/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "v2v/errors.hpp"

namespace v2v {

WeightMatrix WeightMatrix::FromRows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  WeightMatrix w(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw ArgumentError("weight matrix must be square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) w(i, j) = rows[i][j];
  }
  return w;
}

std::string WeightMatrix::ToText() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j > 0) out << '\t';
      out << (*this)(i, j);
    }
    out << '\n';
  }
  return out.str();
}

WeightMatrix WeightMatrix::FromText(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::vector<std::int64_t> row;
    std::int64_t v = 0;
    while (fields >> v) row.push_back(v);
    if (!fields.eof()) throw ArgumentError("non-integer matrix entry");
    rows.push_back(std::move(row));
  }
  return FromRows(rows);
}

std::optional<std::size_t> Matching::PartnerOfLeft(std::size_t left) const {
  for (const Edge& e : edges) {
    if (e.left == left) return e.right;
  }
  return std::nullopt;
}

std::optional<std::size_t> Matching::PartnerOfRight(std::size_t right) const {
  for (const Edge& e : edges) {
    if (e.right == right) return e.left;
  }
  return std::nullopt;
}

void ValidateMatching(const Matching& m, std::size_t n_left,
                      std::size_t n_right) {
  std::vector<bool> left_used(n_left, false);
  std::vector<bool> right_used(n_right, false);
  for (const Edge& e : m.edges) {
    if (e.left >= n_left || e.right >= n_right) {
      throw ArgumentError("matching edge index out of range");
    }
    if (left_used[e.left] || right_used[e.right]) {
      throw ArgumentError("matching uses a vertex twice");
    }
    left_used[e.left] = true;
    right_used[e.right] = true;
  }
}

MarketGraph BuildMarketGraph(const Scenario& scenario) {
  std::vector<std::size_t> consumers(scenario.consumers.size());
  std::vector<std::size_t> providers(scenario.providers.size());
  std::iota(consumers.begin(), consumers.end(), 0);
  std::iota(providers.begin(), providers.end(), 0);
  return BuildMarketGraph(scenario, consumers, providers);
}

MarketGraph BuildMarketGraph(const Scenario& scenario,
                             std::span<const std::size_t> consumer_indices,
                             std::span<const std::size_t> provider_indices,
                             const PairFilter& excluded) {
  const std::size_t n =
      std::max(consumer_indices.size(), provider_indices.size());
  MarketGraph g;
  g.virtual_edge = scenario.virtual_edge;
  g.n_consumers = consumer_indices.size();
  g.n_providers = provider_indices.size();
  g.weights = WeightMatrix(n, scenario.virtual_edge.units());
  g.evals.assign(n * n, std::nullopt);
  g.left.resize(n);
  g.right.resize(n);
  for (std::size_t i = 0; i < consumer_indices.size(); ++i) {
    g.left[i] = {true, consumer_indices[i]};
  }
  for (std::size_t j = 0; j < provider_indices.size(); ++j) {
    g.right[j] = {true, provider_indices[j]};
  }
  for (std::size_t i = 0; i < consumer_indices.size(); ++i) {
    const ConsumerEV& c = scenario.consumers.at(consumer_indices[i]);
    for (std::size_t j = 0; j < provider_indices.size(); ++j) {
      if (excluded && excluded(consumer_indices[i], provider_indices[j])) {
        continue;
      }
      const ProviderEV& p = scenario.providers.at(provider_indices[j]);
      TradeEvaluation e = EvaluatePair(c, p, scenario);
      if (!e.feasible) continue;
      g.weights(i, j) = e.edge_weight.units();
      g.evals[i * n + j] = e;
    }
  }
  return g;
}

Money MatchingWeight(const WeightMatrix& w, const Matching& m) {
  ValidateMatching(m, w.size(), w.size());
  Money total;
  for (const Edge& e : m.edges) total += Money::FromUnits(w(e.left, e.right));
  return total;
}

Money MatchingWeight(const MarketGraph& g, const Matching& m) {
  return MatchingWeight(g.weights, m);
}

}  // namespace v2v
