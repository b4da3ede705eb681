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

#include "v2v/matching.hpp"

namespace v2v {

nlohmann::json MatchingToJson(const MarketGraph& graph, const Matching& m) {
  ValidateMatching(m, graph.size(), graph.size());
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : m.edges) {
    if (e.left >= graph.n_consumers || e.right >= graph.n_providers) continue;
    const auto& eval = graph.Eval(e.left, e.right);
    if (!eval) continue;
    out.push_back({{"consumer_id", eval->consumer_id},
                   {"provider_id", eval->provider_id},
                   {"lot_id", eval->lot_id},
                   {"u_consumer", eval->u_consumer.cents()},
                   {"u_provider", eval->u_provider.cents()},
                   {"weight", eval->edge_weight.cents()}});
  }
  return out;
}

}  // namespace v2v
