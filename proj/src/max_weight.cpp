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
#include <cstdint>
#include <limits>
#include <vector>

#include "v2v/matching.hpp"

namespace v2v {

bool VertexLabeling::IsFeasible(const WeightMatrix& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (left[i] + right[j] < w(i, j)) return false;
    }
  }
  return true;
}

namespace {

class KuhnMunkres {
 public:
  KuhnMunkres(const WeightMatrix& w, const LabelingObserver& observer)
      : w_(w),
        n_(w.size()),
        observer_(observer),
        left_mate_(n_, kUnmatched),
        right_mate_(n_, kUnmatched),
        in_s_(n_),
        in_t_(n_),
        slack_(n_),
        slack_from_(n_) {
    labels_.left.resize(n_);
    labels_.right.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      std::int64_t best = w_(i, 0);
      for (std::size_t j = 1; j < n_; ++j) best = std::max(best, w_(i, j));
      labels_.left[i] = best;
    }
  }

  Matching Solve() {
    GreedyInitialMatching();
    Notify();
    for (std::size_t root = 0; root < n_; ++root) {
      if (left_mate_[root] == kUnmatched) GrowFrom(root);
    }
    Matching m;
    m.edges.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) m.edges.push_back({i, left_mate_[i]});
    return m;
  }

 private:
  std::int64_t Slack(std::size_t i, std::size_t j) const {
    return labels_.left[i] + labels_.right[j] - w_(i, j);
  }

  void Notify() const {
    if (observer_) observer_(labels_, left_mate_);
  }

  // Seed the matching with tight edges, first free provider per consumer.
  void GreedyInitialMatching() {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (right_mate_[j] == kUnmatched && Slack(i, j) == 0) {
          left_mate_[i] = j;
          right_mate_[j] = i;
          break;
        }
      }
    }
  }

  void AddToS(std::size_t i) {
    in_s_[i] = true;
    for (std::size_t j = 0; j < n_; ++j) {
      if (in_t_[j]) continue;
      const std::int64_t s = Slack(i, j);
      if (s < slack_[j]) {
        slack_[j] = s;
        slack_from_[j] = i;
      }
    }
  }

  // Shift labels by the smallest slack between S and the providers outside
  // T. Keeps the labeling feasible and makes at least one new edge tight.
  void Relabel() {
    std::int64_t delta = 0;
    bool found = false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!in_t_[j] && (!found || slack_[j] < delta)) {
        delta = slack_[j];
        found = true;
      }
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (in_s_[i]) labels_.left[i] -= delta;
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (in_t_[j]) {
        labels_.right[j] += delta;
      } else {
        slack_[j] -= delta;
      }
    }
    Notify();
  }

  void Augment(std::size_t j) {
    while (j != kUnmatched) {
      const std::size_t i = slack_from_[j];
      const std::size_t previous = left_mate_[i];
      left_mate_[i] = j;
      right_mate_[j] = i;
      j = previous;
    }
    Notify();
  }

  void GrowFrom(std::size_t root) {
    std::fill(in_s_.begin(), in_s_.end(), false);
    std::fill(in_t_.begin(), in_t_.end(), false);
    std::fill(slack_.begin(), slack_.end(),
              std::numeric_limits<std::int64_t>::max());
    AddToS(root);
    while (true) {
      // Neighbours of S in the equality graph that are not yet in T; a free
      // one ends the search, otherwise the lowest index extends the tree.
      std::size_t free_j = kUnmatched;
      std::size_t matched_j = kUnmatched;
      for (std::size_t j = 0; j < n_; ++j) {
        if (in_t_[j] || slack_[j] != 0) continue;
        if (right_mate_[j] == kUnmatched) {
          free_j = j;
          break;
        }
        if (matched_j == kUnmatched) matched_j = j;
      }
      if (free_j != kUnmatched) {
        Augment(free_j);
        return;
      }
      if (matched_j == kUnmatched) {
        Relabel();
        continue;
      }
      in_t_[matched_j] = true;
      AddToS(right_mate_[matched_j]);
    }
  }

  const WeightMatrix& w_;
  const std::size_t n_;
  const LabelingObserver& observer_;
  VertexLabeling labels_;
  std::vector<std::size_t> left_mate_;
  std::vector<std::size_t> right_mate_;
  std::vector<bool> in_s_;
  std::vector<bool> in_t_;
  std::vector<std::int64_t> slack_;
  std::vector<std::size_t> slack_from_;
};

}  // namespace

Matching MaxWeightMatching(const WeightMatrix& w,
                           const LabelingObserver& observer) {
  if (w.size() == 0) return {};
  return KuhnMunkres(w, observer).Solve();
}

Matching MaxWeightMatching(const MarketGraph& g) {
  return MaxWeightMatching(g.weights);
}

}  // namespace v2v
