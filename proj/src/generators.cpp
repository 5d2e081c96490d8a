// Copyright 2026 The balclust Authors
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

#include "balclust/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace balclust {
namespace {

std::vector<std::pair<NodeId, NodeId>> RandomTreePairs(int n, Rng& rng) {
  std::vector<NodeId> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    pairs.emplace_back(label[i], label[pick(rng)]);
  }
  return pairs;
}

}  // namespace

std::vector<double> DistinctWeights(int count, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::set<double> seen;
  std::vector<double> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const double w = uniform(rng);
    if (w <= 0.0 || w >= 1.0 || !seen.insert(w).second) continue;
    out.push_back(w);
  }
  return out;
}

RootedTree RandomTree(int n, Rng& rng) {
  const auto pairs = RandomTreePairs(n, rng);
  const auto weights = DistinctWeights(n - 1, rng);
  std::vector<Edge> edges;
  for (int i = 0; i < n - 1; ++i) {
    edges.push_back({pairs[i].first, pairs[i].second, weights[i]});
  }
  return RootTree(n, edges, 0);
}

WeightedGraph RandomCompleteGraph(int n, Rng& rng) {
  const auto weights = DistinctWeights(n * (n - 1) / 2, rng);
  std::vector<Edge> edges;
  edges.reserve(weights.size());
  int next = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, weights[next++]});
  }
  return BuildGraph(n, edges);
}

WeightedGraph RandomConnectedGraph(int n, double density, Rng& rng) {
  std::set<std::pair<NodeId, NodeId>> chosen;
  for (const auto& [a, b] : RandomTreePairs(n, rng)) {
    chosen.insert(std::minmax(a, b));
  }
  std::bernoulli_distribution keep(density);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!chosen.contains({i, j}) && keep(rng)) chosen.insert({i, j});
    }
  }
  const auto weights = DistinctWeights(static_cast<int>(chosen.size()), rng);
  std::vector<Edge> edges;
  int next = 0;
  for (const auto& [a, b] : chosen) edges.push_back({a, b, weights[next++]});
  return BuildGraph(n, edges);
}

}  // namespace balclust
