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

// Seeded random instances for benchmarks and randomized tests.

#ifndef BALCLUST_GENERATORS_HPP_
#define BALCLUST_GENERATORS_HPP_

#include <random>
#include <vector>

#include "balclust/graph.hpp"
#include "balclust/spanning_tree.hpp"

namespace balclust {

using Rng = std::mt19937_64;

// `count` pairwise distinct weights drawn uniformly from (0,1).
std::vector<double> DistinctWeights(int count, Rng& rng);

// Uniform random attachment tree (node i hangs from a random earlier node,
// then labels are shuffled) with distinct weights, rooted at node 0.
RootedTree RandomTree(int n, Rng& rng);

// Complete graph with distinct weights.
WeightedGraph RandomCompleteGraph(int n, Rng& rng);

// Connected graph: a random spanning tree plus each remaining pair with
// probability `density`. Weights are distinct.
WeightedGraph RandomConnectedGraph(int n, double density, Rng& rng);

}  // namespace balclust

#endif  // BALCLUST_GENERATORS_HPP_
