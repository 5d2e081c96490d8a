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

// Fixtures shared by the unit tests and the acceptance driver.

#ifndef BALCLUST_TESTS_SUPPORT_HPP_
#define BALCLUST_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <vector>

#include "balclust/generators.hpp"
#include "balclust/graph.hpp"
#include "balclust/spanning_tree.hpp"

namespace balclust::testing {

// Node ids of the four-node example graph.
inline constexpr NodeId kA = 0, kB = 1, kC = 2, kD = 3;

// Complete graph on {a,b,c,d}: ab 0.9, bc 0.2, cd 0.8, ac 0.15, ad 0.1,
// bd 0.12. Its maximum spanning tree is the path a-b-c-d.
inline WeightedGraph G4() {
  const std::vector<Edge> edges = {{kA, kB, 0.9},  {kB, kC, 0.2},
                                   {kC, kD, 0.8},  {kA, kC, 0.15},
                                   {kA, kD, 0.1},  {kB, kD, 0.12}};
  return BuildGraph(4, edges, {"a", "b", "c", "d"});
}

inline RootedTree G4Tree() {
  const std::vector<Edge> path = {{kA, kB, 0.9}, {kB, kC, 0.2}, {kC, kD, 0.8}};
  return RootTree(4, path, kA);
}

// Star with center p=0 and leaves u=1 (0.9) and v=2 (0.4), rooted at p.
inline constexpr NodeId kP = 0, kU = 1, kV = 2;

inline RootedTree StarTree() {
  const std::vector<Edge> edges = {{kP, kU, 0.9}, {kP, kV, 0.4}};
  return RootTree(3, edges, kP);
}

inline WeightedGraph TreeAsGraph(const RootedTree& tree) {
  const std::vector<Edge> edges = tree.edges();
  return BuildGraph(tree.node_count(), edges);
}

// Same tree with node ids relabelled by `perm` (old id -> new id), rooted
// at the image of the old root.
inline RootedTree Relabel(const RootedTree& tree,
                          const std::vector<NodeId>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : tree.edges()) {
    edges.push_back({perm[e.u], perm[e.v], e.weight});
  }
  return RootTree(tree.node_count(), edges, perm[tree.root()]);
}

inline std::vector<NodeId> RandomPermutation(int n, Rng& rng) {
  std::vector<NodeId> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace balclust::testing

#endif  // BALCLUST_TESTS_SUPPORT_HPP_
