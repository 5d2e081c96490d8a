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

// Randomized checks of the solver against the exhaustive oracles. Every
// generator is seeded, so failures reproduce.

#include <algorithm>
#include <random>
#include <vector>

#include "balclust/dp.hpp"
#include "balclust/generators.hpp"
#include "balclust/measure.hpp"
#include "balclust/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace balclust;
using namespace balclust::testing;

TEST_CASE("fixed k matches the tree oracle on random trees") {
  Rng rng(101);
  std::uniform_int_distribution<int> size(2, 9);
  for (int trial = 0; trial < 150; ++trial) {
    const RootedTree t = RandomTree(size(rng), rng);
    for (int k = 1; k <= t.node_count(); ++k) {
      const SolveResult dp = SolveFixedK(t, k);
      const SolveResult brute = BruteForceTree(t, k);
      INFO("trial " << trial << " k " << k);
      REQUIRE(dp.phi == brute.phi);
      REQUIRE(static_cast<int>(dp.clustering.size()) == k);
      REQUIRE(static_cast<int>(dp.cut_edges.size()) == k - 1);
      REQUIRE(PhiRestricted(t, dp.clustering) == dp.phi);
    }
  }
}

TEST_CASE("the optimum does not depend on node numbering or root") {
  Rng rng(202);
  std::uniform_int_distribution<int> size(2, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const RootedTree t = RandomTree(size(rng), rng);
    const int n = t.node_count();
    const RootedTree relabelled = Relabel(t, RandomPermutation(n, rng));
    const RootedTree rerooted =
        RootTree(n, t.edges(), static_cast<NodeId>(rng() % n));
    const int k = 1 + static_cast<int>(rng() % n);
    const Ratio phi = SolveFixedK(t, k).phi;
    REQUIRE(SolveFixedK(relabelled, k).phi == phi);
    REQUIRE(SolveFixedK(rerooted, k).phi == phi);
    if (n >= 2) REQUIRE(SolveAnyK(relabelled).phi == SolveAnyK(t).phi);
  }
}

TEST_CASE("any k equals the best fixed k") {
  Rng rng(303);
  std::uniform_int_distribution<int> size(2, 14);
  for (int trial = 0; trial < 100; ++trial) {
    const RootedTree t = RandomTree(size(rng), rng);
    Ratio best = SolveFixedK(t, 2).phi;
    for (int k = 3; k <= t.node_count(); ++k) {
      best = std::min(best, SolveFixedK(t, k).phi);
    }
    const SolveResult any = SolveAnyK(t);
    REQUIRE(any.phi == best);
    REQUIRE(any.k >= 2);
    REQUIRE(static_cast<int>(any.clustering.size()) == any.k);
    REQUIRE(PhiRestricted(t, any.clustering) == any.phi);
  }
}

TEST_CASE("every fixed k answer is at most one") {
  Rng rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    const RootedTree t = RandomTree(30, rng);
    for (int k = 1; k <= 30; ++k) {
      REQUIRE(SolveFixedK(t, k).phi <= Ratio::One());
    }
  }
}

TEST_CASE("tied weights: any maximum spanning tree gives the graph optimum") {
  Rng rng(505);
  const std::vector<double> levels = {0.25, 0.5, 0.75};
  std::uniform_int_distribution<int> size(3, 6);
  std::uniform_int_distribution<int> level(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = size(rng);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) edges.push_back({i, j, levels[level(rng)]});
    }
    const WeightedGraph g = BuildGraph(n, edges);
    const auto perm = RandomPermutation(n, rng);
    std::vector<Edge> moved;
    for (const Edge& e : edges) moved.push_back({perm[e.u], perm[e.v], e.weight});
    const WeightedGraph h = BuildGraph(n, moved);
    const RootedTree tg = MaximumSpanningRootedTree(g);
    const RootedTree th = MaximumSpanningRootedTree(h);
    for (int k = 1; k <= n; ++k) {
      const Ratio phi = SolveFixedK(tg, k).phi;
      INFO("trial " << trial << " k " << k);
      REQUIRE(SolveFixedK(th, k).phi == phi);
      REQUIRE(BruteForceGraph(g, k).phi == phi);
    }
  }
}

TEST_CASE("tables match the oracle on random subtrees") {
  Rng rng(606);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 80; ++trial) {
    const RootedTree t = RandomTree(size(rng), rng);
    for (const RowLayout layout :
         {RowLayout::FixedK(t.node_count()), RowLayout::AnyK()}) {
      const DPState state = BuildRootTable(t, layout);
      for (NodeId v = 0; v < t.node_count(); ++v) {
        const DPTable& dp = state.table_of(v);
        const DPTable brute = BruteForceTable(t, v, layout);
        for (int r = 0; r < layout.rows(); ++r) {
          for (int c = 0; c < dp.columns().size(); ++c) {
            INFO("trial " << trial << " node " << v << " cell " << r << ","
                          << c);
            REQUIRE(dp.cell(r, c).value == brute.cell(r, c).value);
          }
        }
      }
    }
  }
}
