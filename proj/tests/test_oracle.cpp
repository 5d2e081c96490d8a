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

#include <cstdlib>
#include <vector>

#include "balclust/error.hpp"
#include "balclust/measure.hpp"
#include "balclust/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace balclust;
using namespace balclust::testing;

namespace {

void CheckTablesEqual(const DPTable& a, const DPTable& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.columns().size() == b.columns().size());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.columns().size(); ++c) {
      INFO("row " << r << " column " << c);
      CHECK(a.cell(r, c).value == b.cell(r, c).value);
    }
  }
}

}  // namespace

TEST_CASE("tree oracle examples") {
  const RootedTree t = G4Tree();
  const SolveResult two = BruteForceTree(t, 2);
  CHECK(two.phi.value() == doctest::Approx(0.25));
  CHECK(two.cut_edges == std::vector<Edge>{{kB, kC, 0.2}});
  CHECK(BruteForceTree(t, 4).phi.SameTerms(Ratio(0.9, 1.0)));
  CHECK(BruteForceTree(t, 1).phi == Ratio::Zero());

  const std::vector<Edge> pair = {{0, 1, 0.5}};
  CHECK(BruteForceTree(RootTree(2, pair, 0), 2).phi.SameTerms(Ratio(0.5, 1)));
}

TEST_CASE("graph oracle examples") {
  const WeightedGraph g = G4();
  CHECK(BruteForceGraph(g, 2).phi.value() == doctest::Approx(0.25));
  CHECK(BruteForceGraph(g, 1).phi == Ratio::Zero());
  CHECK(BruteForceGraph(g, 4).phi.SameTerms(Ratio(0.9, 1.0)));
}

TEST_CASE("graph oracle on a triangle") {
  const std::vector<Edge> k3 = {{0, 1, 0.9}, {1, 2, 0.8}, {0, 2, 0.5}};
  const WeightedGraph g = BuildGraph(3, k3);
  // Bipartitions: {0}|{1,2}: max(0.9, 0.9/0.8); {1}|{0,2}: max(0.9, 0.9/0.5);
  // {2}|{0,1}: max(0.8, 0.8/0.9) = 0.8/0.9.
  const SolveResult r = BruteForceGraph(g, 2);
  CHECK(r.phi.SameTerms(Ratio(0.8, 0.9)));
  CHECK(r.clustering.clusters == std::vector<Cluster>{{0, 1}, {2}});
}

TEST_CASE("oracle tables reproduce the hand-worked cells") {
  const RootedTree path = G4Tree();
  const RowLayout layout = RowLayout::FixedK(3);
  const DPTable leaf = BruteForceTable(path, kD, layout);
  const auto cols = std::make_shared<const ColumnSet>(path.distinct_weights());
  CheckTablesEqual(leaf, LeafTable(kD, cols, layout));

  const std::vector<NodeId> cd = {kC, kD};
  const DPTable lifted = BruteForceTable(path, kC, cd, layout);
  CHECK(lifted.value(1, 0.8).finite);
  CHECK(lifted.value(1, 0.8).max_out == 0.0);
  CHECK(lifted.value(2, 1.0).max_out == 0.8);
  CheckTablesEqual(lifted, UpToParent(LeafTable(kD, cols, layout), kC, 0.8));

  const RootedTree star = StarTree();
  const auto star_cols =
      std::make_shared<const ColumnSet>(star.distinct_weights());
  const DPTable whole = BruteForceTable(star, kP, layout);
  const DPTable s = UpToParent(LeafTable(kU, star_cols, layout), kP, 0.9);
  CheckTablesEqual(whole, AddChildTree(s, LeafTable(kV, star_cols, layout), 0.4));
  CHECK(whole.value(2, 0.9).quality == Ratio(0.4, 0.9));
  CHECK_FALSE(whole.value(2, 0.4).finite);
}

TEST_CASE("subtree enumeration covers every cut mask") {
  const RootedTree t = G4Tree();
  const std::vector<NodeId> all = {kA, kB, kC, kD};
  const auto list = EnumerateSubtreeClusterings(t, kA, all);
  CHECK(list.size() == 8);
  const std::vector<NodeId> bad_root = {kA, kB};
  CHECK_THROWS_AS(EnumerateSubtreeClusterings(t, kB, bad_root), Error);
  const std::vector<NodeId> gap = {kA, kC};
  CHECK_THROWS_AS(EnumerateSubtreeClusterings(t, kA, gap), Error);
}

TEST_CASE("budget parsing") {
  const EnumerationBudget b =
      EnumerationBudget::Parse("max_nodes_tree=12, max_cases=99");
  CHECK(b.max_nodes_tree == 12);
  CHECK(b.max_nodes_graph == 7);
  CHECK(b.max_cases == 99);
  CHECK_THROWS_AS(EnumerationBudget::Parse("max_nodes_tree"), Error);
  CHECK_THROWS_AS(EnumerationBudget::Parse("max_nodes_tree=0"), Error);
  CHECK_THROWS_AS(EnumerationBudget::Parse("depth=3"), Error);
}

TEST_CASE("budget from the environment") {
  setenv("BALCLUST_BUDGET", "max_nodes_graph=3", 1);
  const EnumerationBudget b = EnumerationBudget::FromEnvironment();
  unsetenv("BALCLUST_BUDGET");
  CHECK(b.max_nodes_graph == 3);
  CHECK(EnumerationBudget::FromEnvironment().max_nodes_graph == 7);
}

TEST_CASE("oracles stop at the budget") {
  EnumerationBudget small;
  small.max_nodes_tree = 3;
  small.max_nodes_graph = 3;
  try {
    BruteForceTree(G4Tree(), 2, small);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
  }
  CHECK_THROWS_AS(BruteForceGraph(G4(), 2, small), Error);
  EnumerationBudget few_cases;
  few_cases.max_cases = 2;
  CHECK_THROWS_AS(BruteForceTree(G4Tree(), 2, few_cases), Error);
}

TEST_CASE("cutting the lightest edges stays within the bound") {
  const RootedTree t = G4Tree();
  for (int k = 1; k <= 4; ++k) {
    const Clustering c = LightestEdgeCut(t, k);
    CHECK(static_cast<int>(c.size()) == k);
    CHECK(PhiRestricted(t, c) <= Ratio::One());
  }
}
