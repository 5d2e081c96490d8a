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

#include <vector>

#include "balclust/error.hpp"
#include "balclust/generators.hpp"
#include "balclust/measure.hpp"
#include "balclust/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace balclust;
using namespace balclust::testing;

TEST_CASE("max_out on the four-node example") {
  const WeightedGraph g = G4();
  const std::vector<NodeId> all = {kA, kB, kC, kD};
  const std::vector<NodeId> ab = {kA, kB};
  const std::vector<NodeId> a = {kA};
  CHECK(MaxOut(g, all) == 0.0);
  CHECK(MaxOut(g, ab) == 0.2);
  CHECK(MaxOut(g, a) == 0.9);
}

TEST_CASE("phi_cluster on the four-node example") {
  const WeightedGraph g = G4();
  const std::vector<NodeId> all = {kA, kB, kC, kD};
  const std::vector<NodeId> a = {kA};
  const std::vector<NodeId> cd = {kC, kD};
  CHECK(PhiCluster(g, all) == Ratio::Zero());
  CHECK(PhiCluster(g, a).SameTerms(Ratio(0.9, 1.0)));
  CHECK(PhiCluster(g, cd).SameTerms(Ratio(0.2, 0.8)));
  CHECK(PhiCluster(g, cd).value() == doctest::Approx(0.25));
}

TEST_CASE("phi_cluster uses the lightest edge of the inner spanning tree") {
  // {a,b,c}: inner MST is ab 0.9 + bc 0.2, the 0.15 edge is not in it.
  const std::vector<NodeId> abc = {kA, kB, kC};
  CHECK(PhiCluster(G4(), abc).SameTerms(Ratio(0.8, 0.2)));
}

TEST_CASE("phi_cluster rejects clusters that are not connected") {
  const std::vector<Edge> path = {{0, 1, 0.3}, {1, 2, 0.4}};
  const std::vector<NodeId> ends = {0, 2};
  try {
    PhiCluster(BuildGraph(3, path), ends);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDisconnectedCluster);
  }
}

TEST_CASE("phi_clustering on the four-node example") {
  const WeightedGraph g = G4();
  CHECK(PhiClustering(g, {{{kA, kB}, {kC, kD}}}).value() ==
        doctest::Approx(0.25));
  CHECK(PhiClustering(g, {{{kA, kB, kC, kD}}}) == Ratio::Zero());
  CHECK(PhiClustering(g, {{{kA}, {kB}, {kC}, {kD}}}).SameTerms(Ratio(0.9, 1)));
}

TEST_CASE("phi_clustering validates the partition") {
  const WeightedGraph g = G4();
  CHECK_THROWS_AS(PhiClustering(g, {{{kA, kB}, {kB, kC, kD}}}), Error);
  CHECK_THROWS_AS(PhiClustering(g, {{{kA, kB}, {kC}}}), Error);
  CHECK_THROWS_AS(PhiClustering(g, {{{kA, kB, kC, kD}, {}}}), Error);
}

TEST_CASE("phi_restricted on the example path") {
  const RootedTree t = G4Tree();
  CHECK(PhiRestricted(t, {{{kA, kB}, {kC, kD}}}).value() ==
        doctest::Approx(0.25));
  CHECK(PhiRestricted(t, {{{kA, kB, kC, kD}}}) == Ratio::Zero());
  CHECK(PhiRestricted(t, {{{kA}, {kB, kC, kD}}}).SameTerms(Ratio(0.9, 0.2)));
}

TEST_CASE("phi_restricted rejects clusters split by the tree") {
  try {
    PhiRestricted(G4Tree(), {{{kA, kC}, {kB, kD}}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kClusterNotConnectedInTree);
  }
}

TEST_CASE("graph and tree measures agree on clusterings cut from the tree") {
  // With distinct weights the heaviest edge leaving a subtree of the maximum
  // spanning tree is a tree edge, and the subtree is the inner spanning tree.
  Rng rng(5);
  std::uniform_int_distribution<int> size(2, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = size(rng);
    const WeightedGraph g = RandomConnectedGraph(n, 0.7, rng);
    const RootedTree t = MaximumSpanningRootedTree(g);
    std::vector<Edge> cuts;
    for (const Edge& e : t.edges()) {
      if (rng() % 3 == 0) cuts.push_back(e);
    }
    const Clustering c = ClusteringFromCuts(t, cuts);
    REQUIRE(PhiClustering(g, c) == PhiRestricted(t, c));
  }
}
