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

// Naive exhaustive solvers. They share nothing with the dynamic program
// beyond the data types and exist to check it.

#ifndef BALCLUST_ORACLE_HPP_
#define BALCLUST_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "balclust/dp.hpp"
#include "balclust/graph.hpp"
#include "balclust/spanning_tree.hpp"

namespace balclust {

struct EnumerationBudget {
  int max_nodes_tree = 10;
  int max_nodes_graph = 7;
  std::int64_t max_cases = 50'000'000;

  // Defaults overridden by BALCLUST_BUDGET, a comma-separated list of
  // key=value pairs (max_nodes_tree, max_nodes_graph, max_cases). Throws
  // kParse on malformed or non-positive values.
  static EnumerationBudget FromEnvironment();
  static EnumerationBudget Parse(std::string_view spec);
};

// Minimum over all C(n-1, k-1) cut sets of the tree. Ties go to the
// lexicographically smallest sorted cut list. Throws kBudgetExceeded or
// kInvalidK.
SolveResult BruteForceTree(const RootedTree& tree, int k,
                           const EnumerationBudget& budget = {});

// Minimum over all partitions of the graph into k connected blocks, scored
// with the full-graph measure. cut_edges is left empty. Throws
// kBudgetExceeded or kInvalidK.
SolveResult BruteForceGraph(const WeightedGraph& graph, int k,
                            const EnumerationBudget& budget = {});

// One clustering of a subtree, described the way a table cell sees it.
struct SubtreeClustering {
  int clusters = 0;
  int head_column = 0;   // column of the head's lightest inner edge
  double max_out = 0.0;  // heaviest head edge cut inside the subtree
  Ratio quality;         // clustering measure restricted to the subtree
  std::vector<Edge> cuts;
};

// Every clustering of the subtree spanned by `nodes` (which must contain
// `root` and be connected in the tree). Columns refer to the tree's
// ColumnSet.
std::vector<SubtreeClustering> EnumerateSubtreeClusterings(
    const RootedTree& tree, NodeId root, std::span<const NodeId> nodes,
    const EnumerationBudget& budget = {});

// Table for the subtree by definition: enumerate, bin by (row, head mu),
// keep the PairLess minimum, drop cells with b > 1. Provenance is left as
// kLeaf for finite cells.
DPTable BruteForceTable(const RootedTree& tree, NodeId root,
                        std::span<const NodeId> nodes, RowLayout layout,
                        const EnumerationBudget& budget = {});

// Table for T_v, the full subtree below subtree_root.
DPTable BruteForceTable(const RootedTree& tree, NodeId subtree_root,
                        RowLayout layout, const EnumerationBudget& budget = {});

// Nodes of T_v in ascending order.
std::vector<NodeId> SubtreeNodes(const RootedTree& tree, NodeId v);

// The k-clustering obtained by cutting the k-1 lightest tree edges (ties by
// endpoints).
Clustering LightestEdgeCut(const RootedTree& tree, int k);

}  // namespace balclust

#endif  // BALCLUST_ORACLE_HPP_
