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

#ifndef BALCLUST_SPANNING_TREE_HPP_
#define BALCLUST_SPANNING_TREE_HPP_

#include <span>
#include <vector>

#include "balclust/graph.hpp"

namespace balclust {

// Union by rank with path halving.
class DisjointSet {
 public:
  explicit DisjointSet(int n);

  int Find(int x);
  // Returns false if x and y were already in the same set.
  bool Unite(int x, int y);
  int set_count() const { return set_count_; }

 private:
  std::vector<int> parent_;
  std::vector<unsigned char> rank_;
  int set_count_;
};

// Spanning tree hung from a root. Children are kept in ascending index
// order and post_order lists every child before its parent, root last.
class RootedTree {
 public:
  int node_count() const { return static_cast<int>(parent_.size()); }
  NodeId root() const { return root_; }

  bool is_root(NodeId v) const { return parent_[v] < 0; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  // Weight of the edge {v, parent(v)}; undefined for the root.
  double parent_weight(NodeId v) const { return parent_weight_[v]; }
  const std::vector<NodeId>& children(NodeId v) const { return children_[v]; }
  const std::vector<NodeId>& post_order() const { return post_order_; }

  // Distinct edge weights, strictly increasing.
  const std::vector<double>& distinct_weights() const {
    return distinct_weights_;
  }

  // Tree edges as (min, max) endpoint pairs, sorted by endpoints.
  std::vector<Edge> edges() const;

 private:
  friend RootedTree RootTree(int, std::span<const Edge>, NodeId);

  NodeId root_ = 0;
  std::vector<NodeId> parent_;
  std::vector<double> parent_weight_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<NodeId> post_order_;
  std::vector<double> distinct_weights_;
};

// Kruskal on weights sorted descending; equal weights are taken in
// ascending (min endpoint, max endpoint) order. Throws kDisconnected.
std::vector<Edge> MaximumSpanningTree(const WeightedGraph& graph);

// Throws kNotATree unless the edges form a spanning tree of node_count nodes.
RootedTree RootTree(int node_count, std::span<const Edge> tree_edges,
                    NodeId root = 0);

// Convenience: maximum spanning tree of the graph rooted at node 0.
RootedTree MaximumSpanningRootedTree(const WeightedGraph& graph);

// Cycle-property check: every non-tree edge is no heavier than every tree
// edge on the tree path joining its endpoints. False if tree_edges is not a
// spanning tree made of graph edges.
bool VerifyMst(const WeightedGraph& graph, std::span<const Edge> tree_edges);

// Connected components left after removing cut_edges from the tree, in
// canonical order. Throws kNotATree if a cut edge is not a tree edge.
Clustering ClusteringFromCuts(const RootedTree& tree,
                              std::span<const Edge> cut_edges);

}  // namespace balclust

#endif  // BALCLUST_SPANNING_TREE_HPP_
