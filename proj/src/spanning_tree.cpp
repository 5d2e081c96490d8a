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

#include "balclust/spanning_tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "balclust/error.hpp"

namespace balclust {

DisjointSet::DisjointSet(int n) : parent_(n), rank_(n, 0), set_count_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSet::Find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSet::Unite(int x, int y) {
  x = Find(x);
  y = Find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  --set_count_;
  return true;
}

std::vector<Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(parent_.size());
  for (NodeId v = 0; v < node_count(); ++v) {
    if (parent_[v] < 0) continue;
    const auto [a, b] = std::minmax(v, parent_[v]);
    out.push_back({a, b, parent_weight_[v]});
  }
  std::sort(out.begin(), out.end(), EndpointLess);
  return out;
}

std::vector<Edge> MaximumSpanningTree(const WeightedGraph& graph) {
  std::vector<Edge> candidates(graph.edges().begin(), graph.edges().end());
  // Graph edges are already (u < v); order by weight descending, endpoints
  // ascending.
  std::sort(candidates.begin(), candidates.end(),
            [](const Edge& a, const Edge& b) {
              if (a.weight != b.weight) return a.weight > b.weight;
              return EndpointLess(a, b);
            });
  DisjointSet sets(graph.node_count());
  std::vector<Edge> tree;
  tree.reserve(graph.node_count() - 1);
  for (const Edge& e : candidates) {
    if (sets.Unite(e.u, e.v)) {
      tree.push_back(e);
      if (static_cast<int>(tree.size()) == graph.node_count() - 1) break;
    }
  }
  if (static_cast<int>(tree.size()) != graph.node_count() - 1) {
    throw Error(ErrorCode::kDisconnected, "graph has no spanning tree");
  }
  std::sort(tree.begin(), tree.end(), EndpointLess);
  return tree;
}

RootedTree RootTree(int node_count, std::span<const Edge> tree_edges,
                    NodeId root) {
  if (node_count < 1 || root < 0 || root >= node_count) {
    throw Error(ErrorCode::kNotATree, "invalid node count or root");
  }
  if (static_cast<int>(tree_edges.size()) != node_count - 1) {
    throw Error(ErrorCode::kNotATree,
                "expected " + std::to_string(node_count - 1) +
                    " edges, got " + std::to_string(tree_edges.size()));
  }
  std::vector<std::vector<std::pair<NodeId, double>>> adjacent(node_count);
  DisjointSet sets(node_count);
  for (const Edge& e : tree_edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count ||
        e.u == e.v) {
      throw Error(ErrorCode::kNotATree, "edge endpoint out of range");
    }
    if (!sets.Unite(e.u, e.v)) {
      throw Error(ErrorCode::kNotATree, "edges contain a cycle");
    }
    adjacent[e.u].emplace_back(e.v, e.weight);
    adjacent[e.v].emplace_back(e.u, e.weight);
  }

  RootedTree t;
  t.root_ = root;
  t.parent_.assign(node_count, -1);
  t.parent_weight_.assign(node_count, 0.0);
  t.children_.assign(node_count, {});
  t.post_order_.reserve(node_count);

  // Iterative DFS; children sorted ascending before descending into them.
  std::vector<char> visited(node_count, 0);
  std::vector<std::pair<NodeId, std::size_t>> stack;
  visited[root] = 1;
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == 0) {
      for (const auto& [u, w] : adjacent[v]) {
        if (!visited[u]) {
          visited[u] = 1;
          t.parent_[u] = v;
          t.parent_weight_[u] = w;
          t.children_[v].push_back(u);
        }
      }
      std::sort(t.children_[v].begin(), t.children_[v].end());
    }
    if (next < t.children_[v].size()) {
      const NodeId child = t.children_[v][next++];
      stack.emplace_back(child, 0);
    } else {
      t.post_order_.push_back(v);
      stack.pop_back();
    }
  }

  std::set<double> weights;
  for (const Edge& e : tree_edges) weights.insert(e.weight);
  t.distinct_weights_.assign(weights.begin(), weights.end());
  return t;
}

RootedTree MaximumSpanningRootedTree(const WeightedGraph& graph) {
  const std::vector<Edge> edges = MaximumSpanningTree(graph);
  return RootTree(graph.node_count(), edges, 0);
}

bool VerifyMst(const WeightedGraph& graph, std::span<const Edge> tree_edges) {
  const int n = graph.node_count();
  std::set<std::pair<NodeId, NodeId>> in_tree;
  for (const Edge& e : tree_edges) {
    const auto w = graph.weight(e.u, e.v);
    if (!w || *w != e.weight) return false;
    in_tree.insert(std::minmax(e.u, e.v));
  }
  RootedTree tree;
  try {
    tree = RootTree(n, tree_edges, 0);
  } catch (const Error&) {
    return false;
  }
  std::vector<int> depth(n, 0);
  const auto& order = tree.post_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!tree.is_root(*it)) depth[*it] = depth[tree.parent(*it)] + 1;
  }
  for (const Edge& e : graph.edges()) {
    if (in_tree.contains(std::minmax(e.u, e.v))) continue;
    NodeId a = e.u;
    NodeId b = e.v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      if (tree.parent_weight(a) < e.weight) return false;
      a = tree.parent(a);
    }
  }
  return true;
}

Clustering ClusteringFromCuts(const RootedTree& tree,
                              std::span<const Edge> cut_edges) {
  const int n = tree.node_count();
  std::set<std::pair<NodeId, NodeId>> cuts;
  for (const Edge& e : cut_edges) {
    const bool tree_edge =
        (e.u >= 0 && e.u < n && !tree.is_root(e.u) &&
         tree.parent(e.u) == e.v) ||
        (e.v >= 0 && e.v < n && !tree.is_root(e.v) && tree.parent(e.v) == e.u);
    if (!tree_edge) {
      throw Error(ErrorCode::kNotATree,
                  "cut edge (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ") is not a tree edge");
    }
    cuts.insert(std::minmax(e.u, e.v));
  }
  DisjointSet sets(n);
  for (NodeId v = 0; v < n; ++v) {
    if (tree.is_root(v)) continue;
    if (!cuts.contains(std::minmax(v, tree.parent(v)))) {
      sets.Unite(v, tree.parent(v));
    }
  }
  std::vector<int> slot(n, -1);
  Clustering out;
  for (NodeId v = 0; v < n; ++v) {
    const int r = sets.Find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.clusters.size());
      out.clusters.emplace_back();
    }
    out.clusters[slot[r]].push_back(v);
  }
  return out;
}

}  // namespace balclust
