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

#include "balclust/measure.hpp"

#include <algorithm>

#include "balclust/error.hpp"

namespace balclust {
namespace {

std::vector<char> Membership(int node_count, std::span<const NodeId> cluster) {
  std::vector<char> in(node_count, 0);
  for (NodeId v : cluster) {
    if (v < 0 || v >= node_count) {
      throw Error(ErrorCode::kNodeOutOfRange,
                  "cluster member " + std::to_string(v) + " out of range");
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

void ValidatePartition(int node_count, const Clustering& clustering) {
  std::vector<char> seen(node_count, 0);
  int covered = 0;
  for (const Cluster& c : clustering.clusters) {
    if (c.empty()) throw Error(ErrorCode::kNotAPartition, "empty cluster");
    for (NodeId v : c) {
      if (v < 0 || v >= node_count) {
        throw Error(ErrorCode::kNotAPartition,
                    "node " + std::to_string(v) + " out of range");
      }
      if (seen[v]) {
        throw Error(ErrorCode::kNotAPartition,
                    "node " + std::to_string(v) + " in two clusters");
      }
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != node_count) {
    throw Error(ErrorCode::kNotAPartition, "clusters do not cover every node");
  }
}

double MaxOut(const WeightedGraph& graph, std::span<const NodeId> cluster) {
  const std::vector<char> in = Membership(graph.node_count(), cluster);
  double best = 0.0;
  for (NodeId v : cluster) {
    for (int idx : graph.incident(v)) {
      const Edge& e = graph.edges()[idx];
      if (in[e.u] != in[e.v]) best = std::max(best, e.weight);
    }
  }
  return best;
}

Ratio PhiCluster(const WeightedGraph& graph, std::span<const NodeId> cluster) {
  const int n = graph.node_count();
  const std::vector<char> in = Membership(n, cluster);
  const int size = static_cast<int>(std::count(in.begin(), in.end(), 1));
  if (size == 0) {
    throw Error(ErrorCode::kDisconnectedCluster, "empty cluster");
  }
  if (size == n) return Ratio::Zero();

  double max_out = 0.0;
  std::vector<Edge> inner;
  for (const Edge& e : graph.edges()) {
    if (in[e.u] && in[e.v]) {
      inner.push_back(e);
    } else if (in[e.u] || in[e.v]) {
      max_out = std::max(max_out, e.weight);
    }
  }
  if (size == 1) return Ratio(max_out, 1.0);

  // Lightest edge of the cluster's maximum spanning tree.
  std::sort(inner.begin(), inner.end(), [](const Edge& a, const Edge& b) {
    return a.weight > b.weight;
  });
  DisjointSet sets(n);
  double lightest = 1.0;
  int joined = 0;
  for (const Edge& e : inner) {
    if (sets.Unite(e.u, e.v)) {
      lightest = e.weight;
      if (++joined == size - 1) break;
    }
  }
  if (joined != size - 1) {
    throw Error(ErrorCode::kDisconnectedCluster,
                "cluster of " + std::to_string(size) +
                    " nodes is not connected");
  }
  return Ratio(max_out, lightest);
}

Ratio PhiClustering(const WeightedGraph& graph, const Clustering& clustering) {
  ValidatePartition(graph.node_count(), clustering);
  Ratio worst = Ratio::Zero();
  for (const Cluster& c : clustering.clusters) {
    worst = Max(worst, PhiCluster(graph, c));
  }
  return worst;
}

Ratio PhiRestricted(const RootedTree& tree, const Clustering& clustering) {
  const int n = tree.node_count();
  ValidatePartition(n, clustering);
  std::vector<int> owner(n, -1);
  for (int i = 0; i < static_cast<int>(clustering.size()); ++i) {
    for (NodeId v : clustering.clusters[i]) owner[v] = i;
  }
  const int count = static_cast<int>(clustering.size());
  std::vector<double> max_out(count, 0.0);
  std::vector<double> min_inner(count, 1.0);
  std::vector<int> inner_edges(count, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (tree.is_root(v)) continue;
    const NodeId p = tree.parent(v);
    const double w = tree.parent_weight(v);
    if (owner[v] == owner[p]) {
      min_inner[owner[v]] = std::min(min_inner[owner[v]], w);
      ++inner_edges[owner[v]];
    } else {
      max_out[owner[v]] = std::max(max_out[owner[v]], w);
      max_out[owner[p]] = std::max(max_out[owner[p]], w);
    }
  }
  Ratio worst = Ratio::Zero();
  for (int i = 0; i < count; ++i) {
    const int size = static_cast<int>(clustering.clusters[i].size());
    if (inner_edges[i] != size - 1) {
      throw Error(ErrorCode::kClusterNotConnectedInTree,
                  "cluster " + std::to_string(i) +
                      " is not connected in the tree");
    }
    worst = Max(worst, Ratio(max_out[i], min_inner[i]));
  }
  return worst;
}

}  // namespace balclust
