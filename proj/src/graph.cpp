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

#include "balclust/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "balclust/error.hpp"
#include "balclust/spanning_tree.hpp"

namespace balclust {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kWeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::kDisconnectedCluster: return "DisconnectedCluster";
    case ErrorCode::kNotAPartition: return "NotAPartition";
    case ErrorCode::kClusterNotConnectedInTree:
      return "ClusterNotConnectedInTree";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kInfeasibleK: return "InfeasibleK";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kCorruptProvenance: return "CorruptProvenance";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kAsymmetric: return "Asymmetric";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool EndpointLess(const Edge& a, const Edge& b) {
  const auto ka = std::minmax(a.u, a.v);
  const auto kb = std::minmax(b.u, b.v);
  return ka < kb;
}

std::optional<double> WeightedGraph::weight(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_ || u == v) {
    return std::nullopt;
  }
  if (!dense_.empty()) {
    const double w = dense_[static_cast<std::size_t>(u) * node_count_ + v];
    if (w > 0.0) return w;
    return std::nullopt;
  }
  for (const auto& [other, w] : sparse_[u]) {
    if (other == v) return w;
  }
  return std::nullopt;
}

WeightedGraph BuildGraph(int node_count, std::span<const Edge> edges,
                         std::vector<std::string> labels) {
  if (node_count < 1) {
    throw Error(ErrorCode::kNodeOutOfRange, "graph needs at least one node");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != node_count) {
    throw Error(ErrorCode::kNodeOutOfRange,
                "label count does not match node count");
  }
  WeightedGraph g;
  g.node_count_ = node_count;
  if (labels.empty()) {
    labels.reserve(node_count);
    for (int i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);

  std::set<std::pair<NodeId, NodeId>> seen;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count) {
      throw Error(ErrorCode::kNodeOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") references a missing node");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self loop at node " + std::to_string(e.u));
    }
    if (!(e.weight > 0.0 && e.weight < 1.0)) {
      throw Error(ErrorCode::kWeightOutOfRange,
                  "weight " + std::to_string(e.weight) + " of edge (" +
                      std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") is outside (0,1)");
    }
    const auto [a, b] = std::minmax(e.u, e.v);
    if (!seen.emplace(a, b).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") appears twice");
    }
    g.edges_.push_back({a, b, e.weight});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), EndpointLess);

  g.incident_.assign(node_count, {});
  for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
    g.incident_[g.edges_[i].u].push_back(i);
    g.incident_[g.edges_[i].v].push_back(i);
  }

  const double pairs = 0.5 * node_count * (node_count - 1.0);
  if (pairs > 0 && static_cast<double>(g.edges_.size()) / pairs > 0.5) {
    g.dense_.assign(static_cast<std::size_t>(node_count) * node_count, 0.0);
    for (const Edge& e : g.edges_) {
      g.dense_[static_cast<std::size_t>(e.u) * node_count + e.v] = e.weight;
      g.dense_[static_cast<std::size_t>(e.v) * node_count + e.u] = e.weight;
    }
  } else {
    g.sparse_.assign(node_count, {});
    for (const Edge& e : g.edges_) {
      g.sparse_[e.u].emplace_back(e.v, e.weight);
      g.sparse_[e.v].emplace_back(e.u, e.weight);
    }
  }

  DisjointSet components(node_count);
  for (const Edge& e : g.edges_) components.Unite(e.u, e.v);
  if (components.set_count() != 1) {
    throw Error(ErrorCode::kDisconnected,
                "graph has " + std::to_string(components.set_count()) +
                    " connected components");
  }
  return g;
}

Clustering Canonical(Clustering clustering) {
  for (Cluster& c : clustering.clusters) std::sort(c.begin(), c.end());
  std::sort(clustering.clusters.begin(), clustering.clusters.end(),
            [](const Cluster& a, const Cluster& b) {
              if (a.empty() || b.empty()) return a.size() < b.size();
              return a.front() < b.front();
            });
  return clustering;
}

bool IsConnected(int node_count, std::span<const Edge> edges,
                 std::span<const NodeId> members) {
  if (members.empty()) return false;
  std::vector<int> slot(node_count, -1);
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    slot[members[i]] = i;
  }
  DisjointSet sets(static_cast<int>(members.size()));
  for (const Edge& e : edges) {
    if (slot[e.u] >= 0 && slot[e.v] >= 0) sets.Unite(slot[e.u], slot[e.v]);
  }
  return sets.set_count() == 1;
}

}  // namespace balclust
