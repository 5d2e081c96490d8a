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

#ifndef BALCLUST_GRAPH_HPP_
#define BALCLUST_GRAPH_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace balclust {

using NodeId = int;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Orders edges by (min endpoint, max endpoint).
bool EndpointLess(const Edge& a, const Edge& b);

// Undirected similarity graph with weights in (0,1). Immutable once built;
// construct through BuildGraph, which validates every invariant.
class WeightedGraph {
 public:
  int node_count() const { return node_count_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId v) const { return labels_[v]; }

  // Edges with u < v, in (u, v) order.
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Adjacency: indices into edges().
  std::span<const int> incident(NodeId v) const { return incident_[v]; }

  std::optional<double> weight(NodeId u, NodeId v) const;

  bool is_dense() const { return !dense_.empty(); }

 private:
  friend WeightedGraph BuildGraph(int, std::span<const Edge>,
                                  std::vector<std::string>);

  int node_count_ = 0;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  // Row-major n*n weights (0 = no edge); populated when density > 0.5.
  std::vector<double> dense_;
  std::vector<std::vector<std::pair<NodeId, double>>> sparse_;
};

// Validates and builds a graph. Labels default to decimal indices.
// Throws Error with kNodeOutOfRange, kWeightOutOfRange, kDuplicateEdge,
// kSelfLoop or kDisconnected.
WeightedGraph BuildGraph(int node_count, std::span<const Edge> edges,
                         std::vector<std::string> labels = {});

// Sorted member list.
using Cluster = std::vector<NodeId>;

struct Clustering {
  std::vector<Cluster> clusters;

  std::size_t size() const { return clusters.size(); }
};

// Sorts members and clusters (by smallest member) so equal partitions
// compare equal.
Clustering Canonical(Clustering clustering);

// True iff the members induce a connected subgraph of the given edges.
bool IsConnected(int node_count, std::span<const Edge> edges,
                 std::span<const NodeId> members);

}  // namespace balclust

#endif  // BALCLUST_GRAPH_HPP_
