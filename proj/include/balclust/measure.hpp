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

#ifndef BALCLUST_MEASURE_HPP_
#define BALCLUST_MEASURE_HPP_

#include <span>

#include "balclust/graph.hpp"
#include "balclust/ratio.hpp"
#include "balclust/spanning_tree.hpp"

namespace balclust {

// Heaviest edge with exactly one endpoint in the cluster; 0 if none.
double MaxOut(const WeightedGraph& graph, std::span<const NodeId> cluster);

// Cluster quality: heaviest outgoing edge over the lightest edge of the
// cluster's maximum spanning tree. The whole node set scores 0/1 and a
// singleton scores max_out/1. Lower is better.
// Throws kDisconnectedCluster if the members do not induce a connected
// subgraph.
Ratio PhiCluster(const WeightedGraph& graph, std::span<const NodeId> cluster);

// Quality of the worst cluster. Throws kNotAPartition or
// kDisconnectedCluster.
Ratio PhiClustering(const WeightedGraph& graph, const Clustering& clustering);

// Same measure, evaluated using the tree's edges only. Throws
// kNotAPartition or kClusterNotConnectedInTree.
Ratio PhiRestricted(const RootedTree& tree, const Clustering& clustering);

// Throws kNotAPartition unless the clusters are non-empty, disjoint and
// cover [0, node_count).
void ValidatePartition(int node_count, const Clustering& clustering);

}  // namespace balclust

#endif  // BALCLUST_MEASURE_HPP_
