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

#include "balclust/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <memory>
#include <string>

#include "balclust/error.hpp"
#include "balclust/measure.hpp"

namespace balclust {
namespace {

std::int64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

EnumerationBudget EnumerationBudget::Parse(std::string_view spec) {
  EnumerationBudget budget;
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    const std::string_view item = Trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{}
                                           : spec.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParse,
                  "budget entry '" + std::string(item) + "' lacks '='");
    }
    const std::string_view key = Trim(item.substr(0, eq));
    const std::string_view text = Trim(item.substr(eq + 1));
    std::int64_t value = 0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value <= 0) {
      throw Error(ErrorCode::kParse,
                  "budget value '" + std::string(text) + "' is not positive");
    }
    if (key == "max_nodes_tree") {
      budget.max_nodes_tree = static_cast<int>(value);
    } else if (key == "max_nodes_graph") {
      budget.max_nodes_graph = static_cast<int>(value);
    } else if (key == "max_cases") {
      budget.max_cases = value;
    } else {
      throw Error(ErrorCode::kParse,
                  "unknown budget key '" + std::string(key) + "'");
    }
  }
  return budget;
}

EnumerationBudget EnumerationBudget::FromEnvironment() {
  const char* spec = std::getenv("BALCLUST_BUDGET");
  if (spec == nullptr) return {};
  return Parse(spec);
}

SolveResult BruteForceTree(const RootedTree& tree, int k,
                           const EnumerationBudget& budget) {
  const int n = tree.node_count();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidK, "k=" + std::to_string(k) +
                                          " outside [1, " + std::to_string(n) +
                                          "]");
  }
  if (n > budget.max_nodes_tree) {
    throw Error(ErrorCode::kBudgetExceeded,
                "tree has " + std::to_string(n) + " nodes, budget is " +
                    std::to_string(budget.max_nodes_tree));
  }
  const std::vector<Edge> edges = tree.edges();
  const int m = static_cast<int>(edges.size());
  const int r = k - 1;
  if (Binomial(m, r) > budget.max_cases) {
    throw Error(ErrorCode::kBudgetExceeded, "too many cut sets");
  }

  SolveResult best;
  bool found = false;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  std::vector<Edge> cuts(r);
  while (true) {
    for (int i = 0; i < r; ++i) cuts[i] = edges[pick[i]];
    Clustering clustering = ClusteringFromCuts(tree, cuts);
    const Ratio phi = PhiRestricted(tree, clustering);
    if (!found || phi < best.phi) {
      found = true;
      best.phi = phi;
      best.k = k;
      best.clustering = std::move(clustering);
      best.cut_edges = cuts;
    }
    // Next combination in lexicographic order.
    int i = r - 1;
    while (i >= 0 && pick[i] == m - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

SolveResult BruteForceGraph(const WeightedGraph& graph, int k,
                            const EnumerationBudget& budget) {
  const int n = graph.node_count();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidK, "k=" + std::to_string(k) +
                                          " outside [1, " + std::to_string(n) +
                                          "]");
  }
  if (n > budget.max_nodes_graph) {
    throw Error(ErrorCode::kBudgetExceeded,
                "graph has " + std::to_string(n) + " nodes, budget is " +
                    std::to_string(budget.max_nodes_graph));
  }

  SolveResult best;
  bool found = false;
  std::int64_t cases = 0;
  // Restricted-growth strings: block[i] <= 1 + max(block[0..i-1]).
  std::vector<int> block(n, 0);
  std::function<void(int, int)> extend = [&](int i, int used) {
    if (used > k || used + (n - i) < k) return;
    if (i == n) {
      if (++cases > budget.max_cases) {
        throw Error(ErrorCode::kBudgetExceeded, "too many partitions");
      }
      Clustering clustering;
      clustering.clusters.resize(k);
      for (int v = 0; v < n; ++v) clustering.clusters[block[v]].push_back(v);
      for (const Cluster& c : clustering.clusters) {
        if (!IsConnected(n, graph.edges(), c)) return;
      }
      const Ratio phi = PhiClustering(graph, clustering);
      if (!found || phi < best.phi) {
        found = true;
        best.phi = phi;
        best.k = k;
        best.clustering = std::move(clustering);
      }
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      block[i] = b;
      extend(i + 1, std::max(used, b + 1));
    }
  };
  block[0] = 0;
  extend(1, 1);
  if (!found) {
    throw Error(ErrorCode::kInfeasibleK,
                "no partition into " + std::to_string(k) +
                    " connected blocks");
  }
  return best;
}

std::vector<SubtreeClustering> EnumerateSubtreeClusterings(
    const RootedTree& tree, NodeId root, std::span<const NodeId> nodes,
    const EnumerationBudget& budget) {
  const int n = tree.node_count();
  const int size = static_cast<int>(nodes.size());
  if (size > budget.max_nodes_tree) {
    throw Error(ErrorCode::kBudgetExceeded,
                "subtree has " + std::to_string(size) + " nodes, budget is " +
                    std::to_string(budget.max_nodes_tree));
  }
  std::vector<int> slot(n, -1);
  for (int i = 0; i < size; ++i) slot[nodes[i]] = i;
  if (root < 0 || root >= n || slot[root] < 0) {
    throw Error(ErrorCode::kNotATree, "subtree does not contain its root");
  }
  if (!tree.is_root(root) && slot[tree.parent(root)] >= 0) {
    throw Error(ErrorCode::kNotATree, "root is not the subtree's top node");
  }
  struct LocalEdge {
    int a, b;
    Edge edge;
  };
  std::vector<LocalEdge> local;
  for (NodeId v : nodes) {
    if (v == root || tree.is_root(v) || slot[tree.parent(v)] < 0) continue;
    const NodeId p = tree.parent(v);
    local.push_back(
        {slot[v], slot[p], {std::min(v, p), std::max(v, p), tree.parent_weight(v)}});
  }
  if (static_cast<int>(local.size()) != size - 1) {
    throw Error(ErrorCode::kNotATree, "nodes do not form a connected subtree");
  }
  std::sort(local.begin(), local.end(), [](const LocalEdge& x, const LocalEdge& y) {
    return EndpointLess(x.edge, y.edge);
  });
  const int m = size - 1;
  if ((std::int64_t{1} << m) > budget.max_cases) {
    throw Error(ErrorCode::kBudgetExceeded, "too many subtree clusterings");
  }
  const ColumnSet columns(tree.distinct_weights());

  std::vector<SubtreeClustering> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    DisjointSet sets(size);
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) sets.Unite(local[i].a, local[i].b);
    }
    std::vector<double> max_out(size, 0.0);
    std::vector<double> min_inner(size, 1.0);
    SubtreeClustering record;
    for (int i = 0; i < m; ++i) {
      const int ra = sets.Find(local[i].a);
      const int rb = sets.Find(local[i].b);
      const double w = local[i].edge.weight;
      if (mask >> i & 1u) {
        max_out[ra] = std::max(max_out[ra], w);
        max_out[rb] = std::max(max_out[rb], w);
        record.cuts.push_back(local[i].edge);
      } else {
        min_inner[ra] = std::min(min_inner[ra], w);
      }
    }
    record.quality = Ratio::Zero();
    for (int i = 0; i < size; ++i) {
      if (sets.Find(i) != i) continue;
      ++record.clusters;
      record.quality = Max(record.quality, Ratio(max_out[i], min_inner[i]));
    }
    const int head = sets.Find(slot[root]);
    record.max_out = max_out[head];
    record.head_column = columns.IndexOf(min_inner[head]);
    out.push_back(std::move(record));
  }
  return out;
}

DPTable BruteForceTable(const RootedTree& tree, NodeId root,
                        std::span<const NodeId> nodes, RowLayout layout,
                        const EnumerationBudget& budget) {
  auto columns = std::make_shared<const ColumnSet>(tree.distinct_weights());
  DPTable table(root, columns, layout);
  for (const SubtreeClustering& c :
       EnumerateSubtreeClusterings(tree, root, nodes, budget)) {
    const int row = layout.any_k() ? std::min(c.clusters - 1, 1)
                                   : c.clusters - 1;
    if (row >= layout.rows()) continue;
    if (Ratio::One() < c.quality) continue;
    const CellValue value = CellValue::Finite(c.max_out, c.quality);
    DPCell& cell = table.mutable_cell(row, c.head_column);
    if (PairLess(value, cell.value)) {
      cell.value = value;
      cell.provenance.origin = Origin::kLeaf;
    }
  }
  table.Seal();
  return table;
}

DPTable BruteForceTable(const RootedTree& tree, NodeId subtree_root,
                        RowLayout layout, const EnumerationBudget& budget) {
  const std::vector<NodeId> nodes = SubtreeNodes(tree, subtree_root);
  return BruteForceTable(tree, subtree_root, nodes, layout, budget);
}

std::vector<NodeId> SubtreeNodes(const RootedTree& tree, NodeId v) {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{v};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (NodeId c : tree.children(u)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Clustering LightestEdgeCut(const RootedTree& tree, int k) {
  std::vector<Edge> edges = tree.edges();
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return a.weight < b.weight; });
  edges.resize(std::max(0, k - 1));
  return ClusteringFromCuts(tree, edges);
}

}  // namespace balclust
