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

#include "balclust/dp.hpp"

#include <algorithm>
#include <utility>

#include "balclust/error.hpp"

namespace balclust {
namespace {

// Keeps the smaller of the cell and the candidate; candidates with b > 1
// are dropped so the cell stays infinite unless something feasible arrives.
void Offer(DPCell& target, const CellValue& candidate,
           const Provenance& provenance) {
  if (!candidate.finite) return;
  if (Ratio::One() < candidate.quality) return;
  if (PairLess(candidate, target.value)) {
    target.value = candidate;
    target.provenance = provenance;
  }
}

// Two clusterings glued at the shared root: the heads merge, everything else
// is kept. mu is the merged head's lightest edge.
CellValue Join(const CellValue& partial, const CellValue& child, double mu) {
  const double max_out = std::max(partial.max_out, child.max_out);
  const Ratio quality =
      Max(Ratio(max_out, mu), Max(partial.quality, child.quality));
  return CellValue::Finite(max_out, quality);
}

int ColumnOf(const ColumnSet& columns, double omega) {
  const int column = columns.IndexOf(omega);
  if (column < 0 || column == columns.unit_column()) {
    throw Error(ErrorCode::kNotATree,
                "edge weight " + std::to_string(omega) +
                    " is not a column of the table");
  }
  return column;
}

}  // namespace

bool PairLess(const CellValue& p, const CellValue& q) {
  if (!p.finite) return false;
  if (!q.finite) return true;
  const auto order = p.quality <=> q.quality;
  if (order != 0) return order < 0;
  return p.max_out < q.max_out;
}

ColumnSet::ColumnSet(std::vector<double> distinct_weights)
    : labels_(std::move(distinct_weights)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  labels_.push_back(1.0);
}

int ColumnSet::IndexOf(double weight) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), weight);
  if (it == labels_.end() || *it != weight) return -1;
  return static_cast<int>(it - labels_.begin());
}

RowLayout RowLayout::FixedK(int k_max) {
  if (k_max < 1) throw Error(ErrorCode::kInvalidK, "k_max must be >= 1");
  return RowLayout(k_max, false);
}

RowLayout RowLayout::AnyK() { return RowLayout(2, true); }

int RowLayout::Merge(int row_a, int row_b) const {
  const int row = row_a + row_b;
  if (any_k_) return std::min(row, 1);
  return row < rows_ ? row : -1;
}

int RowLayout::Next(int row) const {
  if (any_k_) return 1;
  return row + 1 < rows_ ? row + 1 : -1;
}

DPTable::DPTable(NodeId subtree_root, std::shared_ptr<const ColumnSet> columns,
                 RowLayout layout)
    : subtree_root_(subtree_root),
      columns_(std::move(columns)),
      layout_(layout),
      cells_(static_cast<std::size_t>(layout.rows()) * columns_->size()),
      finite_columns_(layout.rows()) {}

CellValue DPTable::value(int l, double mu) const {
  const int column = columns_->IndexOf(mu);
  const int row = l - 1;
  if (column < 0 || row < 0 || row >= rows()) return CellValue::Infinite();
  return cell(row, column).value;
}

void DPTable::Seal() {
  for (int r = 0; r < rows(); ++r) {
    finite_columns_[r].clear();
    for (int c = 0; c < columns_->size(); ++c) {
      if (cell(r, c).value.finite) finite_columns_[r].push_back(c);
    }
  }
}

DPTable LeafTable(NodeId v, std::shared_ptr<const ColumnSet> columns,
                  RowLayout layout) {
  DPTable table(v, std::move(columns), layout);
  DPCell& cell = table.mutable_cell(0, table.columns().unit_column());
  cell.value = CellValue::Finite(0.0, Ratio::Zero());
  cell.provenance.origin = Origin::kLeaf;
  table.Seal();
  return table;
}

DPTable UpToParent(const DPTable& child_table, NodeId parent, double omega) {
  const ColumnSet& columns = child_table.columns();
  const RowLayout& layout = child_table.layout();
  const int omega_column = ColumnOf(columns, omega);
  const int unit = columns.unit_column();

  DPTable out(parent, child_table.shared_columns(), layout);
  out.set_lifted(child_table.subtree_root(), omega);
  const Ratio parent_alone(omega, 1.0);

  for (int row = 0; row < layout.rows(); ++row) {
    // mu == 1: the edge is cut and the parent is a singleton head. The
    // child's head gains omega as an outgoing edge.
    const int next = layout.Next(row);
    if (next >= 0) {
      for (int c : child_table.finite_columns(row)) {
        const CellValue& s = child_table.cell(row, c).value;
        const Ratio child_head(std::max(omega, s.max_out), columns.label(c));
        const Ratio quality = Max(Max(parent_alone, s.quality), child_head);
        Offer(out.mutable_cell(next, unit),
              CellValue::Finite(omega, quality),
              {Origin::kUpToParent, 1, Branch::kNone, row, c});
      }
    }
    // omega < mu < 1 is unreachable and stays infinite.
    for (int c : child_table.finite_columns(row)) {
      const CellValue& s = child_table.cell(row, c).value;
      if (c >= omega_column) {
        // mu == omega: the parent joins the child's head through omega.
        const Ratio quality = Max(Ratio(s.max_out, omega), s.quality);
        Offer(out.mutable_cell(row, omega_column),
              CellValue::Finite(s.max_out, quality),
              {Origin::kUpToParent, 3, Branch::kNone, row, c});
      } else {
        // mu < omega: the parent joins without changing M, mu or b.
        Offer(out.mutable_cell(row, c), s,
              {Origin::kUpToParent, 4, Branch::kNone, row, c});
      }
    }
  }
  out.Seal();
  return out;
}

DPTable AddLiftedChild(const DPTable& partial, const DPTable& lifted) {
  const ColumnSet& columns = partial.columns();
  const RowLayout& layout = partial.layout();
  const int omega_column = ColumnOf(columns, lifted.lifted_weight());
  const double omega = lifted.lifted_weight();
  const int unit = columns.unit_column();

  DPTable out(partial.subtree_root(), partial.shared_columns(), layout);

  for (int x = 0; x < layout.rows(); ++x) {
    const auto partial_columns = partial.finite_columns(x);
    if (partial_columns.empty()) continue;
    for (int y = 0; y < layout.rows(); ++y) {
      const int row = layout.Merge(x, y);
      if (row < 0) break;
      const auto child_columns = lifted.finite_columns(y);
      if (child_columns.empty()) continue;

      const CellValue& child_cut = lifted.cell(y, unit).value;
      const CellValue& child_joined = lifted.cell(y, omega_column).value;

      for (int c : partial_columns) {
        const CellValue& s = partial.cell(x, c).value;
        if (c >= omega_column && child_cut.finite) {
          // Connecting edge cut; the head's mu comes from the partial side.
          const std::uint8_t case_id =
              c == unit ? 1 : (c > omega_column ? 2 : 3);
          const Branch branch =
              c == omega_column ? Branch::kFirst : Branch::kNone;
          Offer(out.mutable_cell(row, c), Join(s, child_cut, columns.label(c)),
                {Origin::kAddChildTree, case_id, branch, x, c, y, unit});
        }
        if (c >= omega_column && child_joined.finite) {
          // mu == omega with the edge kept inside the head.
          Offer(out.mutable_cell(row, omega_column),
                Join(s, child_joined, omega),
                {Origin::kAddChildTree, 3, Branch::kSecond, x, c, y,
                 omega_column});
        }
        if (c < omega_column) {
          // mu < omega from the partial side: any child head with mu' >= mu.
          const double mu = columns.label(c);
          for (int c2 : child_columns) {
            if (c2 < c) continue;
            Offer(out.mutable_cell(row, c),
                  Join(s, lifted.cell(y, c2).value, mu),
                  {Origin::kAddChildTree, 4, Branch::kFirst, x, c, y, c2});
          }
        }
      }
      // mu < omega from the child side: any partial head with mu' >= mu.
      for (int c2 : child_columns) {
        if (c2 >= omega_column) continue;
        const double mu = columns.label(c2);
        const CellValue& q = lifted.cell(y, c2).value;
        for (int c : partial_columns) {
          if (c < c2) continue;
          Offer(out.mutable_cell(row, c2), Join(partial.cell(x, c).value, q, mu),
                {Origin::kAddChildTree, 4, Branch::kSecond, x, c, y, c2});
        }
      }
    }
  }
  out.Seal();
  return out;
}

DPTable AddChildTree(const DPTable& partial, const DPTable& child_table,
                     double omega) {
  const DPTable lifted =
      UpToParent(child_table, partial.subtree_root(), omega);
  return AddLiftedChild(partial, lifted);
}

DPState BuildRootTable(const RootedTree& tree, RowLayout layout) {
  const auto columns =
      std::make_shared<const ColumnSet>(tree.distinct_weights());
  DPState state;
  state.subtree_table.assign(tree.node_count(), -1);
  auto push = [&state](DPTable table, int source, int child_source) {
    state.entries.push_back({std::move(table), source, child_source});
    return static_cast<int>(state.entries.size()) - 1;
  };

  for (NodeId v : tree.post_order()) {
    const auto& children = tree.children(v);
    if (children.empty()) {
      state.subtree_table[v] = push(LeafTable(v, columns, layout), -1, -1);
      continue;
    }
    int current = -1;
    for (NodeId child : children) {
      const int child_entry = state.subtree_table[child];
      DPTable lifted = UpToParent(state.entries[child_entry].table, v,
                                  tree.parent_weight(child));
      const int lifted_entry = push(std::move(lifted), child_entry, -1);
      if (current < 0) {
        current = lifted_entry;
        continue;
      }
      DPTable merged = AddLiftedChild(state.entries[current].table,
                                      state.entries[lifted_entry].table);
      current = push(std::move(merged), current, lifted_entry);
    }
    state.subtree_table[v] = current;
  }
  return state;
}

std::vector<Edge> Backtrack(const DPState& state, const RootedTree& tree,
                            int row, int column) {
  auto corrupt = [](const std::string& what) {
    return Error(ErrorCode::kCorruptProvenance, what);
  };
  std::vector<Edge> cuts;
  struct Frame {
    int entry;
    int row;
    int column;
  };
  std::vector<Frame> stack{{state.subtree_table.at(tree.root()), row, column}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.entry < 0 || f.entry >= static_cast<int>(state.entries.size())) {
      throw corrupt("dangling table reference");
    }
    const DPState::Entry& entry = state.entries[f.entry];
    const DPTable& table = entry.table;
    if (f.row < 0 || f.row >= table.rows() || f.column < 0 ||
        f.column >= table.columns().size()) {
      throw corrupt("cell index out of range");
    }
    const DPCell& cell = table.cell(f.row, f.column);
    if (!cell.value.finite) throw corrupt("backtracking reached an infinite cell");
    const Provenance& p = cell.provenance;
    switch (p.origin) {
      case Origin::kLeaf:
        break;
      case Origin::kUpToParent:
        if (p.case_id == 1) {
          const NodeId child = table.lifted_child();
          const NodeId parent = table.subtree_root();
          cuts.push_back({std::min(child, parent), std::max(child, parent),
                          table.lifted_weight()});
        }
        stack.push_back({entry.source, p.source_row, p.source_column});
        break;
      case Origin::kAddChildTree:
        stack.push_back({entry.source, p.source_row, p.source_column});
        stack.push_back({entry.child_source, p.child_row, p.child_column});
        break;
      case Origin::kInfeasible:
        throw corrupt("finite cell without provenance");
    }
  }
  std::sort(cuts.begin(), cuts.end(), EndpointLess);
  return cuts;
}

namespace {

// Best column of a root-table row under PairLess; -1 if the row is empty.
int BestColumn(const DPTable& table, int row) {
  int best = -1;
  for (int c : table.finite_columns(row)) {
    if (best < 0 ||
        PairLess(table.cell(row, c).value, table.cell(row, best).value)) {
      best = c;
    }
  }
  return best;
}

std::vector<NodeId> AllNodes(int n) {
  std::vector<NodeId> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return all;
}

}  // namespace

SolveResult SolveFixedK(const RootedTree& tree, int k) {
  const int n = tree.node_count();
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidK, "k=" + std::to_string(k) +
                                          " outside [1, " + std::to_string(n) +
                                          "]");
  }
  if (k == 1) {
    SolveResult whole;
    whole.phi = Ratio::Zero();
    whole.k = 1;
    whole.clustering.clusters.push_back(AllNodes(n));
    return whole;
  }
  const DPState state = BuildRootTable(tree, RowLayout::FixedK(k));
  const DPTable& root = state.table_of(tree.root());
  const int row = k - 1;
  const int column = BestColumn(root, row);
  if (column < 0) {
    throw Error(ErrorCode::kInfeasibleK,
                "every " + std::to_string(k) + "-clustering scores above 1");
  }
  SolveResult result;
  result.phi = root.cell(row, column).value.quality;
  result.k = k;
  result.cut_edges = Backtrack(state, tree, row, column);
  if (static_cast<int>(result.cut_edges.size()) != k - 1) {
    throw Error(ErrorCode::kCorruptProvenance,
                "backtracking produced " +
                    std::to_string(result.cut_edges.size()) +
                    " cuts for k=" + std::to_string(k));
  }
  result.clustering = ClusteringFromCuts(tree, result.cut_edges);
  return result;
}

SolveResult SolveAnyK(const RootedTree& tree) {
  if (tree.node_count() < 2) {
    throw Error(ErrorCode::kTooSmall, "need at least two nodes");
  }
  const DPState state = BuildRootTable(tree, RowLayout::AnyK());
  const DPTable& root = state.table_of(tree.root());
  const int column = BestColumn(root, 1);
  if (column < 0) {
    throw Error(ErrorCode::kInfeasibleK, "every clustering scores above 1");
  }
  SolveResult result;
  result.phi = root.cell(1, column).value.quality;
  result.cut_edges = Backtrack(state, tree, 1, column);
  result.k = static_cast<int>(result.cut_edges.size()) + 1;
  if (result.k < 2) {
    throw Error(ErrorCode::kCorruptProvenance,
                "multi-cluster cell backtracked to a single cluster");
  }
  result.clustering = ClusteringFromCuts(tree, result.cut_edges);
  return result;
}

}  // namespace balclust
