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

// Exact min-max clustering of a rooted tree by bottom-up dynamic programming.
//
// For a subtree S rooted at v, a clustering of S is a set of cut edges. The
// cluster holding v is the head. A table O_S has one row per cluster count l
// and one column per candidate value mu of the head's lightest inner edge
// (every distinct tree-edge weight, then 1 for a singleton head). Cell
// (l, mu) holds the pair (M, b) of the best l-clustering whose head has
// lightest edge mu: b is the clustering quality measured inside S and M the
// heaviest head edge cut inside S. "Best" is the lexicographic order on
// (b, M). Cells whose best b exceeds 1 are stored as infinite; an optimum
// never needs them.
//
// Tables grow by two moves:
//   UpToParent    O_S  -> O_{S + p(v)}       (attach the parent of S's root)
//   AddChildTree  O_S, O_Q -> O_{S join Q}   (S rooted at p(v), Q = T_v)
// Every cell remembers which candidate produced it, so an optimal clustering
// is recovered by walking those records back down to the leaves.

#ifndef BALCLUST_DP_HPP_
#define BALCLUST_DP_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "balclust/graph.hpp"
#include "balclust/ratio.hpp"
#include "balclust/spanning_tree.hpp"

namespace balclust {

// The (M, b) pair of a table cell, or infinity.
struct CellValue {
  bool finite = false;
  double max_out = 0.0;  // M
  Ratio quality;         // b

  static CellValue Infinite() { return {}; }
  static CellValue Finite(double max_out, Ratio quality) {
    return {true, max_out, quality};
  }

  friend bool operator==(const CellValue& a, const CellValue& b) {
    if (a.finite != b.finite) return false;
    return !a.finite || (a.max_out == b.max_out && a.quality == b.quality);
  }
};

// (M,b) < (M',b') iff b < b', or b == b' and M < M'. Infinity is maximal.
bool PairLess(const CellValue& p, const CellValue& q);

enum class Origin : std::uint8_t { kInfeasible, kLeaf, kUpToParent, kAddChildTree };

// Which of the two candidate families won an AddChildTree cell. At
// mu == omega: kFirst has the connecting edge cut, kSecond keeps it inside
// the head. At mu < omega: kFirst takes the head's lightest edge from the
// partial side, kSecond from the child side.
enum class Branch : std::uint8_t { kNone, kFirst, kSecond };

struct Provenance {
  Origin origin = Origin::kInfeasible;
  // 1..4 by column: mu == 1, omega < mu < 1, mu == omega, mu < omega.
  std::uint8_t case_id = 0;
  Branch branch = Branch::kNone;
  // Source cell in the child table (UpToParent) or partial table
  // (AddChildTree). Rows are 0-based.
  int source_row = -1;
  int source_column = -1;
  // Source cell in the lifted child table (AddChildTree only).
  int child_row = -1;
  int child_column = -1;
};

struct DPCell {
  CellValue value;
  Provenance provenance;
};

// Column labels shared by every table of one tree: the distinct tree-edge
// weights ascending, followed by 1.
class ColumnSet {
 public:
  explicit ColumnSet(std::vector<double> distinct_weights);

  int size() const { return static_cast<int>(labels_.size()); }
  double label(int column) const { return labels_[column]; }
  int unit_column() const { return size() - 1; }
  // Column whose label equals weight exactly; -1 if none.
  int IndexOf(double weight) const;

 private:
  std::vector<double> labels_;
};

// Row semantics. kFixedK keeps one row per cluster count 1..k_max. kAnyK
// keeps two rows: exactly one cluster, and two or more clusters.
class RowLayout {
 public:
  static RowLayout FixedK(int k_max);
  static RowLayout AnyK();

  int rows() const { return rows_; }
  bool any_k() const { return any_k_; }
  // Row of the clustering obtained by gluing two heads at a shared node
  // (l = x + y - 1); -1 when it exceeds the table.
  int Merge(int row_a, int row_b) const;
  // Row after adding one more cluster; -1 when it exceeds the table.
  int Next(int row) const;
  // Number of clusters for a row of a kFixedK layout.
  int ClusterCount(int row) const { return row + 1; }

 private:
  RowLayout(int rows, bool any_k) : rows_(rows), any_k_(any_k) {}
  int rows_;
  bool any_k_;
};

class DPTable {
 public:
  DPTable(NodeId subtree_root, std::shared_ptr<const ColumnSet> columns,
          RowLayout layout);

  NodeId subtree_root() const { return subtree_root_; }
  const ColumnSet& columns() const { return *columns_; }
  const std::shared_ptr<const ColumnSet>& shared_columns() const {
    return columns_;
  }
  const RowLayout& layout() const { return layout_; }
  int rows() const { return layout_.rows(); }

  const DPCell& cell(int row, int column) const {
    return cells_[static_cast<std::size_t>(row) * columns_->size() + column];
  }
  DPCell& mutable_cell(int row, int column) {
    return cells_[static_cast<std::size_t>(row) * columns_->size() + column];
  }
  // Cell (l, mu) with l 1-based and mu a column label. Infinite if mu is not
  // a column label.
  CellValue value(int l, double mu) const;

  // Columns holding finite cells in the row, ascending. Valid after Seal().
  std::span<const int> finite_columns(int row) const {
    return finite_columns_[row];
  }
  void Seal();

  // Set by UpToParent: the child whose edge to subtree_root was attached.
  NodeId lifted_child() const { return lifted_child_; }
  double lifted_weight() const { return lifted_weight_; }
  void set_lifted(NodeId child, double weight) {
    lifted_child_ = child;
    lifted_weight_ = weight;
  }

 private:
  NodeId subtree_root_;
  std::shared_ptr<const ColumnSet> columns_;
  RowLayout layout_;
  std::vector<DPCell> cells_;
  std::vector<std::vector<int>> finite_columns_;
  NodeId lifted_child_ = -1;
  double lifted_weight_ = 0.0;
};

// Table of a single node: (1, 1) = (0, 0), everything else infinite.
DPTable LeafTable(NodeId v, std::shared_ptr<const ColumnSet> columns,
                  RowLayout layout);

// Table of child_table's subtree plus `parent`, joined by an edge of weight
// omega.
DPTable UpToParent(const DPTable& child_table, NodeId parent, double omega);

// Joins a partial table rooted at p with the lifted table of one more child
// (the output of UpToParent for that child).
DPTable AddLiftedChild(const DPTable& partial, const DPTable& lifted);

// Lifts child_table over the edge of weight omega, then joins it with
// partial.
DPTable AddChildTree(const DPTable& partial, const DPTable& child_table,
                     double omega);

// All tables built for one tree, kept for backtracking. Each node's
// subtree table is produced by lifting its first child and folding in the
// rest one by one; sources record which tables a table was built from.
struct DPState {
  struct Entry {
    DPTable table;
    int source = -1;        // child table (UpToParent) or partial (AddChild)
    int child_source = -1;  // lifted child table (AddChild)
  };
  std::vector<Entry> entries;
  std::vector<int> subtree_table;  // per node: index into entries

  const DPTable& table_of(NodeId v) const {
    return entries[subtree_table[v]].table;
  }
};

// Runs the fold over the tree in post-order. Children are folded in
// ascending index order.
DPState BuildRootTable(const RootedTree& tree, RowLayout layout);

// Cut edges of the clustering encoded by the root table's cell. Throws
// kCorruptProvenance if the records are inconsistent.
std::vector<Edge> Backtrack(const DPState& state, const RootedTree& tree,
                            int row, int column);

struct SolveResult {
  Ratio phi;
  int k = 1;
  Clustering clustering;
  std::vector<Edge> cut_edges;  // sorted by endpoints
};

// Best clustering with exactly k clusters. Throws kInvalidK outside [1, n]
// and kInfeasibleK if every k-clustering scores above 1.
SolveResult SolveFixedK(const RootedTree& tree, int k);

// Best clustering over every k >= 2. Throws kTooSmall if n < 2.
SolveResult SolveAnyK(const RootedTree& tree);

}  // namespace balclust

#endif  // BALCLUST_DP_HPP_
