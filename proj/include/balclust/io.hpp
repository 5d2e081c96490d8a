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

#ifndef BALCLUST_IO_HPP_
#define BALCLUST_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balclust/dp.hpp"
#include "balclust/graph.hpp"
#include "balclust/spanning_tree.hpp"

namespace balclust {

enum class InputFormat { kMatrix, kEdgeList, kPoints };

enum class KernelKind { kGaussian, kInverse };

// Similarity from Euclidean distance d: exp(-d^2 / (2 sigma^2)) or 1/(1+d).
struct Kernel {
  KernelKind kind = KernelKind::kGaussian;
  double sigma = 1.0;
};

struct InputSpec {
  InputFormat format = InputFormat::kMatrix;
  std::string path;
  std::optional<Kernel> kernel;  // points only
  bool normalize = false;
};

// Smallest and largest distance from the open interval used when weights
// have to be pushed inside (0,1).
inline constexpr double kWeightMargin = 1e-9;

// Square CSV similarity matrix with an optional header row of labels. The
// diagonal is ignored; mirrored entries must agree within 1e-12 and are
// averaged. Throws kNotSquare, kAsymmetric, kParse or kWeightOutOfRange
// (the latter only without `normalize`).
WeightedGraph ParseMatrixCsv(std::string_view text, bool normalize = false);

// One `u,v,w` edge per line; blank lines and lines starting with '#' are
// skipped. Labels are arbitrary strings, numbered in order of appearance.
// Errors carry 1-based line numbers.
WeightedGraph ParseEdgeList(std::string_view text, bool normalize = false);

struct PointSet {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> coordinates;
};

// One whitespace-separated vector per line with an optional leading label.
// Throws kDimensionMismatch or kParse.
PointSet ParsePoints(std::string_view text);

// Complete graph over the points. Weights that reach 1 (coincident points)
// are clamped to 1 - kWeightMargin and weights that underflow to 0 are
// clamped to the smallest normal double; each clamp appends a warning.
WeightedGraph PointsToSimilarity(const PointSet& points, const Kernel& kernel,
                                 std::vector<std::string>* warnings = nullptr);

// Rescales positive similarities into (0,1): w -> (1 - margin) * w / max(w),
// floored at margin. Throws kWeightOutOfRange on a non-positive weight.
std::vector<Edge> NormalizeWeights(std::vector<Edge> edges);

std::string ReadFile(const std::string& path);

struct LoadedInput {
  WeightedGraph graph;
  std::string digest;  // "sha256:<hex>" of the raw file bytes
  std::vector<std::string> warnings;
};

LoadedInput LoadInput(const InputSpec& spec);

std::string Sha256Hex(std::string_view bytes);

// Edge list / matrix writers; weights printed with 17 significant digits.
std::string WriteEdgeList(const WeightedGraph& graph);
std::string WriteMatrixCsv(const WeightedGraph& graph);

struct LabeledEdge {
  std::string u;
  std::string v;
  double weight = 0.0;
};

struct ResultDocument {
  std::string phi;  // 17 significant digits
  double phi_numerator = 0.0;
  double phi_denominator = 1.0;
  int k = 1;
  std::vector<std::vector<std::string>> clusters;
  std::vector<LabeledEdge> cut_edges;
  std::vector<LabeledEdge> mst_edges;
  std::string solver;  // "fixed_k" or "any_k"
  std::string input_digest;
};

// Members are sorted by label and clusters by their smallest label (plain
// string order); edges are ordered by endpoint indices.
ResultDocument MakeResultDocument(const SolveResult& result,
                                  const WeightedGraph& graph,
                                  const RootedTree& tree, bool any_k,
                                  std::string_view input_digest);

// JSON with keys in ResultDocument field order; byte-stable.
std::string SerializeResult(const ResultDocument& document);

// Graphviz text: tree edges bold, cut edges dashed, other edges grey, nodes
// filled with one color per cluster.
std::string EmitDot(const WeightedGraph& graph, const RootedTree& tree,
                    const Clustering& clustering);

std::string FormatDecimal(double value);

}  // namespace balclust

#endif  // BALCLUST_IO_HPP_
