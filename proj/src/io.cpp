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

#include "balclust/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "balclust/error.hpp"
#include "json.hpp"

namespace balclust {
namespace {

constexpr double kSymmetryTolerance = 1e-12;

std::string_view Trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const std::size_t first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const std::size_t last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> SplitFields(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t at = line.find(sep);
    out.push_back(Trim(line.substr(0, at)));
    if (at == std::string_view::npos) break;
    line.remove_prefix(at + 1);
  }
  return out;
}

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<double> ToNumber(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      end != token.data() + token.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string At(int line) { return "line " + std::to_string(line) + ": "; }

WeightedGraph Finish(int node_count, std::vector<Edge> edges,
                     std::vector<std::string> labels, bool normalize) {
  if (normalize) edges = NormalizeWeights(std::move(edges));
  return BuildGraph(node_count, edges, std::move(labels));
}

nlohmann::ordered_json EdgeJson(const LabeledEdge& e) {
  return nlohmann::ordered_json::array({e.u, e.v, e.weight});
}

std::string QuoteDot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string FormatDecimal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::vector<Edge> NormalizeWeights(std::vector<Edge> edges) {
  double largest = 0.0;
  for (const Edge& e : edges) {
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(ErrorCode::kWeightOutOfRange,
                  "normalization needs positive finite similarities, got " +
                      FormatDecimal(e.weight));
    }
    largest = std::max(largest, e.weight);
  }
  for (Edge& e : edges) {
    e.weight = std::max(kWeightMargin, (1.0 - kWeightMargin) * (e.weight / largest));
  }
  return edges;
}

WeightedGraph ParseMatrixCsv(std::string_view text, bool normalize) {
  std::vector<std::vector<std::string_view>> rows;
  std::vector<int> line_of;
  const auto lines = SplitLines(text);
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    if (Trim(lines[i]).empty()) continue;
    rows.push_back(SplitFields(lines[i], ','));
    line_of.push_back(i + 1);
  }
  if (rows.empty()) throw Error(ErrorCode::kParse, "empty matrix");

  std::vector<std::string> labels;
  const bool header = std::any_of(rows.front().begin(), rows.front().end(),
                                  [](std::string_view t) { return !ToNumber(t); });
  if (header) {
    for (std::string_view t : rows.front()) labels.emplace_back(t);
    rows.erase(rows.begin());
    line_of.erase(line_of.begin());
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorCode::kNotSquare, "header without rows");
  if (header && static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::kNotSquare,
                "header has " + std::to_string(labels.size()) +
                    " labels for " + std::to_string(n) + " rows");
  }
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw Error(ErrorCode::kNotSquare,
                  At(line_of[i]) + "expected " + std::to_string(n) +
                      " values, got " + std::to_string(rows[i].size()));
    }
    for (int j = 0; j < n; ++j) {
      const auto v = ToNumber(rows[i][j]);
      if (!v) {
        throw Error(ErrorCode::kParse, At(line_of[i]) + "'" +
                                           std::string(rows[i][j]) +
                                           "' is not a number");
      }
      a[static_cast<std::size_t>(i) * n + j] = *v;
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double upper = a[static_cast<std::size_t>(i) * n + j];
      const double lower = a[static_cast<std::size_t>(j) * n + i];
      if (std::abs(upper - lower) > kSymmetryTolerance) {
        throw Error(ErrorCode::kAsymmetric,
                    "A[" + std::to_string(i) + "," + std::to_string(j) +
                        "]=" + FormatDecimal(upper) + " but A[" +
                        std::to_string(j) + "," + std::to_string(i) +
                        "]=" + FormatDecimal(lower));
      }
      const double w = upper == lower ? upper : 0.5 * (upper + lower);
      edges.push_back({i, j, w});
    }
  }
  return Finish(n, std::move(edges), std::move(labels), normalize);
}

WeightedGraph ParseEdgeList(std::string_view text, bool normalize) {
  std::map<std::string, int, std::less<>> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  auto node = [&](std::string_view label) {
    const auto it = index.find(label);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(labels.size());
    labels.emplace_back(label);
    index.emplace(std::string(label), id);
    return id;
  };

  const auto lines = SplitLines(text);
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    const std::string_view line = Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = SplitFields(line, ',');
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorCode::kParse, At(i + 1) + "expected u,v,w");
    }
    const auto w = ToNumber(fields[2]);
    if (!w) {
      throw Error(ErrorCode::kParse, At(i + 1) + "'" + std::string(fields[2]) +
                                         "' is not a number");
    }
    const int u = node(fields[0]);
    const int v = node(fields[1]);
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop,
                  At(i + 1) + "self loop at '" + std::string(fields[0]) + "'");
    }
    if (!seen.insert(std::minmax(u, v)).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  At(i + 1) + "edge " + std::string(fields[0]) + "," +
                      std::string(fields[1]) + " repeated");
    }
    if (!normalize && !(*w > 0.0 && *w < 1.0)) {
      throw Error(ErrorCode::kWeightOutOfRange,
                  At(i + 1) + "weight " + FormatDecimal(*w) +
                      " outside (0,1)");
    }
    edges.push_back({u, v, *w});
  }
  if (labels.empty()) throw Error(ErrorCode::kParse, "edge list is empty");
  const int n = static_cast<int>(labels.size());
  return Finish(n, std::move(edges), std::move(labels), normalize);
}

PointSet ParsePoints(std::string_view text) {
  PointSet points;
  const auto lines = SplitLines(text);
  std::size_t dimension = 0;
  for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
    const std::string_view line = Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    auto tokens = SplitWhitespace(line);
    std::string label = std::to_string(points.coordinates.size());
    if (!ToNumber(tokens.front())) {
      label = std::string(tokens.front());
      tokens.erase(tokens.begin());
    }
    std::vector<double> coords;
    for (std::string_view t : tokens) {
      const auto v = ToNumber(t);
      if (!v) {
        throw Error(ErrorCode::kParse,
                    At(i + 1) + "'" + std::string(t) + "' is not a number");
      }
      coords.push_back(*v);
    }
    if (coords.empty()) {
      throw Error(ErrorCode::kParse, At(i + 1) + "point has no coordinates");
    }
    if (points.coordinates.empty()) {
      dimension = coords.size();
    } else if (coords.size() != dimension) {
      throw Error(ErrorCode::kDimensionMismatch,
                  At(i + 1) + "expected " + std::to_string(dimension) +
                      " coordinates, got " + std::to_string(coords.size()));
    }
    points.labels.push_back(std::move(label));
    points.coordinates.push_back(std::move(coords));
  }
  if (points.coordinates.empty()) {
    throw Error(ErrorCode::kParse, "no points");
  }
  return points;
}

WeightedGraph PointsToSimilarity(const PointSet& points, const Kernel& kernel,
                                 std::vector<std::string>* warnings) {
  if (kernel.kind == KernelKind::kGaussian && !(kernel.sigma > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "sigma must be positive");
  }
  const int n = static_cast<int>(points.coordinates.size());
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "no points");
  const std::size_t dimension = points.coordinates.front().size();
  for (const auto& p : points.coordinates) {
    if (p.size() != dimension) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "points have different dimensions");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double squared = 0.0;
      for (std::size_t d = 0; d < dimension; ++d) {
        const double delta = points.coordinates[i][d] - points.coordinates[j][d];
        squared += delta * delta;
      }
      double w = kernel.kind == KernelKind::kGaussian
                     ? std::exp(-squared / (2.0 * kernel.sigma * kernel.sigma))
                     : 1.0 / (1.0 + std::sqrt(squared));
      if (w >= 1.0) {
        w = 1.0 - kWeightMargin;
        if (warnings) {
          warnings->push_back("points " + points.labels[i] + " and " +
                              points.labels[j] +
                              " coincide; similarity clamped below 1");
        }
      } else if (w < std::numeric_limits<double>::min()) {
        w = std::numeric_limits<double>::min();
        if (warnings) {
          warnings->push_back("similarity of " + points.labels[i] + " and " +
                              points.labels[j] +
                              " underflowed; clamped above 0");
        }
      }
      edges.push_back({i, j, w});
    }
  }
  return BuildGraph(n, edges, points.labels);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorCode::kIo, "sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

LoadedInput LoadInput(const InputSpec& spec) {
  const std::string bytes = ReadFile(spec.path);
  std::vector<std::string> warnings;
  auto graph = [&]() {
    switch (spec.format) {
      case InputFormat::kMatrix:
        return ParseMatrixCsv(bytes, spec.normalize);
      case InputFormat::kEdgeList:
        return ParseEdgeList(bytes, spec.normalize);
      case InputFormat::kPoints:
        return PointsToSimilarity(ParsePoints(bytes),
                                  spec.kernel.value_or(Kernel{}), &warnings);
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown format");
  }();
  return {std::move(graph), "sha256:" + Sha256Hex(bytes), std::move(warnings)};
}

std::string WriteEdgeList(const WeightedGraph& graph) {
  std::string out;
  for (const Edge& e : graph.edges()) {
    out += graph.label(e.u) + "," + graph.label(e.v) + "," +
           FormatDecimal(e.weight) + "\n";
  }
  return out;
}

std::string WriteMatrixCsv(const WeightedGraph& graph) {
  const int n = graph.node_count();
  std::string out;
  // Positional labels are implied by a header-less matrix; a header of
  // numbers would be read back as a data row.
  bool positional = true;
  for (int i = 0; i < n; ++i) {
    positional = positional && graph.label(i) == std::to_string(i);
  }
  if (!positional) {
    for (int i = 0; i < n; ++i) out += (i ? "," : "") + graph.label(i);
    out += "\n";
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ",";
      out += FormatDecimal(graph.weight(i, j).value_or(0.0));
    }
    out += "\n";
  }
  return out;
}

ResultDocument MakeResultDocument(const SolveResult& result,
                                  const WeightedGraph& graph,
                                  const RootedTree& tree, bool any_k,
                                  std::string_view input_digest) {
  ResultDocument doc;
  doc.phi = FormatDecimal(result.phi.value());
  doc.phi_numerator = result.phi.numerator();
  doc.phi_denominator = result.phi.denominator();
  doc.k = result.k;
  for (const Cluster& c : result.clustering.clusters) {
    auto& names = doc.clusters.emplace_back();
    for (NodeId v : c) names.push_back(graph.label(v));
    std::sort(names.begin(), names.end());
  }
  std::sort(doc.clusters.begin(), doc.clusters.end());
  auto labeled = [&graph](std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end(), EndpointLess);
    std::vector<LabeledEdge> out;
    for (const Edge& e : edges) {
      const auto [a, b] = std::minmax(e.u, e.v);
      out.push_back({graph.label(a), graph.label(b), e.weight});
    }
    return out;
  };
  doc.cut_edges = labeled(result.cut_edges);
  doc.mst_edges = labeled(tree.edges());
  doc.solver = any_k ? "any_k" : "fixed_k";
  doc.input_digest = std::string(input_digest);
  return doc;
}

std::string SerializeResult(const ResultDocument& doc) {
  nlohmann::ordered_json j;
  j["phi"] = doc.phi;
  j["phi_exact"] = {doc.phi_numerator, doc.phi_denominator};
  j["k"] = doc.k;
  j["clusters"] = doc.clusters;
  j["cut_edges"] = nlohmann::ordered_json::array();
  for (const auto& e : doc.cut_edges) j["cut_edges"].push_back(EdgeJson(e));
  j["mst_edges"] = nlohmann::ordered_json::array();
  for (const auto& e : doc.mst_edges) j["mst_edges"].push_back(EdgeJson(e));
  j["solver"] = doc.solver;
  j["input_digest"] = doc.input_digest;
  return j.dump(2) + "\n";
}

std::string EmitDot(const WeightedGraph& graph, const RootedTree& tree,
                    const Clustering& clustering) {
  const int n = graph.node_count();
  std::vector<int> owner(n, 0);
  const Clustering canonical = Canonical(clustering);
  for (int i = 0; i < static_cast<int>(canonical.size()); ++i) {
    for (NodeId v : canonical.clusters[i]) owner[v] = i;
  }
  std::set<std::pair<NodeId, NodeId>> tree_edges;
  for (const Edge& e : tree.edges()) tree_edges.insert(std::minmax(e.u, e.v));

  std::ostringstream out;
  out << "graph balclust {\n";
  out << "  node [style=filled, colorscheme=set312];\n";
  for (NodeId v = 0; v < n; ++v) {
    out << "  " << QuoteDot(graph.label(v)) << " [fillcolor="
        << (owner[v] % 12) + 1 << ", cluster=" << owner[v] << "];\n";
  }
  for (const Edge& e : graph.edges()) {
    out << "  " << QuoteDot(graph.label(e.u)) << " -- "
        << QuoteDot(graph.label(e.v)) << " [label=\""
        << FormatDecimal(e.weight) << "\"";
    if (tree_edges.contains(std::minmax(e.u, e.v))) {
      out << (owner[e.u] != owner[e.v] ? ", style=dashed" : ", style=bold");
    } else {
      out << ", color=gray70";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace balclust
