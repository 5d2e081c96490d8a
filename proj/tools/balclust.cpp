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

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "balclust/dp.hpp"
#include "balclust/error.hpp"
#include "balclust/generators.hpp"
#include "balclust/io.hpp"
#include "balclust/measure.hpp"
#include "balclust/oracle.hpp"
#include "balclust/spanning_tree.hpp"
#include "json.hpp"

namespace {

using namespace balclust;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasibleK: return kExitInfeasible;
    case ErrorCode::kBudgetExceeded: return kExitBudget;
    case ErrorCode::kCorruptProvenance: return kExitDisagreement;
    default: return kExitInput;
  }
}

struct InputOptions {
  std::string path;
  std::string format = "matrix";
  std::string kernel = "gaussian";
  double sigma = 1.0;
  bool normalize = false;
};

void AddInputOptions(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "input file")->required();
  cmd->add_option("--format", in.format, "matrix, edgelist or points")
      ->check(CLI::IsMember({"matrix", "edgelist", "points"}));
  cmd->add_option("--kernel", in.kernel, "points kernel: gaussian or inverse")
      ->check(CLI::IsMember({"gaussian", "inverse"}));
  cmd->add_option("--sigma", in.sigma, "gaussian kernel width")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--normalize", in.normalize,
                "rescale weights into (0,1) instead of rejecting them");
}

LoadedInput Load(const InputOptions& in) {
  InputSpec spec;
  spec.path = in.path;
  spec.normalize = in.normalize;
  if (in.format == "edgelist") {
    spec.format = InputFormat::kEdgeList;
  } else if (in.format == "points") {
    spec.format = InputFormat::kPoints;
    spec.kernel = Kernel{in.kernel == "inverse" ? KernelKind::kInverse
                                                : KernelKind::kGaussian,
                         in.sigma};
  }
  LoadedInput loaded = LoadInput(spec);
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
  return loaded;
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path);
}

struct SolveOptions {
  InputOptions input;
  std::optional<int> k;
  bool any_k = false;
  std::string output;
  std::string dot;
};

int RunSolve(const SolveOptions& opt) {
  const LoadedInput loaded = Load(opt.input);
  const RootedTree tree = MaximumSpanningRootedTree(loaded.graph);
  const bool any_k = !opt.k.has_value();
  const SolveResult result = any_k ? SolveAnyK(tree) : SolveFixedK(tree, *opt.k);
  const std::string text = SerializeResult(
      MakeResultDocument(result, loaded.graph, tree, any_k, loaded.digest));
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    WriteText(opt.output, text);
  }
  if (!opt.dot.empty()) {
    WriteText(opt.dot, EmitDot(loaded.graph, tree, result.clustering));
  }
  return kExitOk;
}

struct VerifyOptions {
  InputOptions input;
  std::optional<int> k;
  std::optional<int> max_nodes;
};

std::string Show(const Ratio& r) { return FormatDecimal(r.value()); }

int RunVerify(const VerifyOptions& opt) {
  const LoadedInput loaded = Load(opt.input);
  const WeightedGraph& graph = loaded.graph;
  const int n = graph.node_count();
  EnumerationBudget budget = EnumerationBudget::FromEnvironment();
  if (opt.max_nodes) budget.max_nodes_tree = *opt.max_nodes;
  if (n > budget.max_nodes_tree) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(n) + " nodes exceed the tree oracle limit of " +
                    std::to_string(budget.max_nodes_tree));
  }
  const RootedTree tree = MaximumSpanningRootedTree(graph);
  const bool graph_oracle = n <= budget.max_nodes_graph;

  std::vector<int> ks;
  if (opt.k) {
    ks.push_back(*opt.k);
  } else {
    for (int k = 1; k <= n; ++k) ks.push_back(k);
  }

  bool agree = true;
  std::optional<Ratio> best_multi;
  for (int k : ks) {
    const SolveResult dp = SolveFixedK(tree, k);
    const SolveResult brute = BruteForceTree(tree, k, budget);
    bool ok = dp.phi == brute.phi &&
              PhiRestricted(tree, dp.clustering) == dp.phi &&
              PhiClustering(graph, dp.clustering) == dp.phi;
    std::cout << "k=" << k << " solver=" << Show(dp.phi)
              << " tree_oracle=" << Show(brute.phi);
    if (graph_oracle) {
      const SolveResult full = BruteForceGraph(graph, k, budget);
      ok = ok && full.phi == dp.phi;
      std::cout << " graph_oracle=" << Show(full.phi);
    }
    std::cout << (ok ? " ok" : " MISMATCH") << "\n";
    agree = agree && ok;
    if (k >= 2 && (!best_multi || dp.phi < *best_multi)) best_multi = dp.phi;
  }

  if (!opt.k && n >= 2) {
    const SolveResult any = SolveAnyK(tree);
    const bool ok = any.phi == *best_multi;
    std::cout << "any_k solver=" << Show(any.phi) << " k=" << any.k
              << " min_fixed_k=" << Show(*best_multi)
              << (ok ? " ok" : " MISMATCH") << "\n";
    agree = agree && ok;
  }
  return agree ? kExitOk : kExitDisagreement;
}

struct BenchOptions {
  int n = 100;
  int k = 8;
  std::uint64_t seed = 1;
  int reps = 1;
};

int RunBench(const BenchOptions& opt) {
  using Clock = std::chrono::steady_clock;
  auto seconds = [](Clock::duration d) {
    return std::chrono::duration<double>(d).count();
  };
  Rng rng(opt.seed);
  const WeightedGraph graph = RandomCompleteGraph(opt.n, rng);

  double mst_best = 1e300, fixed_best = 1e300, any_best = 1e300;
  std::optional<SolveResult> fixed, any;
  for (int rep = 0; rep < opt.reps; ++rep) {
    auto t0 = Clock::now();
    const RootedTree tree = MaximumSpanningRootedTree(graph);
    auto t1 = Clock::now();
    fixed = SolveFixedK(tree, opt.k);
    auto t2 = Clock::now();
    if (opt.n >= 2) any = SolveAnyK(tree);
    auto t3 = Clock::now();
    mst_best = std::min(mst_best, seconds(t1 - t0));
    fixed_best = std::min(fixed_best, seconds(t2 - t1));
    any_best = std::min(any_best, seconds(t3 - t2));
  }

  nlohmann::ordered_json j;
  j["n"] = opt.n;
  j["k"] = opt.k;
  j["seed"] = opt.seed;
  j["reps"] = opt.reps;
  j["mst_seconds"] = mst_best;
  j["fixed_k_seconds"] = fixed_best;
  j["fixed_k_phi"] = FormatDecimal(fixed->phi.value());
  if (any) {
    j["any_k_seconds"] = any_best;
    j["any_k_phi"] = FormatDecimal(any->phi.value());
    j["any_k_k"] = any->k;
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced clustering on maximum spanning trees"};
  app.require_subcommand(1);

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "cluster one input");
  AddInputOptions(solve_cmd, solve.input);
  auto* k_opt = solve_cmd->add_option("--k", solve.k, "number of clusters");
  auto* any_opt = solve_cmd->add_flag(
      "--any-k", solve.any_k, "choose the number of clusters (default)");
  k_opt->excludes(any_opt);
  solve_cmd->add_option("--output", solve.output, "result JSON path");
  solve_cmd->add_option("--dot", solve.dot, "Graphviz output path");

  VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "compare the solver with exhaustive search");
  AddInputOptions(verify_cmd, verify.input);
  verify_cmd->add_option("--k", verify.k, "check only this k");
  verify_cmd->add_option("--max-nodes", verify.max_nodes,
                         "node limit for the tree oracle")
      ->check(CLI::PositiveNumber);

  BenchOptions bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time a random complete graph");
  bench_cmd->add_option("--n", bench.n, "node count")->check(CLI::Range(1, 100000));
  bench_cmd->add_option("--k", bench.k, "cluster count")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "generator seed");
  bench_cmd->add_option("--reps", bench.reps, "repetitions; minimum reported")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*verify_cmd) return RunVerify(verify);
    return RunBench(bench);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
}
