/* Copyright 2026 The vqewarm Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vqewarm/harness.hpp"
#include "vqewarm/io_format.hpp"

namespace {

namespace fs = std::filesystem;
using namespace vqewarm;

std::string graph_file_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "graph_%03d.txt", index);
  return buf;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create directory " + dir + ": " +
                             ec.message());
  }
}

void print_aggregates(const ExperimentReport& report) {
  std::printf("%-22s %8s %12s %12s %14s %12s\n", "strategy", "runs",
              "mean_iters", "std_iters", "mean_energy", "mean_gap");
  for (const StrategyAggregate& agg : report.aggregates_per_run) {
    std::printf("%-22s %8lld %12.3f %12.3f %14.6f %12.6f\n",
                strategy_label(agg.strategy).c_str(),
                static_cast<long long>(agg.count), agg.mean_iterations,
                agg.std_iterations, agg.mean_final_energy,
                agg.mean_optimality_gap);
  }
  if (report.agreement) {
    std::printf(
        "all_points vs first_half: %lld/%lld pairs within %g (%.1f%%)\n",
        static_cast<long long>(report.agreement->agreeing),
        static_cast<long long>(report.agreement->pairs),
        report.agreement->tolerance, 100.0 * report.agreement->fraction);
  }
}

struct OptimizerFlags {
  std::string method = "gradient_quasi_newton";
  int max_iterations = 1000;
  double energy_tolerance = 1e-6;
  double step_tolerance = 1e-8;
  double bound_low = -kTwoPi;
  double bound_high = kTwoPi;

  void attach(CLI::App* cmd) {
    cmd->add_option("--method", method,
                    "gradient_quasi_newton or simultaneous_perturbation");
    cmd->add_option("--max-iterations", max_iterations,
                    "Optimizer iteration cap");
    cmd->add_option("--energy-tolerance", energy_tolerance,
                    "Stop when the energy improvement drops below this");
    cmd->add_option("--step-tolerance", step_tolerance,
                    "Stop when the step norm drops below this");
    cmd->add_option("--bound-low", bound_low, "Lower parameter bound");
    cmd->add_option("--bound-high", bound_high, "Upper parameter bound");
  }

  // Overlays explicitly passed flags onto `base` (the config-file settings
  // or the library defaults).
  OptimizerConfig resolve(const CLI::App* cmd, OptimizerConfig base) const {
    if (cmd->count("--method") != 0) {
      if (method == "gradient_quasi_newton") {
        base.method = OptimizerMethod::kGradientQuasiNewton;
      } else if (method == "simultaneous_perturbation") {
        base.method = OptimizerMethod::kSimultaneousPerturbation;
      } else {
        throw CLI::ValidationError("--method", "unknown optimizer method");
      }
    }
    if (cmd->count("--max-iterations") != 0) {
      base.max_iterations = max_iterations;
    }
    if (cmd->count("--energy-tolerance") != 0) {
      base.energy_tolerance = energy_tolerance;
    }
    if (cmd->count("--step-tolerance") != 0) {
      base.step_tolerance = step_tolerance;
    }
    if (cmd->count("--bound-low") != 0) base.bounds.lo = bound_low;
    if (cmd->count("--bound-high") != 0) base.bounds.hi = bound_high;
    return base;
  }
};

int run_gen_graphs(const std::optional<std::string>& config_path, int n, int k,
                   double p, std::uint64_t seed, std::string out_dir,
                   const CLI::App* cmd) {
  ExperimentConfig cfg;
  if (config_path) cfg = parse_config_file(*config_path);
  if (cmd->count("--n") != 0 || !config_path) cfg.n = n;
  if (cmd->count("--k") != 0 || !config_path) cfg.k = k;
  if (cmd->count("--p") != 0 || !config_path) cfg.edge_probability = p;
  if (cmd->count("--seed") != 0 || !config_path) cfg.master_seed = seed;
  if (cmd->count("--out") != 0 || !config_path) cfg.output_dir = out_dir;
  validate_config(cfg);

  // Same substream as trial 0 of an experiment with this config.
  const std::vector<Graph> graphs = trial_graphs(cfg, 0);
  ensure_dir(cfg.output_dir);
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    const fs::path path =
        fs::path(cfg.output_dir) / graph_file_name(static_cast<int>(g));
    write_graph_file(graphs[g], path.string());
    std::printf("%s  n=%d m=%zu\n", path.string().c_str(), graphs[g].n,
                graphs[g].edges.size());
  }
  std::printf("seed graph: %s (the last one)\n",
              graph_file_name(static_cast<int>(graphs.size()) - 1).c_str());
  return 0;
}

int run_solve(const CLI::App* cmd,
              const std::optional<std::string>& config_path,
              const std::string& graph_path, int reps,
              const OptimizerFlags& flags, std::uint64_t seed,
              std::string out_dir) {
  OptimizerConfig base;
  if (config_path) {
    const ExperimentConfig file_cfg = parse_config_file(*config_path);
    base = file_cfg.optimizer;
    if (cmd->count("--reps") == 0) reps = file_cfg.reps;
    if (cmd->count("--seed") == 0) seed = file_cfg.master_seed;
    if (cmd->count("--out") == 0) out_dir = file_cfg.output_dir;
  }
  const Graph graph = read_graph_file(graph_path);
  const IsingHamiltonian ham = build_hamiltonian(graph);
  const AnsatzSpec spec{graph.n, reps};

  OptimizerConfig cfg = flags.resolve(cmd, base);
  Rng rng(seed);
  const ParameterVector initial = random_initial(spec, cfg.bounds, rng);
  cfg.spsa_seed = derive_seed(seed, 1);

  const VqeResult result = run_vqe(ham, spec, initial, cfg);
  ensure_dir(out_dir);
  const fs::path out_path = fs::path(out_dir) / "trajectory.csv";
  write_trajectory_csv_file(result.trajectory, out_path.string());

  const GroundState ground = exact_ground_energy(ham);
  std::printf("trajectory: %s\n", out_path.string().c_str());
  std::printf(
      "iterations=%d evaluations=%lld final_energy=%s exact_ground=%s "
      "termination=%s\n",
      result.iterations, static_cast<long long>(result.evaluations),
      format_double(result.final_energy).c_str(),
      format_double(ground.energy).c_str(), to_string(result.termination));
  return 0;
}

int run_cross_eval(const CLI::App* cmd,
                   const std::optional<std::string>& config_path,
                   const std::string& trajectory_path,
                   const std::vector<std::string>& graph_paths,
                   std::optional<int> reps, int stride, std::string out_dir) {
  if (config_path) {
    const ExperimentConfig file_cfg = parse_config_file(*config_path);
    if (cmd->count("--stride") == 0) stride = file_cfg.stride;
    if (cmd->count("--reps") == 0) reps = file_cfg.reps;
    if (cmd->count("--out") == 0) out_dir = file_cfg.output_dir;
  }
  const Trajectory trajectory = read_trajectory_csv_file(trajectory_path);
  std::vector<IsingHamiltonian> targets;
  targets.reserve(graph_paths.size());
  int n = 0;
  for (const std::string& path : graph_paths) {
    const Graph g = read_graph_file(path);
    if (targets.empty()) {
      n = g.n;
    } else if (g.n != n) {
      throw std::runtime_error("target graphs disagree on vertex count");
    }
    targets.push_back(build_hamiltonian(g));
  }

  const int width =
      static_cast<int>(trajectory.entries.front().params.size());
  int r = 0;
  if (reps) {
    r = *reps;
  } else {
    if (width % n != 0 || width / n < 1) {
      throw std::runtime_error(
          "cannot infer reps: trajectory width is not a multiple of n");
    }
    r = width / n - 1;
  }
  const AnsatzSpec spec{n, r};

  const Trajectory kept = subsample_trajectory(trajectory, stride);
  std::vector<ParameterVector> points;
  points.reserve(kept.entries.size());
  for (const TrajectoryEntry& e : kept.entries) points.push_back(e.params);
  const CrossEvaluation ce = cross_evaluate(points, targets, spec);

  ensure_dir(out_dir);
  const fs::path matrix_path = fs::path(out_dir) / "cross_eval.csv";
  const fs::path points_path = fs::path(out_dir) / "points.csv";
  {
    std::ofstream out(matrix_path);
    if (!out) {
      throw std::runtime_error("cannot open " + matrix_path.string());
    }
    write_cross_evaluation_csv(ce, out);
  }
  write_trajectory_csv_file(kept, points_path.string());
  std::printf("%s: %zu points x %zu targets\n", matrix_path.string().c_str(),
              points.size(), targets.size());
  std::printf("points sidecar: %s\n", points_path.string().c_str());
  return 0;
}

int run_experiment_cmd(const std::string& config_path,
                       std::optional<std::uint64_t> seed,
                       std::optional<std::string> out_dir, int threads,
                       bool quiet) {
  ExperimentConfig cfg = parse_config_file(config_path);
  if (seed) cfg.master_seed = *seed;
  if (out_dir) cfg.output_dir = *out_dir;
  validate_config(cfg);

  if (!quiet) {
    std::printf(
        "experiment: n=%d k=%d p=%s reps=%d stride=%d trials=%d seed=%llu\n",
        cfg.n, cfg.k, format_double(cfg.edge_probability).c_str(), cfg.reps,
        cfg.stride, cfg.trials,
        static_cast<unsigned long long>(cfg.master_seed));
  }
  const ExperimentReport report = run_experiment(cfg, threads);
  if (!quiet) {
    print_aggregates(report);
    std::printf("report: %s\n",
                (fs::path(cfg.output_dir) / "report.json").string().c_str());
  }
  return 0;
}

int run_report_cmd(const std::string& report_path,
                   std::optional<std::string> out_dir) {
  const ExperimentReport report = read_report_file(report_path);
  const std::string dir =
      out_dir ? *out_dir : fs::path(report_path).parent_path().string();
  write_report_files(report, dir.empty() ? "." : dir);
  print_aggregates(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Statevector VQE for MaxCut Ising Hamiltonians with cross-instance "
      "warm starting"};
  app.require_subcommand(1);

  // gen-graphs
  auto* gen = app.add_subcommand(
      "gen-graphs", "Generate random MaxCut instances and write graph files");
  std::optional<std::string> gen_config;
  int gen_n = 6, gen_k = 9;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "out";
  gen->add_option("--config", gen_config, "Experiment config file");
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--k", gen_k, "Number of graphs (last one is the seed)");
  gen->add_option("--p", gen_p, "Edge probability")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed, "Master seed");
  gen->add_option("--out", gen_out, "Output directory");

  // solve
  auto* solve = app.add_subcommand(
      "solve", "Run a single VQE solve and write the trajectory CSV");
  std::optional<std::string> solve_config;
  std::string solve_graph;
  int solve_reps = 3;
  std::uint64_t solve_seed = 0;
  std::string solve_out = "out";
  OptimizerFlags solve_flags;
  solve->add_option("--config", solve_config,
                    "Config file supplying defaults (flags override)");
  solve->add_option("--graph", solve_graph, "Graph file")->required();
  solve->add_option("--reps", solve_reps, "Ansatz repetitions");
  solve->add_option("--seed", solve_seed,
                    "Seed for the random initial point (and the stochastic "
                    "optimizer)");
  solve->add_option("--out", solve_out, "Output directory");
  solve_flags.attach(solve);

  // cross-eval
  auto* cross = app.add_subcommand(
      "cross-eval",
      "Evaluate subsampled trajectory points on target graphs");
  std::optional<std::string> cross_config;
  std::string cross_trajectory;
  std::vector<std::string> cross_graphs;
  std::optional<int> cross_reps;
  int cross_stride = 10;
  std::string cross_out = "out";
  cross->add_option("--config", cross_config,
                    "Config file supplying defaults (flags override)");
  cross->add_option("--trajectory", cross_trajectory, "Trajectory CSV")
      ->required();
  cross->add_option("--graph", cross_graphs, "Target graph file (repeatable)")
      ->required()
      ->take_all();
  cross->add_option("--reps", cross_reps,
                    "Ansatz repetitions (default: inferred from the "
                    "trajectory width)");
  cross->add_option("--stride", cross_stride, "Subsample stride")
      ->check(CLI::PositiveNumber);
  cross->add_option("--out", cross_out, "Output directory");

  // experiment
  auto* exp = app.add_subcommand(
      "experiment", "Run the full multi-trial experiment from a config file");
  std::string exp_config;
  std::optional<std::uint64_t> exp_seed;
  std::optional<std::string> exp_out;
  int exp_threads = 0;
  bool exp_quiet = false;
  exp->add_option("--config", exp_config, "Experiment config file")
      ->required();
  exp->add_option("--seed", exp_seed, "Override master_seed");
  exp->add_option("--out", exp_out, "Override output_dir");
  exp->add_option("--threads", exp_threads,
                  "Worker threads for trials (0 = auto)");
  exp->add_flag("--quiet", exp_quiet, "Suppress the summary printout");

  // report
  auto* rep = app.add_subcommand(
      "report", "Recompute aggregates and plot data from a stored report");
  std::string rep_input;
  std::optional<std::string> rep_out;
  rep->add_option("report", rep_input, "Path to report.json")->required();
  rep->add_option("--out", rep_out,
                  "Output directory (default: alongside the input)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return run_gen_graphs(gen_config, gen_n, gen_k, gen_p, gen_seed,
                            gen_out, gen);
    }
    if (solve->parsed()) {
      return run_solve(solve, solve_config, solve_graph, solve_reps,
                       solve_flags, solve_seed, solve_out);
    }
    if (cross->parsed()) {
      return run_cross_eval(cross, cross_config, cross_trajectory,
                            cross_graphs, cross_reps, cross_stride,
                            cross_out);
    }
    if (exp->parsed()) {
      return run_experiment_cmd(exp_config, exp_seed, exp_out, exp_threads,
                                exp_quiet);
    }
    if (rep->parsed()) {
      return run_report_cmd(rep_input, rep_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
