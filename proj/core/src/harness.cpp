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
#include "vqewarm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vqewarm/io_format.hpp"

namespace vqewarm {

namespace {

// Stream tags for per-task seed derivation; the schedule never touches rng
// state.
enum StreamTag : std::uint64_t {
  kTrialStream = 1,
  kGraphStream = 2,
  kSeedInitStream = 3,
  kSpsaStream = 4,
  kSelectStream = 5,
};

std::uint64_t task_id(int target_index, int strategy_index) {
  return static_cast<std::uint64_t>(target_index) * 64 +
         static_cast<std::uint64_t>(strategy_index);
}

struct RunningStats {
  std::int64_t count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
  double mean() const { return count > 0 ? sum / count : 0.0; }
  // Sample standard deviation; 0 for fewer than two observations.
  double stddev() const {
    if (count < 2) return 0.0;
    const double m = mean();
    const double var = (sum_sq - count * m * m) / (count - 1);
    return var > 0.0 ? std::sqrt(var) : 0.0;
  }
};

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double stddev_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.n < 1) {
    throw std::invalid_argument("config: n must be >= 1");
  }
  if (cfg.k < 2) {
    throw std::invalid_argument(
        "config: k must be >= 2 (one seed plus at least one target)");
  }
  if (!(cfg.edge_probability >= 0.0 && cfg.edge_probability <= 1.0)) {
    throw std::invalid_argument("config: edge_probability must be in [0, 1]");
  }
  if (cfg.reps < 0) {
    throw std::invalid_argument("config: reps must be >= 0");
  }
  if (cfg.stride < 1) {
    throw std::invalid_argument("config: stride must be >= 1");
  }
  if (cfg.trials < 1) {
    throw std::invalid_argument("config: trials must be >= 1");
  }
  if (cfg.strategies.empty()) {
    throw std::invalid_argument("config: at least one strategy is required");
  }
  if (cfg.optimizer.max_iterations < 1 ||
      !(cfg.optimizer.energy_tolerance > 0.0) ||
      !(cfg.optimizer.step_tolerance > 0.0) ||
      !(cfg.optimizer.bounds.lo <= cfg.optimizer.bounds.hi)) {
    throw std::invalid_argument("config: invalid optimizer settings");
  }
}

namespace {

OptimizerMethod method_from_string(const std::string& name) {
  if (name == "gradient_quasi_newton") {
    return OptimizerMethod::kGradientQuasiNewton;
  }
  if (name == "simultaneous_perturbation") {
    return OptimizerMethod::kSimultaneousPerturbation;
  }
  throw std::invalid_argument("config: unknown optimizer method '" + name +
                              "'");
}

const char* method_to_string(OptimizerMethod method) {
  return method == OptimizerMethod::kGradientQuasiNewton
             ? "gradient_quasi_newton"
             : "simultaneous_perturbation";
}

std::vector<Strategy> strategies_from_string(const std::string& text) {
  std::vector<Strategy> strategies;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    const std::string label{trim(item)};
    if (label.empty()) continue;
    strategies.push_back(strategy_from_label(label));
  }
  return strategies;
}

std::string strategies_to_string(const std::vector<Strategy>& strategies) {
  std::string out;
  for (const Strategy& s : strategies) {
    if (!out.empty()) out += ",";
    out += strategy_label(s);
  }
  return out;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view body = trim(line);
    const std::size_t hash = body.find('#');
    if (hash != std::string_view::npos) body = trim(body.substr(0, hash));
    if (body.empty()) continue;
    const std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw std::runtime_error("config line " + std::to_string(line_number) +
                               ": expected 'key = value'");
    }
    const std::string key{trim(body.substr(0, eq))};
    const std::string value{trim(body.substr(eq + 1))};

    if (key == "n") {
      cfg.n = static_cast<int>(parse_int(value, key));
    } else if (key == "k") {
      cfg.k = static_cast<int>(parse_int(value, key));
    } else if (key == "edge_probability") {
      cfg.edge_probability = parse_double(value, key);
    } else if (key == "reps") {
      cfg.reps = static_cast<int>(parse_int(value, key));
    } else if (key == "stride") {
      cfg.stride = static_cast<int>(parse_int(value, key));
    } else if (key == "trials") {
      cfg.trials = static_cast<int>(parse_int(value, key));
    } else if (key == "strategies") {
      cfg.strategies = strategies_from_string(value);
    } else if (key == "master_seed") {
      cfg.master_seed = parse_uint(value, key);
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    } else if (key == "optimizer.method") {
      cfg.optimizer.method = method_from_string(value);
    } else if (key == "optimizer.max_iterations") {
      cfg.optimizer.max_iterations = static_cast<int>(parse_int(value, key));
    } else if (key == "optimizer.energy_tolerance") {
      cfg.optimizer.energy_tolerance = parse_double(value, key);
    } else if (key == "optimizer.step_tolerance") {
      cfg.optimizer.step_tolerance = parse_double(value, key);
    } else if (key == "optimizer.bound_low") {
      cfg.optimizer.bounds.lo = parse_double(value, key);
    } else if (key == "optimizer.bound_high") {
      cfg.optimizer.bounds.hi = parse_double(value, key);
    } else {
      throw std::runtime_error("config line " + std::to_string(line_number) +
                               ": unknown key '" + key + "'");
    }
  }
  validate_config(cfg);
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("parse_config_file: cannot open " + path);
  }
  return parse_config(in);
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "n = " << cfg.n << '\n';
  out << "k = " << cfg.k << '\n';
  out << "edge_probability = " << format_double(cfg.edge_probability) << '\n';
  out << "reps = " << cfg.reps << '\n';
  out << "stride = " << cfg.stride << '\n';
  out << "trials = " << cfg.trials << '\n';
  out << "strategies = " << strategies_to_string(cfg.strategies) << '\n';
  out << "master_seed = " << cfg.master_seed << '\n';
  out << "output_dir = " << cfg.output_dir << '\n';
  out << "optimizer.method = " << method_to_string(cfg.optimizer.method)
      << '\n';
  out << "optimizer.max_iterations = " << cfg.optimizer.max_iterations << '\n';
  out << "optimizer.energy_tolerance = "
      << format_double(cfg.optimizer.energy_tolerance) << '\n';
  out << "optimizer.step_tolerance = "
      << format_double(cfg.optimizer.step_tolerance) << '\n';
  out << "optimizer.bound_low = " << format_double(cfg.optimizer.bounds.lo)
      << '\n';
  out << "optimizer.bound_high = " << format_double(cfg.optimizer.bounds.hi)
      << '\n';
  return out.str();
}

std::vector<Graph> trial_graphs(const ExperimentConfig& cfg, int trial_index) {
  const std::uint64_t trial_seed =
      derive_seed(cfg.master_seed, kTrialStream,
                  static_cast<std::uint64_t>(trial_index));
  Rng rng(derive_seed(trial_seed, kGraphStream));
  std::vector<Graph> graphs;
  graphs.reserve(static_cast<std::size_t>(cfg.k));
  for (int g = 0; g < cfg.k; ++g) {
    graphs.push_back(random_graph(cfg.n, cfg.edge_probability, rng));
  }
  return graphs;
}

TrialRecord run_trial(const ExperimentConfig& cfg, int trial_index) {
  validate_config(cfg);
  const std::uint64_t trial_seed =
      derive_seed(cfg.master_seed, kTrialStream,
                  static_cast<std::uint64_t>(trial_index));
  const AnsatzSpec spec{cfg.n, cfg.reps};

  const std::vector<Graph> graphs = trial_graphs(cfg, trial_index);
  const Graph& seed_graph = graphs.back();  // last graph is the seed

  TrialRecord record;
  record.trial_index = trial_index;
  record.seed_graph = seed_graph;

  // Seed solve from a random initial point.
  Rng init_rng(derive_seed(trial_seed, kSeedInitStream));
  const ParameterVector initial =
      random_initial(spec, cfg.optimizer.bounds, init_rng);
  OptimizerConfig seed_cfg = cfg.optimizer;
  seed_cfg.spsa_seed = derive_seed(trial_seed, kSpsaStream, 0);
  const IsingHamiltonian seed_ham = build_hamiltonian(seed_graph);
  const VqeResult seed_result = run_vqe(seed_ham, spec, initial, seed_cfg);

  const Trajectory kept = subsample_trajectory(seed_result.trajectory,
                                               cfg.stride);
  record.seed_run.initial_energy = seed_result.trajectory.entries.front().energy;
  record.seed_run.final_energy = seed_result.final_energy;
  record.seed_run.iterations = seed_result.iterations;
  record.seed_run.evaluations = seed_result.evaluations;
  record.seed_run.trajectory_length =
      static_cast<int>(seed_result.trajectory.entries.size());
  record.seed_run.subsampled_points = static_cast<int>(kept.entries.size());
  record.seed_run.termination = seed_result.termination;
  if (seed_result.trajectory.entries.size() >= 2) {
    record.seed_param_change = parameter_change_series(seed_result.trajectory);
  }

  // Cross-evaluate the kept points on every target.
  std::vector<ParameterVector> points;
  points.reserve(kept.entries.size());
  for (const TrajectoryEntry& e : kept.entries) points.push_back(e.params);
  std::vector<IsingHamiltonian> target_hams;
  target_hams.reserve(graphs.size() - 1);
  for (std::size_t g = 0; g + 1 < graphs.size(); ++g) {
    target_hams.push_back(build_hamiltonian(graphs[g]));
  }
  const CrossEvaluation ce = cross_evaluate(points, target_hams, spec);

  for (int t = 0; t < cfg.k - 1; ++t) {
    TargetRecord target;
    target.target_index = t;
    target.graph = graphs[static_cast<std::size_t>(t)];
    target.exact_ground_energy =
        exact_ground_energy(target_hams[static_cast<std::size_t>(t)]).energy;

    for (std::size_t s = 0; s < cfg.strategies.size(); ++s) {
      const Strategy& strategy = cfg.strategies[s];
      Rng select_rng(derive_seed(trial_seed, kSelectStream,
                                 task_id(t, static_cast<int>(s))));
      const SelectionResult selection = select_initial(
          ce, t, strategy, spec, cfg.optimizer.bounds, select_rng);

      OptimizerConfig run_cfg = cfg.optimizer;
      run_cfg.spsa_seed = derive_seed(trial_seed, kSpsaStream,
                                      1 + task_id(t, static_cast<int>(s)));
      const VqeResult result =
          run_vqe(target_hams[static_cast<std::size_t>(t)], spec,
                  selection.chosen_point, run_cfg);

      StrategyRunRecord run;
      run.strategy = strategy;
      run.chosen_index = selection.chosen_index;
      run.selection_value = selection.objective_value;
      run.initial_energy = result.trajectory.entries.front().energy;
      run.final_energy = result.final_energy;
      run.iterations = result.iterations;
      run.evaluations = result.evaluations;
      run.termination = result.termination;
      run.optimality_gap = result.final_energy - target.exact_ground_energy;
      target.runs.push_back(std::move(run));
    }
    record.targets.push_back(std::move(target));
  }
  return record;
}

std::vector<StrategyAggregate> aggregate_per_run(
    const ExperimentConfig& cfg, const std::vector<TrialRecord>& trials) {
  std::vector<StrategyAggregate> aggregates;
  for (const Strategy& strategy : cfg.strategies) {
    RunningStats iterations, final_energy, gap;
    for (const TrialRecord& trial : trials) {
      for (const TargetRecord& target : trial.targets) {
        for (const StrategyRunRecord& run : target.runs) {
          if (!(run.strategy == strategy)) continue;
          iterations.add(static_cast<double>(run.iterations));
          final_energy.add(run.final_energy);
          gap.add(run.optimality_gap);
        }
      }
    }
    StrategyAggregate agg;
    agg.strategy = strategy;
    agg.count = iterations.count;
    agg.mean_iterations = iterations.mean();
    agg.std_iterations = iterations.stddev();
    agg.mean_final_energy = final_energy.mean();
    agg.std_final_energy = final_energy.stddev();
    agg.mean_optimality_gap = gap.mean();
    agg.std_optimality_gap = gap.stddev();
    aggregates.push_back(agg);
  }
  return aggregates;
}

std::vector<StrategyAggregate> aggregate_per_trial(
    const ExperimentConfig& cfg, const std::vector<TrialRecord>& trials) {
  std::vector<StrategyAggregate> aggregates;
  for (const Strategy& strategy : cfg.strategies) {
    std::vector<double> trial_iterations, trial_energy, trial_gap;
    std::int64_t total_runs = 0;
    for (const TrialRecord& trial : trials) {
      RunningStats iterations, final_energy, gap;
      for (const TargetRecord& target : trial.targets) {
        for (const StrategyRunRecord& run : target.runs) {
          if (!(run.strategy == strategy)) continue;
          iterations.add(static_cast<double>(run.iterations));
          final_energy.add(run.final_energy);
          gap.add(run.optimality_gap);
        }
      }
      if (iterations.count == 0) continue;
      total_runs += iterations.count;
      trial_iterations.push_back(iterations.mean());
      trial_energy.push_back(final_energy.mean());
      trial_gap.push_back(gap.mean());
    }
    StrategyAggregate agg;
    agg.strategy = strategy;
    agg.count = total_runs;
    agg.mean_iterations = mean_of(trial_iterations);
    agg.std_iterations = stddev_of(trial_iterations);
    agg.mean_final_energy = mean_of(trial_energy);
    agg.std_final_energy = stddev_of(trial_energy);
    agg.mean_optimality_gap = mean_of(trial_gap);
    agg.std_optimality_gap = stddev_of(trial_gap);
    aggregates.push_back(agg);
  }
  return aggregates;
}

std::optional<AgreementStats> agreement_stats(
    const ExperimentConfig& cfg, const std::vector<TrialRecord>& trials) {
  // First configured all-points and first-half strategies, compared per
  // (target, trial) pair.
  std::optional<Strategy> all_strategy, half_strategy;
  for (const Strategy& s : cfg.strategies) {
    if (s.kind == StrategyKind::kAllPoints && !all_strategy) all_strategy = s;
    if (s.kind == StrategyKind::kFirstHalf && !half_strategy) {
      half_strategy = s;
    }
  }
  if (!all_strategy || !half_strategy) return std::nullopt;

  AgreementStats stats;
  stats.tolerance = kAgreementTolerance;
  double abs_diff_sum = 0.0;
  for (const TrialRecord& trial : trials) {
    for (const TargetRecord& target : trial.targets) {
      std::optional<double> all_energy, half_energy;
      for (const StrategyRunRecord& run : target.runs) {
        if (run.strategy == *all_strategy) all_energy = run.final_energy;
        if (run.strategy == *half_strategy) half_energy = run.final_energy;
      }
      if (!all_energy || !half_energy) continue;
      ++stats.pairs;
      const double diff = std::abs(*all_energy - *half_energy);
      abs_diff_sum += diff;
      if (diff <= stats.tolerance) ++stats.agreeing;
    }
  }
  if (stats.pairs == 0) return std::nullopt;
  stats.fraction =
      static_cast<double>(stats.agreeing) / static_cast<double>(stats.pairs);
  stats.mean_abs_difference =
      abs_diff_sum / static_cast<double>(stats.pairs);
  return stats;
}

ExperimentReport assemble_report(ExperimentConfig cfg,
                                 std::vector<TrialRecord> trials) {
  ExperimentReport report;
  report.config = std::move(cfg);
  report.trials = std::move(trials);
  report.aggregates_per_run = aggregate_per_run(report.config, report.trials);
  report.aggregates_per_trial =
      aggregate_per_trial(report.config, report.trials);
  double discrepancy = 0.0;
  for (std::size_t i = 0; i < report.aggregates_per_run.size(); ++i) {
    const StrategyAggregate& a = report.aggregates_per_run[i];
    const StrategyAggregate& b = report.aggregates_per_trial[i];
    discrepancy = std::max(
        {discrepancy, std::abs(a.mean_iterations - b.mean_iterations),
         std::abs(a.mean_final_energy - b.mean_final_energy),
         std::abs(a.mean_optimality_gap - b.mean_optimality_gap)});
  }
  report.max_weighting_discrepancy = discrepancy;
  report.agreement = agreement_stats(report.config, report.trials);
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, int threads) {
  validate_config(cfg);
  if (threads < 0) {
    throw std::invalid_argument("run_experiment: threads must be >= 0");
  }
  unsigned worker_count = threads == 0
                              ? std::max(1u, std::thread::hardware_concurrency())
                              : static_cast<unsigned>(threads);
  worker_count = std::min<unsigned>(
      worker_count, static_cast<unsigned>(cfg.trials));

  std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials));
  if (worker_count <= 1) {
    for (int t = 0; t < cfg.trials; ++t) {
      records[static_cast<std::size_t>(t)] = run_trial(cfg, t);
    }
  } else {
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
      workers.emplace_back([&] {
        while (true) {
          const int t = next.fetch_add(1);
          if (t >= cfg.trials) return;
          try {
            records[static_cast<std::size_t>(t)] = run_trial(cfg, t);
          } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (std::thread& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
  }

  ExperimentReport report = assemble_report(cfg, std::move(records));
  write_report_files(report, report.config.output_dir);
  return report;
}

void emit_plot_data(const ExperimentReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);

  {
    std::ofstream out(fs::path(dir) / "strategy_summary.csv");
    if (!out) {
      throw std::runtime_error("emit_plot_data: cannot write to " + dir);
    }
    out << "strategy,mean_iterations,std_iterations,mean_final_energy,"
           "std_final_energy\n";
    for (const StrategyAggregate& agg : report.aggregates_per_run) {
      out << strategy_label(agg.strategy) << ','
          << format_double(agg.mean_iterations) << ','
          << format_double(agg.std_iterations) << ','
          << format_double(agg.mean_final_energy) << ','
          << format_double(agg.std_final_energy) << '\n';
    }
    if (!out) {
      throw std::runtime_error("emit_plot_data: write failed in " + dir);
    }
  }

  {
    std::ofstream out(fs::path(dir) / "param_change.csv");
    if (!out) {
      throw std::runtime_error("emit_plot_data: cannot write to " + dir);
    }
    out << "iter,delta\n";
    for (const TrialRecord& trial : report.trials) {
      for (std::size_t i = 0; i < trial.seed_param_change.size(); ++i) {
        // Row i is the change arriving at iterate i + 1.
        out << (i + 1) << ',' << format_double(trial.seed_param_change[i])
            << '\n';
      }
    }
    if (!out) {
      throw std::runtime_error("emit_plot_data: write failed in " + dir);
    }
  }
}

void write_report_files(const ExperimentReport& report,
                        const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("write_report_files: cannot create " + dir +
                             ": " + ec.message());
  }
  const fs::path report_path = fs::path(dir) / "report.json";
  std::ofstream out(report_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_report_files: cannot open " +
                             report_path.string());
  }
  out << report_to_json(report);
  if (!out) {
    throw std::runtime_error("write_report_files: write failed for " +
                             report_path.string());
  }
  out.close();
  emit_plot_data(report, dir);
}

ExperimentReport read_report_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("read_report_file: cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return report_from_json(buffer.str());
}

}  // namespace vqewarm
