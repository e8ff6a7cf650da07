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
#ifndef VQEWARM_HARNESS_HPP_
#define VQEWARM_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vqewarm/transfer.hpp"

namespace vqewarm {

// Full experiment: per trial, generate k graphs, solve the last one (the
// seed) from a random start, cross-evaluate its subsampled trajectory on the
// k-1 targets, then solve every target once per strategy. Everything is a
// pure function of this config, master_seed included.
struct ExperimentConfig {
  int n = 6;
  int k = 9;
  double edge_probability = 0.5;
  int reps = 3;
  int stride = 10;
  int trials = 10;
  std::vector<Strategy> strategies = {
      Strategy{StrategyKind::kAllPoints, SelectionObjective::kAbsEnergy},
      Strategy{StrategyKind::kFirstHalf, SelectionObjective::kAbsEnergy},
      Strategy{StrategyKind::kRandom, SelectionObjective::kAbsEnergy},
  };
  OptimizerConfig optimizer;
  std::uint64_t master_seed = 0;
  std::string output_dir = "out";
};

void validate_config(const ExperimentConfig& cfg);

// Flat key-value config text ("key = value" lines, '#' comments). Strategies
// are a comma list of labels, each "kind" or "kind:objective".
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);
std::string serialize_config(const ExperimentConfig& cfg);

struct SeedRunSummary {
  double initial_energy = 0.0;
  double final_energy = 0.0;
  int iterations = 0;
  std::int64_t evaluations = 0;
  int trajectory_length = 0;
  int subsampled_points = 0;
  TerminationReason termination = TerminationReason::kMaxIterations;
};

struct StrategyRunRecord {
  Strategy strategy;
  std::optional<int> chosen_index;        // empty for the random strategy
  std::optional<double> selection_value;  // objective value at the choice
  double initial_energy = 0.0;
  double final_energy = 0.0;
  int iterations = 0;
  std::int64_t evaluations = 0;
  TerminationReason termination = TerminationReason::kMaxIterations;
  double optimality_gap = 0.0;  // final energy minus exact ground energy
};

struct TargetRecord {
  int target_index = 0;
  Graph graph;
  double exact_ground_energy = 0.0;
  std::vector<StrategyRunRecord> runs;  // one per configured strategy
};

struct TrialRecord {
  int trial_index = 0;
  Graph seed_graph;
  SeedRunSummary seed_run;
  // L2 parameter change between consecutive seed iterates (full trajectory,
  // no subsampling); empty when the seed run converged at its initial point.
  std::vector<double> seed_param_change;
  std::vector<TargetRecord> targets;
};

struct StrategyAggregate {
  Strategy strategy;
  std::int64_t count = 0;
  double mean_iterations = 0.0;
  double std_iterations = 0.0;
  double mean_final_energy = 0.0;
  double std_final_energy = 0.0;
  double mean_optimality_gap = 0.0;
  double std_optimality_gap = 0.0;
};

struct AgreementStats {
  double tolerance = 1e-3;
  std::int64_t pairs = 0;
  std::int64_t agreeing = 0;
  double fraction = 0.0;
  double mean_abs_difference = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;
  // Two weightings of the same records: per_run pools every (target, trial)
  // run; per_trial averages the per-trial means, so trials weigh equally
  // even if run counts were to differ.
  std::vector<StrategyAggregate> aggregates_per_run;
  std::vector<StrategyAggregate> aggregates_per_trial;
  double max_weighting_discrepancy = 0.0;
  // ALL_POINTS vs FIRST_HALF final energies per (target, trial) pair; only
  // present when both strategies are configured.
  std::optional<AgreementStats> agreement;
};

// Tolerance for counting two final energies as "the same solution".
inline constexpr double kAgreementTolerance = 1e-3;

/// The k graphs a given trial draws from its own rng substream; the seed
/// graph is the last one.
std::vector<Graph> trial_graphs(const ExperimentConfig& cfg, int trial_index);

/// One full trial. Deterministic given (cfg, trial_index).
TrialRecord run_trial(const ExperimentConfig& cfg, int trial_index);

/// Runs all trials (optionally on `threads` workers; 0 = hardware
/// concurrency), aggregates, and writes report.json, strategy_summary.csv
/// and param_change.csv to cfg.output_dir.
ExperimentReport run_experiment(const ExperimentConfig& cfg, int threads = 1);

// Aggregation helpers, reused when recomputing from stored records.
std::vector<StrategyAggregate> aggregate_per_run(
    const ExperimentConfig& cfg, const std::vector<TrialRecord>& trials);
std::vector<StrategyAggregate> aggregate_per_trial(
    const ExperimentConfig& cfg, const std::vector<TrialRecord>& trials);
std::optional<AgreementStats> agreement_stats(
    const ExperimentConfig& cfg, const std::vector<TrialRecord>& trials);
ExperimentReport assemble_report(ExperimentConfig cfg,
                                 std::vector<TrialRecord> trials);

/// Writes strategy_summary.csv (per-run aggregates) and param_change.csv
/// (seed-trajectory change series, one block of rows per trial) into `dir`.
void emit_plot_data(const ExperimentReport& report, const std::string& dir);

/// report.json plus both plot CSVs. Byte-identical output for identical
/// reports: fixed key order, doubles at 17 significant digits.
void write_report_files(const ExperimentReport& report, const std::string& dir);

std::string report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const std::string& text);
ExperimentReport read_report_file(const std::string& path);

}  // namespace vqewarm

#endif  // VQEWARM_HARNESS_HPP_
