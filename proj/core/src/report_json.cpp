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

// report.json is written by hand rather than through a JSON library so the
// byte stream is a pure function of the report: fixed key order, fixed
// indentation, every double at 17 significant digits. Reading goes through
// nlohmann::json.

#include <cstdint>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "vqewarm/harness.hpp"
#include "vqewarm/io_format.hpp"

namespace vqewarm {

namespace {

constexpr const char* kSchema = "vqewarm-report-v1";
constexpr const char* kWeightingNote =
    "aggregates_per_run weights every (target, trial) run equally; "
    "aggregates_per_trial averages per-trial means so trials weigh equally; "
    "max_weighting_discrepancy is the largest difference between the two "
    "readings";
constexpr const char* kAgreementNote =
    "the tolerance operationalizes 'converged to the same solution'; it is a "
    "chosen constant, as are any thresholds derived from these statistics, "
    "not a measured quantity";

std::string escape_json(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (const char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Minimal streaming writer with fixed two-space indentation.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  void begin_object(const char* key = nullptr) { open('{', key); }
  void end_object() { close('}'); }
  void begin_array(const char* key = nullptr) { open('[', key); }
  void end_array() { close(']'); }

  void field(const char* key, const std::string& value) {
    item(key, "\"" + escape_json(value) + "\"");
  }
  void field(const char* key, const char* value) {
    field(key, std::string(value));
  }
  void field(const char* key, double value) { item(key, format_double(value)); }
  void field(const char* key, std::int64_t value) {
    item(key, std::to_string(value));
  }
  void field(const char* key, int value) {
    field(key, static_cast<std::int64_t>(value));
  }
  void field(const char* key, std::uint64_t value) {
    item(key, std::to_string(value));
  }
  void null_field(const char* key) { item(key, "null"); }

  void element(double value) { item(nullptr, format_double(value)); }
  // Raw element, used for compact inline rows such as edge triples.
  void raw_element(const std::string& text) { item(nullptr, text); }

 private:
  void open(char bracket, const char* key) {
    separator();
    if (key != nullptr) {
      out_ += '"';
      out_ += key;
      out_ += "\": ";
    }
    out_ += bracket;
    ++depth_;
    fresh_ = true;
  }

  void close(char bracket) {
    --depth_;
    if (!fresh_) {
      out_ += '\n';
      indent();
    }
    out_ += bracket;
    fresh_ = false;
  }

  void item(const char* key, const std::string& text) {
    separator();
    if (key != nullptr) {
      out_ += '"';
      out_ += key;
      out_ += "\": ";
    }
    out_ += text;
  }

  void separator() {
    if (depth_ == 0) return;
    if (!fresh_) out_ += ',';
    out_ += '\n';
    indent();
    fresh_ = false;
  }

  void indent() { out_.append(static_cast<std::size_t>(depth_) * 2, ' '); }

  std::string out_;
  int depth_ = 0;
  bool fresh_ = true;
};

std::string edge_triple(const Edge& e) {
  return "[" + std::to_string(e.i) + ", " + std::to_string(e.j) + ", " +
         format_double(e.weight) + "]";
}

void write_graph_json(JsonWriter& w, const char* key, const Graph& g) {
  w.begin_object(key);
  w.field("n", g.n);
  w.begin_array("edges");
  for (const Edge& e : g.edges) w.raw_element(edge_triple(e));
  w.end_array();
  w.end_object();
}

void write_config_json(JsonWriter& w, const ExperimentConfig& cfg) {
  w.begin_object("config");
  w.field("n", cfg.n);
  w.field("k", cfg.k);
  w.field("edge_probability", cfg.edge_probability);
  w.field("reps", cfg.reps);
  w.field("stride", cfg.stride);
  w.field("trials", cfg.trials);
  w.begin_array("strategies");
  for (const Strategy& s : cfg.strategies) {
    w.raw_element("\"" + escape_json(strategy_label(s)) + "\"");
  }
  w.end_array();
  w.begin_object("optimizer");
  w.field("method",
          cfg.optimizer.method == OptimizerMethod::kGradientQuasiNewton
              ? "gradient_quasi_newton"
              : "simultaneous_perturbation");
  w.field("max_iterations", cfg.optimizer.max_iterations);
  w.field("energy_tolerance", cfg.optimizer.energy_tolerance);
  w.field("step_tolerance", cfg.optimizer.step_tolerance);
  w.field("bound_low", cfg.optimizer.bounds.lo);
  w.field("bound_high", cfg.optimizer.bounds.hi);
  w.end_object();
  w.field("master_seed", cfg.master_seed);
  w.field("output_dir", cfg.output_dir);
  w.end_object();
}

void write_aggregates_json(JsonWriter& w, const char* key,
                           const std::vector<StrategyAggregate>& aggregates) {
  w.begin_array(key);
  for (const StrategyAggregate& agg : aggregates) {
    w.begin_object();
    w.field("strategy", strategy_label(agg.strategy));
    w.field("count", agg.count);
    w.field("mean_iterations", agg.mean_iterations);
    w.field("std_iterations", agg.std_iterations);
    w.field("mean_final_energy", agg.mean_final_energy);
    w.field("std_final_energy", agg.std_final_energy);
    w.field("mean_optimality_gap", agg.mean_optimality_gap);
    w.field("std_optimality_gap", agg.std_optimality_gap);
    w.end_object();
  }
  w.end_array();
}

}  // namespace

std::string report_to_json(const ExperimentReport& report) {
  JsonWriter w;
  w.begin_object();
  w.field("schema", kSchema);
  write_config_json(w, report.config);

  w.begin_array("trials");
  for (const TrialRecord& trial : report.trials) {
    w.begin_object();
    w.field("trial_index", trial.trial_index);
    write_graph_json(w, "seed_graph", trial.seed_graph);
    w.begin_object("seed_run");
    w.field("initial_energy", trial.seed_run.initial_energy);
    w.field("final_energy", trial.seed_run.final_energy);
    w.field("iterations", trial.seed_run.iterations);
    w.field("evaluations", trial.seed_run.evaluations);
    w.field("trajectory_length", trial.seed_run.trajectory_length);
    w.field("subsampled_points", trial.seed_run.subsampled_points);
    w.field("termination", to_string(trial.seed_run.termination));
    w.end_object();
    w.begin_array("seed_param_change");
    for (double delta : trial.seed_param_change) w.element(delta);
    w.end_array();
    w.begin_array("targets");
    for (const TargetRecord& target : trial.targets) {
      w.begin_object();
      w.field("target_index", target.target_index);
      write_graph_json(w, "graph", target.graph);
      w.field("exact_ground_energy", target.exact_ground_energy);
      w.begin_array("runs");
      for (const StrategyRunRecord& run : target.runs) {
        w.begin_object();
        w.field("strategy", strategy_label(run.strategy));
        if (run.chosen_index) {
          w.field("chosen_index", *run.chosen_index);
        } else {
          w.null_field("chosen_index");
        }
        if (run.selection_value) {
          w.field("selection_value", *run.selection_value);
        } else {
          w.null_field("selection_value");
        }
        w.field("initial_energy", run.initial_energy);
        w.field("final_energy", run.final_energy);
        w.field("iterations", run.iterations);
        w.field("evaluations", run.evaluations);
        w.field("termination", to_string(run.termination));
        w.field("optimality_gap", run.optimality_gap);
        w.end_object();
      }
      w.end_array();
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array();

  write_aggregates_json(w, "aggregates_per_run", report.aggregates_per_run);
  write_aggregates_json(w, "aggregates_per_trial",
                        report.aggregates_per_trial);
  w.field("max_weighting_discrepancy", report.max_weighting_discrepancy);
  w.field("weighting_note", kWeightingNote);
  if (report.agreement) {
    w.begin_object("agreement");
    w.field("tolerance", report.agreement->tolerance);
    w.field("pairs", report.agreement->pairs);
    w.field("agreeing", report.agreement->agreeing);
    w.field("fraction", report.agreement->fraction);
    w.field("mean_abs_difference", report.agreement->mean_abs_difference);
    w.field("note", kAgreementNote);
    w.end_object();
  } else {
    w.null_field("agreement");
  }
  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

namespace {

using nlohmann::json;

Graph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) {
    edges.push_back(Edge{e.at(0).get<int>(), e.at(1).get<int>(),
                         e.at(2).get<double>()});
  }
  return make_graph(j.at("n").get<int>(), std::move(edges));
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig cfg;
  cfg.n = j.at("n").get<int>();
  cfg.k = j.at("k").get<int>();
  cfg.edge_probability = j.at("edge_probability").get<double>();
  cfg.reps = j.at("reps").get<int>();
  cfg.stride = j.at("stride").get<int>();
  cfg.trials = j.at("trials").get<int>();
  cfg.strategies.clear();
  for (const json& s : j.at("strategies")) {
    cfg.strategies.push_back(strategy_from_label(s.get<std::string>()));
  }
  const json& opt = j.at("optimizer");
  const std::string method = opt.at("method").get<std::string>();
  if (method == "gradient_quasi_newton") {
    cfg.optimizer.method = OptimizerMethod::kGradientQuasiNewton;
  } else if (method == "simultaneous_perturbation") {
    cfg.optimizer.method = OptimizerMethod::kSimultaneousPerturbation;
  } else {
    throw std::runtime_error("report: unknown optimizer method '" + method +
                             "'");
  }
  cfg.optimizer.max_iterations = opt.at("max_iterations").get<int>();
  cfg.optimizer.energy_tolerance = opt.at("energy_tolerance").get<double>();
  cfg.optimizer.step_tolerance = opt.at("step_tolerance").get<double>();
  cfg.optimizer.bounds.lo = opt.at("bound_low").get<double>();
  cfg.optimizer.bounds.hi = opt.at("bound_high").get<double>();
  cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
  cfg.output_dir = j.at("output_dir").get<std::string>();
  return cfg;
}

StrategyRunRecord run_from_json(const json& j) {
  StrategyRunRecord run;
  run.strategy = strategy_from_label(j.at("strategy").get<std::string>());
  if (!j.at("chosen_index").is_null()) {
    run.chosen_index = j.at("chosen_index").get<int>();
  }
  if (!j.at("selection_value").is_null()) {
    run.selection_value = j.at("selection_value").get<double>();
  }
  run.initial_energy = j.at("initial_energy").get<double>();
  run.final_energy = j.at("final_energy").get<double>();
  run.iterations = j.at("iterations").get<int>();
  run.evaluations = j.at("evaluations").get<std::int64_t>();
  run.termination =
      termination_from_string(j.at("termination").get<std::string>());
  run.optimality_gap = j.at("optimality_gap").get<double>();
  return run;
}

TrialRecord trial_from_json(const json& j) {
  TrialRecord trial;
  trial.trial_index = j.at("trial_index").get<int>();
  trial.seed_graph = graph_from_json(j.at("seed_graph"));
  const json& seed = j.at("seed_run");
  trial.seed_run.initial_energy = seed.at("initial_energy").get<double>();
  trial.seed_run.final_energy = seed.at("final_energy").get<double>();
  trial.seed_run.iterations = seed.at("iterations").get<int>();
  trial.seed_run.evaluations = seed.at("evaluations").get<std::int64_t>();
  trial.seed_run.trajectory_length =
      seed.at("trajectory_length").get<int>();
  trial.seed_run.subsampled_points =
      seed.at("subsampled_points").get<int>();
  trial.seed_run.termination =
      termination_from_string(seed.at("termination").get<std::string>());
  for (const json& d : j.at("seed_param_change")) {
    trial.seed_param_change.push_back(d.get<double>());
  }
  for (const json& t : j.at("targets")) {
    TargetRecord target;
    target.target_index = t.at("target_index").get<int>();
    target.graph = graph_from_json(t.at("graph"));
    target.exact_ground_energy = t.at("exact_ground_energy").get<double>();
    for (const json& r : t.at("runs")) {
      target.runs.push_back(run_from_json(r));
    }
    trial.targets.push_back(std::move(target));
  }
  return trial;
}

}  // namespace

ExperimentReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("report: invalid JSON: ") + e.what());
  }
  if (j.at("schema").get<std::string>() != kSchema) {
    throw std::runtime_error("report: unsupported schema '" +
                             j.at("schema").get<std::string>() + "'");
  }
  // Trial records are authoritative; aggregates are recomputed rather than
  // trusted from the file.
  std::vector<TrialRecord> trials;
  for (const json& t : j.at("trials")) {
    trials.push_back(trial_from_json(t));
  }
  return assemble_report(config_from_json(j.at("config")), std::move(trials));
}

}  // namespace vqewarm
