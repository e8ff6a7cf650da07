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
#include "vqewarm/transfer.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "vqewarm/io_format.hpp"

namespace vqewarm {

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kAllPoints:
      return "all_points";
    case StrategyKind::kFirstHalf:
      return "first_half";
    case StrategyKind::kRandom:
      return "random";
  }
  return "unknown";
}

const char* to_string(SelectionObjective objective) {
  switch (objective) {
    case SelectionObjective::kAbsEnergy:
      return "abs_energy";
    case SelectionObjective::kEnergy:
      return "energy";
  }
  return "unknown";
}

StrategyKind strategy_kind_from_string(const std::string& name) {
  if (name == "all_points") return StrategyKind::kAllPoints;
  if (name == "first_half") return StrategyKind::kFirstHalf;
  if (name == "random") return StrategyKind::kRandom;
  throw std::invalid_argument("unknown strategy kind '" + name + "'");
}

SelectionObjective objective_from_string(const std::string& name) {
  if (name == "abs_energy") return SelectionObjective::kAbsEnergy;
  if (name == "energy") return SelectionObjective::kEnergy;
  throw std::invalid_argument("unknown selection objective '" + name + "'");
}

std::string strategy_label(const Strategy& s) {
  std::string label = to_string(s.kind);
  if (s.objective != SelectionObjective::kAbsEnergy) {
    label += ":";
    label += to_string(s.objective);
  }
  return label;
}

Strategy strategy_from_label(const std::string& label) {
  Strategy s;
  const std::size_t colon = label.find(':');
  if (colon == std::string::npos) {
    s.kind = strategy_kind_from_string(label);
  } else {
    s.kind = strategy_kind_from_string(label.substr(0, colon));
    s.objective = objective_from_string(label.substr(colon + 1));
  }
  return s;
}

std::vector<ParameterVector> subsample(const Trajectory& t, int stride) {
  std::vector<ParameterVector> points;
  for (const TrajectoryEntry& e : subsample_trajectory(t, stride).entries) {
    points.push_back(e.params);
  }
  return points;
}

Trajectory subsample_trajectory(const Trajectory& t, int stride) {
  if (stride < 1) {
    throw std::invalid_argument("subsample: stride must be >= 1");
  }
  Trajectory kept;
  for (std::size_t i = 0; i < t.entries.size();
       i += static_cast<std::size_t>(stride)) {
    kept.entries.push_back(t.entries[i]);
  }
  return kept;
}

CrossEvaluation cross_evaluate(const std::vector<ParameterVector>& points,
                               const std::vector<IsingHamiltonian>& targets,
                               const AnsatzSpec& spec) {
  for (const IsingHamiltonian& h : targets) {
    if (h.n != spec.n) {
      throw std::invalid_argument(
          "cross_evaluate: target acts on " + std::to_string(h.n) +
          " qubits but the ansatz has " + std::to_string(spec.n));
    }
  }
  std::vector<EnergyTable> tables;
  tables.reserve(targets.size());
  for (const IsingHamiltonian& h : targets) tables.push_back(energy_table(h));

  CrossEvaluation ce;
  ce.points = points;
  ce.energies.assign(targets.size(), std::vector<double>(points.size(), 0.0));
  // One state preparation per point, reused across all targets.
  for (std::size_t h = 0; h < points.size(); ++h) {
    const Statevector psi = prepare_state(spec, points[h]);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      ce.energies[t][h] = expectation(psi, tables[t]);
    }
  }
  return ce;
}

SelectionResult select_initial(const CrossEvaluation& ce, int target_index,
                               const Strategy& strategy,
                               const AnsatzSpec& spec, const Bounds& bounds,
                               Rng& rng) {
  if (strategy.kind == StrategyKind::kRandom) {
    SelectionResult result;
    result.chosen_point = random_initial(spec, bounds, rng);
    return result;
  }

  if (target_index < 0 ||
      target_index >= static_cast<int>(ce.energies.size())) {
    throw std::invalid_argument("select_initial: target index " +
                                std::to_string(target_index) +
                                " out of range");
  }
  const std::vector<double>& row = ce.energies[target_index];
  const std::size_t count = ce.points.size();
  if (count == 0) {
    throw std::invalid_argument(
        "select_initial: no points to select from");
  }
  if (row.size() != count) {
    throw std::invalid_argument(
        "select_initial: energy row does not match point count");
  }

  const std::size_t limit =
      strategy.kind == StrategyKind::kFirstHalf ? (count + 1) / 2 : count;
  const auto score = [&](double e) {
    return strategy.objective == SelectionObjective::kAbsEnergy ? std::abs(e)
                                                                : e;
  };
  std::size_t best = 0;
  double best_score = score(row[0]);
  for (std::size_t h = 1; h < limit; ++h) {
    const double s = score(row[h]);
    if (s < best_score) {
      best = h;
      best_score = s;
    }
  }

  SelectionResult result;
  result.chosen_index = static_cast<int>(best);
  result.chosen_point = ce.points[best];
  result.objective_value = best_score;
  return result;
}

void write_cross_evaluation_csv(const CrossEvaluation& ce, std::ostream& out) {
  out << "point_index,target_index,energy\n";
  for (std::size_t h = 0; h < ce.points.size(); ++h) {
    for (std::size_t t = 0; t < ce.energies.size(); ++t) {
      out << h << ',' << t << ',' << format_double(ce.energies[t][h]) << '\n';
    }
  }
}

CrossEvaluation read_cross_evaluation_csv(std::istream& matrix_in,
                                          std::istream& points_in) {
  CrossEvaluation ce;
  const Trajectory points = read_trajectory_csv(points_in);
  for (const TrajectoryEntry& e : points.entries) {
    ce.points.push_back(e.params);
  }

  std::string line;
  if (!std::getline(matrix_in, line) ||
      trim(line) != "point_index,target_index,energy") {
    throw std::runtime_error("cross-evaluation csv: bad header");
  }
  struct Entry {
    std::size_t point;
    std::size_t target;
    double energy;
  };
  std::vector<Entry> entries;
  std::size_t max_target = 0;
  std::size_t line_number = 1;
  while (std::getline(matrix_in, line)) {
    ++line_number;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(body);
    if (fields.size() != 3) {
      throw std::runtime_error("cross-evaluation csv: line " +
                               std::to_string(line_number) +
                               " does not have 3 fields");
    }
    Entry e{};
    e.point = static_cast<std::size_t>(parse_uint(fields[0], "point_index"));
    e.target = static_cast<std::size_t>(parse_uint(fields[1], "target_index"));
    e.energy = parse_double(fields[2], "energy");
    if (e.point >= ce.points.size()) {
      throw std::runtime_error(
          "cross-evaluation csv: point index out of range on line " +
          std::to_string(line_number));
    }
    max_target = std::max(max_target, e.target);
    entries.push_back(e);
  }
  if (entries.empty()) {
    throw std::runtime_error("cross-evaluation csv: no data rows");
  }

  const std::size_t targets = max_target + 1;
  ce.energies.assign(targets, std::vector<double>(ce.points.size(), 0.0));
  std::vector<std::vector<bool>> seen(
      targets, std::vector<bool>(ce.points.size(), false));
  for (const Entry& e : entries) {
    if (seen[e.target][e.point]) {
      throw std::runtime_error("cross-evaluation csv: duplicate entry");
    }
    seen[e.target][e.point] = true;
    ce.energies[e.target][e.point] = e.energy;
  }
  for (const auto& row : seen) {
    for (bool s : row) {
      if (!s) {
        throw std::runtime_error("cross-evaluation csv: incomplete matrix");
      }
    }
  }
  return ce;
}

}  // namespace vqewarm
