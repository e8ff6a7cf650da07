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
#ifndef VQEWARM_TRANSFER_HPP_
#define VQEWARM_TRANSFER_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vqewarm/vqe.hpp"

namespace vqewarm {

// Cross-instance warm starting: the optimizer trajectory recorded on a seed
// problem is subsampled, every kept point is evaluated on every target
// Hamiltonian, and each target picks its starting point from that table.

enum class StrategyKind {
  kAllPoints,   // argmin of the objective over all kept points
  kFirstHalf,   // same argmin restricted to the first ceil(L/2) points
  kRandom,      // ignore the cross-evaluations, draw a fresh random point
};

enum class SelectionObjective {
  kAbsEnergy,  // minimize |E| (default)
  kEnergy,     // minimize E
};

struct Strategy {
  StrategyKind kind = StrategyKind::kAllPoints;
  SelectionObjective objective = SelectionObjective::kAbsEnergy;

  bool operator==(const Strategy&) const = default;
};

const char* to_string(StrategyKind kind);
const char* to_string(SelectionObjective objective);
StrategyKind strategy_kind_from_string(const std::string& name);
SelectionObjective objective_from_string(const std::string& name);

// Compact label, e.g. "first_half" or "all_points:energy" when the
// non-default objective is selected.
std::string strategy_label(const Strategy& s);
Strategy strategy_from_label(const std::string& label);

/// Subsampled seed-trajectory points together with their energies on every
/// target: energies[t][h] is the energy of point h on target t.
struct CrossEvaluation {
  std::vector<ParameterVector> points;
  std::vector<std::vector<double>> energies;
};

/// Points at trajectory indices 0, stride, 2*stride, ..., order preserved.
std::vector<ParameterVector> subsample(const Trajectory& t, int stride);

/// Same selection but keeping whole trajectory entries (original iteration
/// labels and seed energies); used when the kept points are persisted.
Trajectory subsample_trajectory(const Trajectory& t, int stride);

/// Dense point-by-target energy matrix. All targets must share the ansatz
/// qubit count.
CrossEvaluation cross_evaluate(const std::vector<ParameterVector>& points,
                               const std::vector<IsingHamiltonian>& targets,
                               const AnsatzSpec& spec);

struct SelectionResult {
  // Index into the kept-point list; empty for the random strategy.
  std::optional<int> chosen_index;
  ParameterVector chosen_point;
  std::optional<double> objective_value;
};

/// Picks the initial point for one target. Deterministic for the non-random
/// strategies (the rng is not touched); ties break toward the lowest index.
SelectionResult select_initial(const CrossEvaluation& ce, int target_index,
                               const Strategy& strategy,
                               const AnsatzSpec& spec, const Bounds& bounds,
                               Rng& rng);

// Cross-evaluation CSV: header "point_index,target_index,energy", one row
// per matrix entry. The kept points travel in a sidecar file in the
// trajectory CSV format.
void write_cross_evaluation_csv(const CrossEvaluation& ce, std::ostream& out);
CrossEvaluation read_cross_evaluation_csv(std::istream& matrix_in,
                                          std::istream& points_in);

}  // namespace vqewarm

#endif  // VQEWARM_TRANSFER_HPP_
