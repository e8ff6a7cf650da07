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
#ifndef VQEWARM_VQE_HPP_
#define VQEWARM_VQE_HPP_

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

#include "vqewarm/simulator.hpp"

namespace vqewarm {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class OptimizerMethod {
  // BFGS with parameter-shift gradients and a backtracking line search,
  // projected onto the box bounds. Accepted iterates are monotone
  // non-increasing in energy.
  kGradientQuasiNewton,
  // Simultaneous-perturbation stochastic approximation with blocking:
  // candidate steps that do not lower the energy are rejected, so the
  // recorded trajectory stays a descent sequence.
  kSimultaneousPerturbation,
};

/// One interval applied to every coordinate.
struct Bounds {
  double lo = -kTwoPi;
  double hi = kTwoPi;
};

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::kGradientQuasiNewton;
  int max_iterations = 1000;
  double energy_tolerance = 1e-6;
  double step_tolerance = 1e-8;
  Bounds bounds;
  // Consumed only by the stochastic method; the quasi-Newton path is
  // deterministic without it.
  std::uint64_t spsa_seed = 0;
};

enum class TerminationReason {
  kEnergyTolerance,
  kStepTolerance,
  kMaxIterations,
};

const char* to_string(TerminationReason reason);
TerminationReason termination_from_string(const std::string& name);

struct TrajectoryEntry {
  int iteration = 0;
  ParameterVector params;
  double energy = 0.0;
};

/// Ordered accepted iterates; entry 0 is the initial point with its energy.
/// Line-search and perturbation probes are not recorded.
struct Trajectory {
  std::vector<TrajectoryEntry> entries;
};

struct VqeResult {
  Trajectory trajectory;
  ParameterVector final_params;
  double final_energy = 0.0;
  int iterations = 0;              // accepted steps, = trajectory length - 1
  std::int64_t evaluations = 0;    // energy_at calls, gradient shifts included
  TerminationReason termination = TerminationReason::kMaxIterations;
};

/// Minimizes energy_at over the box from `initial`, recording every accepted
/// iterate. Deterministic given its inputs (plus cfg.spsa_seed for the
/// stochastic method). Throws std::invalid_argument for dimension or bound
/// violations and std::runtime_error if a non-finite energy appears.
VqeResult run_vqe(const IsingHamiltonian& h, const AnsatzSpec& spec,
                  const ParameterVector& initial,
                  const OptimizerConfig& cfg = {});

/// Each coordinate uniform over the bound interval, drawn in coordinate
/// order.
ParameterVector random_initial(const AnsatzSpec& spec, const Bounds& bounds,
                               Rng& rng);

/// Entry t is the L2 norm of (iterate t+1 - iterate t); length is trajectory
/// length - 1. Requires at least two iterates.
std::vector<double> parameter_change_series(const Trajectory& t);

// Trajectory CSV: header "iter,energy,theta_0,...,theta_{m-1}", one row per
// accepted iterate, doubles at 17 significant digits.
void write_trajectory_csv(const Trajectory& t, std::ostream& out);
Trajectory read_trajectory_csv(std::istream& in);
void write_trajectory_csv_file(const Trajectory& t, const std::string& path);
Trajectory read_trajectory_csv_file(const std::string& path);

}  // namespace vqewarm

#endif  // VQEWARM_VQE_HPP_
