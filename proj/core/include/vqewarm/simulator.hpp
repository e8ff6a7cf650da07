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
#ifndef VQEWARM_SIMULATOR_HPP_
#define VQEWARM_SIMULATOR_HPP_

#include <complex>
#include <vector>

#include "vqewarm/ising.hpp"

namespace vqewarm {

/// Hardware-efficient two-local ansatz: a Y-rotation on every qubit, then a
/// linear chain of CNOTs (control q, target q+1), repeated `reps` times,
/// followed by one final rotation layer. Parameters are ordered layer-major,
/// qubit index within each layer, for a total of n * (reps + 1).
struct AnsatzSpec {
  int n = 1;
  int reps = 0;
};

using ParameterVector = std::vector<double>;

// Dense amplitudes over 2^n basis states; bit i of a basis index is qubit i
// (least significant first), matching the energy-table convention.
using Statevector = std::vector<std::complex<double>>;

int parameter_count(const AnsatzSpec& spec);

/// Applies the ansatz to |0...0>. Ry(theta) acts as the real rotation
/// [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]]; the
/// entangler flips the target bit wherever the control bit is 1.
Statevector prepare_state(const AnsatzSpec& spec, const ParameterVector& p);

double state_norm(const Statevector& psi);

/// <psi|H|psi> for a diagonal H: sum_b |psi_b|^2 * E_b.
double expectation(const Statevector& psi, const EnergyTable& table);

/// expectation(prepare_state(spec, p), table); the scalar every other module
/// is built on.
double energy_at(const AnsatzSpec& spec, const EnergyTable& table,
                 const ParameterVector& p);

/// Parameter-shift gradient: component j is
/// (energy_at(p + (pi/2) e_j) - energy_at(p - (pi/2) e_j)) / 2, which is
/// exact for rotation-generated gates. Costs 2 * parameter_count energy
/// evaluations.
std::vector<double> gradient(const AnsatzSpec& spec, const EnergyTable& table,
                             const ParameterVector& p);

}  // namespace vqewarm

#endif  // VQEWARM_SIMULATOR_HPP_
