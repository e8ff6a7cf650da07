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
#ifndef VQEWARM_ISING_HPP_
#define VQEWARM_ISING_HPP_

#include <vector>

#include "vqewarm/graph.hpp"

namespace vqewarm {

struct ZZTerm {
  int i = 0;
  int j = 0;
  double weight = 1.0;
};

/// Diagonal Ising Hamiltonian sum_{i<j} w_ij Z_i Z_j. Couplings are kept in
/// the same canonical order as graph edges. Qubit i corresponds to bit i of
/// a basis index, least significant bit first; this convention is shared
/// with the statevector simulator.
struct IsingHamiltonian {
  int n = 0;
  std::vector<ZZTerm> terms;
};

/// Precomputed diagonal of a Hamiltonian: values[b] is the energy of basis
/// state b.
struct EnergyTable {
  int n = 0;
  std::vector<double> values;
};

/// One ZZ coupling per edge, weights preserved.
IsingHamiltonian build_hamiltonian(const Graph& g);

double total_coupling_weight(const IsingHamiltonian& h);

/// Diagonal matrix element <s|H|s> = sum w_ij z_i z_j with z = 1 - 2s.
/// For the Hamiltonian of a graph this satisfies energy = W - 2 * cut.
double energy_of_bitstring(const IsingHamiltonian& h, const Bitstring& s);

/// Full diagonal, O(2^n * |terms|). Guarded for n <= kMaxDenseQubits.
EnergyTable energy_table(const IsingHamiltonian& h);

struct GroundState {
  double energy = 0.0;
  Bitstring state;
};

/// Minimum diagonal entry and its lowest-index argmin.
GroundState exact_ground_energy(const IsingHamiltonian& h);

}  // namespace vqewarm

#endif  // VQEWARM_ISING_HPP_
