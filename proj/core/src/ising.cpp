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
#include "vqewarm/ising.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace vqewarm {

IsingHamiltonian build_hamiltonian(const Graph& g) {
  IsingHamiltonian h;
  h.n = g.n;
  h.terms.reserve(g.edges.size());
  for (const Edge& e : g.edges) {
    h.terms.push_back(ZZTerm{e.i, e.j, e.weight});
  }
  return h;
}

double total_coupling_weight(const IsingHamiltonian& h) {
  double w = 0.0;
  for (const ZZTerm& t : h.terms) w += t.weight;
  return w;
}

double energy_of_bitstring(const IsingHamiltonian& h, const Bitstring& s) {
  if (static_cast<int>(s.size()) != h.n) {
    throw std::invalid_argument("energy_of_bitstring: bitstring length " +
                                std::to_string(s.size()) +
                                " does not match qubit count " +
                                std::to_string(h.n));
  }
  double energy = 0.0;
  for (const ZZTerm& t : h.terms) {
    const int zi = 1 - 2 * static_cast<int>(s[t.i]);
    const int zj = 1 - 2 * static_cast<int>(s[t.j]);
    energy += t.weight * zi * zj;
  }
  return energy;
}

EnergyTable energy_table(const IsingHamiltonian& h) {
  if (h.n > kMaxDenseQubits) {
    throw std::length_error("energy_table: " + std::to_string(h.n) +
                            " qubits exceeds the dense guard of " +
                            std::to_string(kMaxDenseQubits));
  }
  if (h.n < 1) {
    throw std::invalid_argument("energy_table: qubit count must be >= 1");
  }
  EnergyTable table;
  table.n = h.n;
  table.values.assign(std::size_t{1} << h.n, 0.0);
  for (const ZZTerm& t : h.terms) {
    const std::uint64_t mask =
        (std::uint64_t{1} << t.i) | (std::uint64_t{1} << t.j);
    for (std::uint64_t b = 0; b < table.values.size(); ++b) {
      table.values[b] += (std::popcount(b & mask) & 1) ? -t.weight : t.weight;
    }
  }
  return table;
}

GroundState exact_ground_energy(const IsingHamiltonian& h) {
  const EnergyTable table = energy_table(h);
  std::size_t argmin = 0;
  for (std::size_t b = 1; b < table.values.size(); ++b) {
    if (table.values[b] < table.values[argmin]) argmin = b;
  }
  return GroundState{table.values[argmin],
                     bitstring_from_index(argmin, table.n)};
}

}  // namespace vqewarm
