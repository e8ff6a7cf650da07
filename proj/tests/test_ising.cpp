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

#include <gtest/gtest.h>

#include "test_oracles.hpp"

namespace vqewarm {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::empty_graph;
using testing::path_graph;
using testing::triangle;

TEST(BuildHamiltonian, OneTermPerEdge) {
  const IsingHamiltonian h = build_hamiltonian(triangle());
  EXPECT_EQ(h.n, 3);
  ASSERT_EQ(h.terms.size(), 3u);
  EXPECT_EQ(h.terms[0].i, 0);
  EXPECT_EQ(h.terms[0].j, 1);
  EXPECT_EQ(h.terms[1].i, 0);
  EXPECT_EQ(h.terms[1].j, 2);
  EXPECT_EQ(h.terms[2].i, 1);
  EXPECT_EQ(h.terms[2].j, 2);

  EXPECT_TRUE(build_hamiltonian(empty_graph(4)).terms.empty());

  const IsingHamiltonian path = build_hamiltonian(path_graph(3));
  ASSERT_EQ(path.terms.size(), 2u);
  EXPECT_EQ(path.terms[0].i, 0);
  EXPECT_EQ(path.terms[0].j, 1);
  EXPECT_EQ(path.terms[1].i, 1);
  EXPECT_EQ(path.terms[1].j, 2);
}

TEST(EnergyOfBitstring, TriangleExamples) {
  const IsingHamiltonian h = build_hamiltonian(triangle());
  EXPECT_EQ(energy_of_bitstring(h, {0, 0, 0}), 3.0);
  // (0,1) aligned +1; (0,2) and (1,2) anti-aligned -1 each; also 3 - 2*2.
  EXPECT_EQ(energy_of_bitstring(h, {0, 0, 1}), -1.0);
  EXPECT_EQ(energy_of_bitstring(build_hamiltonian(empty_graph(3)), {1, 0, 1}),
            0.0);
}

TEST(EnergyOfBitstring, RejectsLengthMismatch) {
  const IsingHamiltonian h = build_hamiltonian(triangle());
  EXPECT_THROW(energy_of_bitstring(h, {0, 1}), std::invalid_argument);
}

// H(s) = W - 2 C(s), checked exactly on unweighted instances.
TEST(EnergyOfBitstring, MatchesCutIdentity) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(6, 0.5, rng);
    const IsingHamiltonian h = build_hamiltonian(g);
    const double w = total_weight(g);
    for (int draw = 0; draw < 4; ++draw) {
      const Bitstring s = bitstring_from_index(rng() & 63u, g.n);
      EXPECT_EQ(energy_of_bitstring(h, s), w - 2.0 * cut_value(g, s));
    }
  }
}

TEST(EnergyTable, FrozenSmallTables) {
  const EnergyTable k3 = energy_table(build_hamiltonian(triangle()));
  const std::vector<double> expected{3, -1, -1, -1, -1, -1, -1, 3};
  EXPECT_EQ(k3.values, expected);

  const EnergyTable single =
      energy_table(build_hamiltonian(make_graph(2, {Edge{0, 1, 1.0}})));
  EXPECT_EQ(single.values, (std::vector<double>{1, -1, -1, 1}));

  const EnergyTable none = energy_table(build_hamiltonian(empty_graph(2)));
  EXPECT_EQ(none.values, (std::vector<double>{0, 0, 0, 0}));
}

TEST(EnergyTable, AgreesWithPerBitstringEvaluation) {
  Rng rng(13);
  const Graph g = random_graph(10, 0.5, rng);
  const IsingHamiltonian h = build_hamiltonian(g);
  const EnergyTable table = energy_table(h);
  ASSERT_EQ(table.values.size(), 1024u);
  for (std::uint64_t b = 0; b < table.values.size(); ++b) {
    EXPECT_EQ(table.values[b],
              energy_of_bitstring(h, bitstring_from_index(b, g.n)));
  }
}

TEST(EnergyTable, SpinFlipSymmetryAndBounds) {
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(7, 0.5, rng);
    const IsingHamiltonian h = build_hamiltonian(g);
    const EnergyTable table = energy_table(h);
    const double w = total_coupling_weight(h);
    const std::uint64_t mask = table.values.size() - 1;
    for (std::uint64_t b = 0; b < table.values.size(); ++b) {
      EXPECT_EQ(table.values[b], table.values[~b & mask]);
      EXPECT_GE(table.values[b], -w);
      EXPECT_LE(table.values[b], w);
    }
  }
}

TEST(EnergyTable, RejectsOversizedHamiltonians) {
  EXPECT_THROW(energy_table(IsingHamiltonian{25, {}}), std::length_error);
}

TEST(ExactGroundEnergy, SmallInstances) {
  EXPECT_EQ(exact_ground_energy(build_hamiltonian(triangle())).energy, -1.0);
  EXPECT_EQ(exact_ground_energy(build_hamiltonian(complete_graph(4))).energy,
            -2.0);
  EXPECT_EQ(exact_ground_energy(build_hamiltonian(cycle_graph(5))).energy,
            -3.0);
}

TEST(ExactGroundEnergy, ReturnsLowestArgmin) {
  // Triangle diagonal is [3,-1,...,-1,3]; the first -1 sits at index 1.
  const GroundState ground = exact_ground_energy(build_hamiltonian(triangle()));
  EXPECT_EQ(index_from_bitstring(ground.state), 1u);
}

// (W - ground) / 2 must equal the brute-force maximum cut exactly.
TEST(ExactGroundEnergy, MatchesBruteForceMaxCutOn200RandomGraphs) {
  Rng rng(23);
  const double probabilities[] = {0.3, 0.5, 0.8};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);  // 3..8
    const Graph g = random_graph(n, probabilities[trial % 3], rng);
    const IsingHamiltonian h = build_hamiltonian(g);
    const double w = total_coupling_weight(h);
    const GroundState ground = exact_ground_energy(h);
    EXPECT_EQ((w - ground.energy) / 2.0, brute_force_maxcut(g).value);
    EXPECT_EQ(energy_of_bitstring(h, ground.state), ground.energy);
  }
}

}  // namespace
}  // namespace vqewarm
