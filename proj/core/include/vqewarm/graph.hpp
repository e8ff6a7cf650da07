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
#ifndef VQEWARM_GRAPH_HPP_
#define VQEWARM_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vqewarm/rng.hpp"

namespace vqewarm {

// Dense enumeration guard shared by the brute-force oracle, energy tables
// and the statevector simulator.
inline constexpr int kMaxDenseQubits = 24;

struct Edge {
  int i = 0;
  int j = 0;
  double weight = 1.0;
};

/// Undirected weighted graph; a MaxCut instance. Edges are kept canonical:
/// i < j, sorted lexicographically, no duplicates, all weights >= 0.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
};

// One value in {0,1} per vertex: bit i = 0 puts vertex i in the first part,
// bit i = 1 in the second.
using Bitstring = std::vector<std::uint8_t>;

/// Validates and canonicalizes an edge list: reorders endpoints so i < j,
/// sorts, and rejects self-loops, duplicate pairs, out-of-range endpoints
/// and negative weights.
Graph make_graph(int n, std::vector<Edge> edges);

/// Erdős–Rényi G(n, p): each unordered pair {i, j} is included independently
/// with probability edge_probability and weight 1. Pairs are visited i-major
/// then j with exactly one rng draw per pair, so the result is a pure
/// function of the rng seed.
Graph random_graph(int n, double edge_probability, Rng& rng);

double total_weight(const Graph& g);

/// Total weight of edges whose endpoints land in different parts.
double cut_value(const Graph& g, const Bitstring& s);

struct MaxCutResult {
  double value = 0.0;
  Bitstring partition;
};

/// Exhaustive maximum of cut_value over all 2^n bitstrings. Ties are broken
/// toward the lowest bitstring read as an integer (bit 0 = least
/// significant). Guarded for n <= kMaxDenseQubits.
MaxCutResult brute_force_maxcut(const Graph& g);

Bitstring bitstring_from_index(std::uint64_t index, int n);
std::uint64_t index_from_bitstring(const Bitstring& s);

// Plain-text graph format: first line "n m", then m lines "i j w". The
// writer emits canonical order; the reader accepts any order and
// canonicalizes.
void write_graph(const Graph& g, std::ostream& out);
Graph read_graph(std::istream& in);
void write_graph_file(const Graph& g, const std::string& path);
Graph read_graph_file(const std::string& path);

}  // namespace vqewarm

#endif  // VQEWARM_GRAPH_HPP_
