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
#include "vqewarm/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "vqewarm/io_format.hpp"

namespace vqewarm {

Graph make_graph(int n, std::vector<Edge> edges) {
  if (n < 1) {
    throw std::invalid_argument("make_graph: vertex count must be >= 1");
  }
  for (Edge& e : edges) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i == e.j) {
      throw std::invalid_argument("make_graph: self-loop on vertex " +
                                  std::to_string(e.i));
    }
    if (e.i < 0 || e.j >= n) {
      throw std::invalid_argument("make_graph: edge endpoint out of range");
    }
    if (!(e.weight >= 0.0)) {
      throw std::invalid_argument("make_graph: edge weight must be >= 0");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t e = 1; e < edges.size(); ++e) {
    if (edges[e - 1].i == edges[e].i && edges[e - 1].j == edges[e].j) {
      throw std::invalid_argument("make_graph: duplicate edge (" +
                                  std::to_string(edges[e].i) + ", " +
                                  std::to_string(edges[e].j) + ")");
    }
  }
  return Graph{n, std::move(edges)};
}

Graph random_graph(int n, double edge_probability, Rng& rng) {
  if (n < 1) {
    throw std::invalid_argument("random_graph: vertex count must be >= 1");
  }
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw std::invalid_argument(
        "random_graph: edge probability must lie in [0, 1]");
  }
  Graph g;
  g.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (bernoulli(rng, edge_probability)) {
        g.edges.push_back(Edge{i, j, 1.0});
      }
    }
  }
  return g;
}

double total_weight(const Graph& g) {
  double w = 0.0;
  for (const Edge& e : g.edges) w += e.weight;
  return w;
}

double cut_value(const Graph& g, const Bitstring& s) {
  if (static_cast<int>(s.size()) != g.n) {
    throw std::invalid_argument("cut_value: bitstring length " +
                                std::to_string(s.size()) +
                                " does not match vertex count " +
                                std::to_string(g.n));
  }
  double cut = 0.0;
  for (const Edge& e : g.edges) {
    if (s[e.i] != s[e.j]) cut += e.weight;
  }
  return cut;
}

MaxCutResult brute_force_maxcut(const Graph& g) {
  if (g.n > kMaxDenseQubits) {
    throw std::length_error("brute_force_maxcut: " + std::to_string(g.n) +
                            " vertices exceeds the enumeration guard of " +
                            std::to_string(kMaxDenseQubits));
  }
  std::vector<std::uint64_t> masks;
  std::vector<double> weights;
  masks.reserve(g.edges.size());
  weights.reserve(g.edges.size());
  for (const Edge& e : g.edges) {
    masks.push_back((std::uint64_t{1} << e.i) | (std::uint64_t{1} << e.j));
    weights.push_back(e.weight);
  }
  const std::uint64_t count = std::uint64_t{1} << g.n;
  double best = 0.0;  // b = 0 cuts nothing
  std::uint64_t best_b = 0;
  for (std::uint64_t b = 1; b < count; ++b) {
    double cut = 0.0;
    for (std::size_t e = 0; e < masks.size(); ++e) {
      cut += (std::popcount(b & masks[e]) & 1) ? weights[e] : 0.0;
    }
    if (cut > best) {
      best = cut;
      best_b = b;
    }
  }
  return MaxCutResult{best, bitstring_from_index(best_b, g.n)};
}

Bitstring bitstring_from_index(std::uint64_t index, int n) {
  Bitstring s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    s[i] = static_cast<std::uint8_t>((index >> i) & 1);
  }
  return s;
}

std::uint64_t index_from_bitstring(const Bitstring& s) {
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) b |= std::uint64_t{1} << i;
  }
  return b;
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.n << ' ' << g.edges.size() << '\n';
  for (const Edge& e : g.edges) {
    out << e.i << ' ' << e.j << ' ' << format_double(e.weight) << '\n';
  }
}

Graph read_graph(std::istream& in) {
  int n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) {
    throw std::runtime_error("read_graph: malformed header, expected 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    Edge edge;
    if (!(in >> edge.i >> edge.j >> edge.weight)) {
      throw std::runtime_error("read_graph: truncated edge list, expected " +
                               std::to_string(m) + " edges");
    }
    edges.push_back(edge);
  }
  return make_graph(n, std::move(edges));
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("write_graph_file: cannot open " + path);
  }
  write_graph(g, out);
  if (!out) {
    throw std::runtime_error("write_graph_file: write failed for " + path);
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("read_graph_file: cannot open " + path);
  }
  return read_graph(in);
}

}  // namespace vqewarm
