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
#ifndef VQEWARM_TESTS_TEST_ORACLES_HPP_
#define VQEWARM_TESTS_TEST_ORACLES_HPP_

// Test-only reference implementations, kept deliberately independent of the
// library's evaluation paths: the circuit oracle multiplies explicit
// Kronecker-product matrices, and the gradient oracle uses central finite
// differences.

#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "vqewarm/simulator.hpp"

namespace vqewarm::testing {

struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // row-major

  double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

inline DenseMatrix identity(std::size_t n) {
  DenseMatrix m{n, n, std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out{a.rows * b.rows, a.cols * b.cols,
                  std::vector<double>(a.rows * b.rows * a.cols * b.cols, 0.0)};
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      for (std::size_t k = 0; k < b.rows; ++k) {
        for (std::size_t l = 0; l < b.cols; ++l) {
          out.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
        }
      }
    }
  }
  return out;
}

inline std::vector<double> matvec(const DenseMatrix& m,
                                  const std::vector<double>& v) {
  std::vector<double> out(m.rows, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      out[i] += m.at(i, j) * v[j];
    }
  }
  return out;
}

inline DenseMatrix ry_matrix(double theta) {
  DenseMatrix m{2, 2, std::vector<double>(4, 0.0)};
  m.at(0, 0) = std::cos(0.5 * theta);
  m.at(0, 1) = -std::sin(0.5 * theta);
  m.at(1, 0) = std::sin(0.5 * theta);
  m.at(1, 1) = std::cos(0.5 * theta);
  return m;
}

// CNOT on a two-qubit block where the control is the less significant bit
// and the target the more significant one (the layout of the chain's
// (q, q+1) pairs under the bit-i-equals-qubit-i convention).
inline DenseMatrix cnot_block() {
  DenseMatrix m{4, 4, std::vector<double>(16, 0.0)};
  m.at(0, 0) = 1.0;
  m.at(3, 1) = 1.0;
  m.at(2, 2) = 1.0;
  m.at(1, 3) = 1.0;
  return m;
}

// Gate on qubits [q, q + width) expanded to the full register:
// I_{2^(n-width-q)} (x) G (x) I_{2^q}.
inline DenseMatrix embed(const DenseMatrix& gate, int qubit, int width,
                         int n) {
  const std::size_t low = std::size_t{1} << qubit;
  const std::size_t high = std::size_t{1} << (n - width - qubit);
  return kron(identity(high), kron(gate, identity(low)));
}

// Full matrix-product evaluation of the ansatz; real amplitudes.
inline std::vector<double> oracle_state(const AnsatzSpec& spec,
                                        const ParameterVector& p) {
  std::vector<double> v(std::size_t{1} << spec.n, 0.0);
  v[0] = 1.0;
  std::size_t next = 0;
  for (int layer = 0; layer <= spec.reps; ++layer) {
    for (int q = 0; q < spec.n; ++q) {
      v = matvec(embed(ry_matrix(p[next++]), q, 1, spec.n), v);
    }
    if (layer < spec.reps) {
      for (int q = 0; q + 1 < spec.n; ++q) {
        v = matvec(embed(cnot_block(), q, 2, spec.n), v);
      }
    }
  }
  return v;
}

inline std::vector<double> finite_difference_gradient(
    const AnsatzSpec& spec, const EnergyTable& table, const ParameterVector& p,
    double step = 1e-5) {
  std::vector<double> grad(p.size(), 0.0);
  ParameterVector shifted = p;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double original = shifted[j];
    shifted[j] = original + step;
    const double plus = energy_at(spec, table, shifted);
    shifted[j] = original - step;
    const double minus = energy_at(spec, table, shifted);
    shifted[j] = original;
    grad[j] = (plus - minus) / (2.0 * step);
  }
  return grad;
}

inline bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
  for (const Edge& e : g.edges) {
    adj[static_cast<std::size_t>(e.i)].push_back(e.j);
    adj[static_cast<std::size_t>(e.j)].push_back(e.i);
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int visited = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (const int v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++visited;
        frontier.push(v);
      }
    }
  }
  return visited == g.n;
}

// Common small instances.
inline Graph triangle() {
  return make_graph(3, {Edge{0, 1, 1.0}, Edge{0, 2, 1.0}, Edge{1, 2, 1.0}});
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back(Edge{i, j, 1.0});
  }
  return make_graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n, 1.0});
  return make_graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1, 1.0});
  return make_graph(n, std::move(edges));
}

inline Graph empty_graph(int n) { return make_graph(n, {}); }

}  // namespace vqewarm::testing

#endif  // VQEWARM_TESTS_TEST_ORACLES_HPP_
