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
#include "vqewarm/simulator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vqewarm {

namespace {

void check_spec(const AnsatzSpec& spec) {
  if (spec.n < 1) {
    throw std::invalid_argument("ansatz: qubit count must be >= 1");
  }
  if (spec.n > kMaxDenseQubits) {
    throw std::length_error("ansatz: " + std::to_string(spec.n) +
                            " qubits exceeds the dense guard of " +
                            std::to_string(kMaxDenseQubits));
  }
  if (spec.reps < 0) {
    throw std::invalid_argument("ansatz: repetition count must be >= 0");
  }
}

void check_params(const AnsatzSpec& spec, const ParameterVector& p) {
  if (static_cast<int>(p.size()) != parameter_count(spec)) {
    throw std::invalid_argument(
        "ansatz: expected " + std::to_string(parameter_count(spec)) +
        " parameters, got " + std::to_string(p.size()));
  }
  for (double v : p) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("ansatz: parameters must be finite");
    }
  }
}

void apply_ry(Statevector& psi, int qubit, double theta) {
  const std::size_t bit = std::size_t{1} << qubit;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  for (std::size_t base = 0; base < psi.size(); base += bit << 1) {
    for (std::size_t off = 0; off < bit; ++off) {
      std::complex<double>& a0 = psi[base + off];
      std::complex<double>& a1 = psi[base + off + bit];
      const std::complex<double> t0 = a0;
      const std::complex<double> t1 = a1;
      a0 = c * t0 - s * t1;
      a1 = s * t0 + c * t1;
    }
  }
}

void apply_cnot(Statevector& psi, int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t b = 0; b < psi.size(); ++b) {
    if ((b & cbit) != 0 && (b & tbit) == 0) {
      std::swap(psi[b], psi[b | tbit]);
    }
  }
}

}  // namespace

int parameter_count(const AnsatzSpec& spec) {
  check_spec(spec);
  return spec.n * (spec.reps + 1);
}

Statevector prepare_state(const AnsatzSpec& spec, const ParameterVector& p) {
  check_params(spec, p);
  Statevector psi(std::size_t{1} << spec.n, std::complex<double>{0.0, 0.0});
  psi[0] = 1.0;
  std::size_t next = 0;
  for (int layer = 0; layer <= spec.reps; ++layer) {
    for (int q = 0; q < spec.n; ++q) {
      apply_ry(psi, q, p[next++]);
    }
    if (layer < spec.reps) {
      for (int q = 0; q + 1 < spec.n; ++q) {
        apply_cnot(psi, q, q + 1);
      }
    }
  }
  return psi;
}

double state_norm(const Statevector& psi) {
  double norm2 = 0.0;
  for (const std::complex<double>& a : psi) norm2 += std::norm(a);
  return std::sqrt(norm2);
}

double expectation(const Statevector& psi, const EnergyTable& table) {
  if (psi.size() != table.values.size()) {
    throw std::invalid_argument(
        "expectation: statevector dimension " + std::to_string(psi.size()) +
        " does not match table size " + std::to_string(table.values.size()));
  }
  double value = 0.0;
  for (std::size_t b = 0; b < psi.size(); ++b) {
    value += std::norm(psi[b]) * table.values[b];
  }
  return value;
}

double energy_at(const AnsatzSpec& spec, const EnergyTable& table,
                 const ParameterVector& p) {
  return expectation(prepare_state(spec, p), table);
}

std::vector<double> gradient(const AnsatzSpec& spec, const EnergyTable& table,
                             const ParameterVector& p) {
  check_params(spec, p);
  constexpr double shift = std::numbers::pi / 2.0;
  std::vector<double> grad(p.size());
  ParameterVector shifted = p;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double original = shifted[j];
    shifted[j] = original + shift;
    const double plus = energy_at(spec, table, shifted);
    shifted[j] = original - shift;
    const double minus = energy_at(spec, table, shifted);
    shifted[j] = original;
    grad[j] = 0.5 * (plus - minus);
  }
  return grad;
}

}  // namespace vqewarm
