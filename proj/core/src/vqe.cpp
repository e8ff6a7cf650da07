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
#include "vqewarm/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "vqewarm/io_format.hpp"

namespace vqewarm {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void check_config(const OptimizerConfig& cfg) {
  if (cfg.max_iterations < 1) {
    throw std::invalid_argument("optimizer: max_iterations must be >= 1");
  }
  if (!(cfg.energy_tolerance > 0.0)) {
    throw std::invalid_argument("optimizer: energy_tolerance must be > 0");
  }
  if (!(cfg.step_tolerance > 0.0)) {
    throw std::invalid_argument("optimizer: step_tolerance must be > 0");
  }
  if (!(cfg.bounds.lo <= cfg.bounds.hi)) {
    throw std::invalid_argument("optimizer: bounds interval is empty");
  }
}

// Counted view of the energy surface; every path that touches the objective
// goes through here so VqeResult::evaluations is exact.
struct Objective {
  const AnsatzSpec& spec;
  const EnergyTable& table;
  std::int64_t evaluations = 0;

  double operator()(const ParameterVector& p) {
    ++evaluations;
    const double e = energy_at(spec, table, p);
    if (!std::isfinite(e)) {
      throw std::runtime_error("run_vqe: non-finite energy encountered");
    }
    return e;
  }

  std::vector<double> grad(const ParameterVector& p) {
    evaluations += 2 * static_cast<std::int64_t>(p.size());
    return gradient(spec, table, p);
  }
};

// Dense symmetric inverse-Hessian approximation, row-major.
class InverseHessian {
 public:
  explicit InverseHessian(std::size_t m) : m_(m), data_(m * m) { reset(); }

  void reset() {
    std::fill(data_.begin(), data_.end(), 0.0);
    for (std::size_t i = 0; i < m_; ++i) data_[i * m_ + i] = 1.0;
  }

  void set_scaled_identity(double scale) {
    std::fill(data_.begin(), data_.end(), 0.0);
    for (std::size_t i = 0; i < m_; ++i) data_[i * m_ + i] = scale;
  }

  std::vector<double> multiply(const std::vector<double>& v) const {
    std::vector<double> out(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      const double* row = data_.data() + i * m_;
      double s = 0.0;
      for (std::size_t j = 0; j < m_; ++j) s += row[j] * v[j];
      out[i] = s;
    }
    return out;
  }

  // BFGS update from step s and gradient difference y; skipped when the
  // curvature product y.s is too small to keep the approximation positive
  // definite.
  void update(const std::vector<double>& s, const std::vector<double>& y) {
    const double ys = dot(y, s);
    if (!(ys > 1e-12 * norm2(y) * norm2(s))) return;
    const double rho = 1.0 / ys;
    const std::vector<double> hy = multiply(y);
    const double yhy = dot(y, hy);
    const double c = rho * (1.0 + rho * yhy);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        data_[i * m_ + j] +=
            c * s[i] * s[j] - rho * (s[i] * hy[j] + hy[i] * s[j]);
      }
    }
  }

 private:
  std::size_t m_;
  std::vector<double> data_;
};

void finalize(VqeResult& result, Objective& f, TerminationReason reason) {
  const TrajectoryEntry& last = result.trajectory.entries.back();
  result.final_params = last.params;
  result.final_energy = last.energy;
  result.iterations =
      static_cast<int>(result.trajectory.entries.size()) - 1;
  result.evaluations = f.evaluations;
  result.termination = reason;
}

VqeResult minimize_quasi_newton(Objective& f, const OptimizerConfig& cfg,
                                ParameterVector x) {
  constexpr double kArmijo = 1e-4;
  constexpr int kMaxBacktracks = 60;
  const std::size_t m = x.size();

  VqeResult result;
  double energy = f(x);
  result.trajectory.entries.push_back(TrajectoryEntry{0, x, energy});

  InverseHessian hessian(m);
  std::vector<double> grad = f.grad(x);
  bool hessian_scaled = false;
  TerminationReason reason = TerminationReason::kMaxIterations;

  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    std::vector<double> direction = hessian.multiply(grad);
    for (double& d : direction) d = -d;
    if (!(dot(direction, grad) < 0.0)) {
      // Quasi-Newton direction lost descent; restart from steepest descent.
      hessian.reset();
      hessian_scaled = false;
      direction = grad;
      for (double& d : direction) d = -d;
    }

    // Backtracking line search on the projected step.
    double alpha = 1.0;
    bool accepted = false;
    ParameterVector candidate(m);
    std::vector<double> step(m);
    double candidate_energy = 0.0;
    double step_norm = 0.0;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      for (std::size_t i = 0; i < m; ++i) {
        candidate[i] =
            std::clamp(x[i] + alpha * direction[i], cfg.bounds.lo,
                       cfg.bounds.hi);
        step[i] = candidate[i] - x[i];
      }
      step_norm = norm2(step);
      if (step_norm < cfg.step_tolerance) break;  // step collapsed
      candidate_energy = f(candidate);
      const double slope = dot(grad, step);
      const bool sufficient = slope < 0.0
                                  ? candidate_energy <= energy + kArmijo * slope
                                  : candidate_energy < energy;
      if (sufficient) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      reason = TerminationReason::kStepTolerance;
      break;
    }

    result.trajectory.entries.push_back(
        TrajectoryEntry{iter, candidate, candidate_energy});
    const double decrease = energy - candidate_energy;

    if (decrease < cfg.energy_tolerance) {
      reason = TerminationReason::kEnergyTolerance;
      break;
    }
    if (step_norm < cfg.step_tolerance) {
      reason = TerminationReason::kStepTolerance;
      break;
    }
    if (iter == cfg.max_iterations) break;

    std::vector<double> next_grad = f.grad(candidate);
    std::vector<double> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = next_grad[i] - grad[i];
    if (!hessian_scaled) {
      const double ys = dot(y, step);
      const double yy = dot(y, y);
      if (ys > 0.0 && yy > 0.0) {
        hessian.set_scaled_identity(ys / yy);
        hessian_scaled = true;
      }
    }
    hessian.update(step, y);
    x = std::move(candidate);
    energy = candidate_energy;
    grad = std::move(next_grad);
  }

  finalize(result, f, reason);
  return result;
}

VqeResult minimize_spsa(Objective& f, const OptimizerConfig& cfg,
                        ParameterVector x) {
  constexpr double kAlpha = 0.602;
  constexpr double kGamma = 0.101;
  constexpr int kCalibrationProbes = 5;
  const std::size_t m = x.size();
  Rng rng(cfg.spsa_seed);

  VqeResult result;
  double energy = f(x);
  result.trajectory.entries.push_back(TrajectoryEntry{0, x, energy});
  TerminationReason reason = TerminationReason::kMaxIterations;

  const double c0 = 0.1;
  const double stability = std::max(1.0, 0.1 * cfg.max_iterations);

  const auto perturbed = [&](const ParameterVector& base,
                             const std::vector<int>& delta, double scale) {
    ParameterVector p(m);
    for (std::size_t i = 0; i < m; ++i) {
      p[i] = std::clamp(base[i] + scale * delta[i], cfg.bounds.lo,
                        cfg.bounds.hi);
    }
    return p;
  };
  const auto draw_delta = [&]() {
    std::vector<int> delta(m);
    for (int& d : delta) d = rademacher(rng);
    return delta;
  };

  // Calibrate the gain so the first accepted update moves each coordinate by
  // roughly a tenth of a rotation period.
  double mean_component = 0.0;
  for (int probe = 0; probe < kCalibrationProbes; ++probe) {
    const std::vector<int> delta = draw_delta();
    const double plus = f(perturbed(x, delta, c0));
    const double minus = f(perturbed(x, delta, -c0));
    mean_component += std::abs(plus - minus) / (2.0 * c0);
  }
  mean_component /= kCalibrationProbes;
  const double target_step = 0.1 * kTwoPi;
  const double a0 = target_step * std::pow(stability + 1.0, kAlpha) /
                    std::max(mean_component, 1e-12);

  int accepted_steps = 0;
  for (int k = 0; k < cfg.max_iterations; ++k) {
    const double ck = c0 / std::pow(k + 1.0, kGamma);
    const double ak = a0 / std::pow(k + 1.0 + stability, kAlpha);
    const std::vector<int> delta = draw_delta();
    const double plus = f(perturbed(x, delta, ck));
    const double minus = f(perturbed(x, delta, -ck));
    const double slope = (plus - minus) / (2.0 * ck);

    ParameterVector candidate(m);
    double step_norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      candidate[i] = std::clamp(x[i] - ak * slope * delta[i], cfg.bounds.lo,
                                cfg.bounds.hi);
      const double di = candidate[i] - x[i];
      step_norm2 += di * di;
    }
    const double candidate_energy = f(candidate);
    if (!(candidate_energy < energy)) continue;  // blocked

    ++accepted_steps;
    result.trajectory.entries.push_back(
        TrajectoryEntry{accepted_steps, candidate, candidate_energy});
    const double decrease = energy - candidate_energy;
    x = std::move(candidate);
    energy = candidate_energy;
    if (decrease < cfg.energy_tolerance) {
      reason = TerminationReason::kEnergyTolerance;
      break;
    }
    if (std::sqrt(step_norm2) < cfg.step_tolerance) {
      reason = TerminationReason::kStepTolerance;
      break;
    }
  }

  finalize(result, f, reason);
  return result;
}

}  // namespace

const char* to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::kEnergyTolerance:
      return "energy_tolerance";
    case TerminationReason::kStepTolerance:
      return "step_tolerance";
    case TerminationReason::kMaxIterations:
      return "max_iterations";
  }
  return "unknown";
}

TerminationReason termination_from_string(const std::string& name) {
  if (name == "energy_tolerance") return TerminationReason::kEnergyTolerance;
  if (name == "step_tolerance") return TerminationReason::kStepTolerance;
  if (name == "max_iterations") return TerminationReason::kMaxIterations;
  throw std::invalid_argument("unknown termination reason '" + name + "'");
}

VqeResult run_vqe(const IsingHamiltonian& h, const AnsatzSpec& spec,
                  const ParameterVector& initial, const OptimizerConfig& cfg) {
  check_config(cfg);
  if (h.n != spec.n) {
    throw std::invalid_argument(
        "run_vqe: hamiltonian acts on " + std::to_string(h.n) +
        " qubits but the ansatz has " + std::to_string(spec.n));
  }
  const int m = parameter_count(spec);
  if (static_cast<int>(initial.size()) != m) {
    throw std::invalid_argument("run_vqe: initial point has " +
                                std::to_string(initial.size()) +
                                " coordinates, expected " + std::to_string(m));
  }
  for (double v : initial) {
    if (!(v >= cfg.bounds.lo && v <= cfg.bounds.hi)) {
      throw std::invalid_argument("run_vqe: initial point violates bounds");
    }
  }

  const EnergyTable table = energy_table(h);
  Objective objective{spec, table};
  switch (cfg.method) {
    case OptimizerMethod::kGradientQuasiNewton:
      return minimize_quasi_newton(objective, cfg, initial);
    case OptimizerMethod::kSimultaneousPerturbation:
      return minimize_spsa(objective, cfg, initial);
  }
  throw std::invalid_argument("run_vqe: unknown optimizer method");
}

ParameterVector random_initial(const AnsatzSpec& spec, const Bounds& bounds,
                               Rng& rng) {
  if (!(bounds.lo <= bounds.hi)) {
    throw std::invalid_argument("random_initial: bounds interval is empty");
  }
  ParameterVector p(static_cast<std::size_t>(parameter_count(spec)));
  for (double& v : p) v = uniform_in(rng, bounds.lo, bounds.hi);
  return p;
}

std::vector<double> parameter_change_series(const Trajectory& t) {
  if (t.entries.size() < 2) {
    throw std::invalid_argument(
        "parameter_change_series: trajectory must have at least 2 iterates");
  }
  std::vector<double> series;
  series.reserve(t.entries.size() - 1);
  for (std::size_t i = 0; i + 1 < t.entries.size(); ++i) {
    const ParameterVector& a = t.entries[i].params;
    const ParameterVector& b = t.entries[i + 1].params;
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const double d = b[j] - a[j];
      sum += d * d;
    }
    series.push_back(std::sqrt(sum));
  }
  return series;
}

void write_trajectory_csv(const Trajectory& t, std::ostream& out) {
  if (t.entries.empty()) {
    throw std::invalid_argument("write_trajectory_csv: empty trajectory");
  }
  const std::size_t m = t.entries.front().params.size();
  out << "iter,energy";
  for (std::size_t j = 0; j < m; ++j) out << ",theta_" << j;
  out << '\n';
  for (const TrajectoryEntry& e : t.entries) {
    out << e.iteration << ',' << format_double(e.energy);
    for (double v : e.params) out << ',' << format_double(v);
    out << '\n';
  }
}

Trajectory read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("trajectory csv: missing header");
  }
  const std::vector<std::string> header =
      split_csv_line(trim(line));
  if (header.size() < 2 || header[0] != "iter" || header[1] != "energy") {
    throw std::runtime_error("trajectory csv: bad header '" + line + "'");
  }
  for (std::size_t j = 2; j < header.size(); ++j) {
    if (header[j] != "theta_" + std::to_string(j - 2)) {
      throw std::runtime_error("trajectory csv: bad header column '" +
                               header[j] + "'");
    }
  }
  const std::size_t m = header.size() - 2;

  Trajectory t;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(body);
    if (fields.size() != m + 2) {
      throw std::runtime_error("trajectory csv: line " +
                               std::to_string(line_number) + " has " +
                               std::to_string(fields.size()) +
                               " fields, expected " + std::to_string(m + 2));
    }
    TrajectoryEntry e;
    e.iteration = static_cast<int>(parse_int(fields[0], "iter"));
    e.energy = parse_double(fields[1], "energy");
    e.params.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      e.params.push_back(parse_double(fields[2 + j], "theta"));
    }
    t.entries.push_back(std::move(e));
  }
  if (t.entries.empty()) {
    throw std::runtime_error("trajectory csv: no data rows");
  }
  return t;
}

void write_trajectory_csv_file(const Trajectory& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("write_trajectory_csv_file: cannot open " + path);
  }
  write_trajectory_csv(t, out);
  if (!out) {
    throw std::runtime_error("write_trajectory_csv_file: write failed for " +
                             path);
  }
}

Trajectory read_trajectory_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("read_trajectory_csv_file: cannot open " + path);
  }
  return read_trajectory_csv(in);
}

}  // namespace vqewarm
