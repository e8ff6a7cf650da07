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
#include <benchmark/benchmark.h>

#include "vqewarm/harness.hpp"

namespace {

using namespace vqewarm;

ParameterVector bench_params(const AnsatzSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  return random_initial(spec, Bounds{}, rng);
}

void BM_PrepareState(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AnsatzSpec spec{n, 3};
  const ParameterVector p = bench_params(spec, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prepare_state(spec, p));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PrepareState)->DenseRange(6, 16, 2)->Complexity();

void BM_EnergyTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const IsingHamiltonian h = build_hamiltonian(random_graph(n, 0.5, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(energy_table(h));
  }
}
BENCHMARK(BM_EnergyTable)->DenseRange(6, 16, 2);

void BM_EnergyAt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AnsatzSpec spec{n, 3};
  Rng rng(3);
  const EnergyTable table =
      energy_table(build_hamiltonian(random_graph(n, 0.5, rng)));
  const ParameterVector p = bench_params(spec, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(energy_at(spec, table, p));
  }
}
BENCHMARK(BM_EnergyAt)->DenseRange(6, 14, 4);

void BM_ParameterShiftGradient(benchmark::State& state) {
  const AnsatzSpec spec{6, static_cast<int>(state.range(0))};
  Rng rng(4);
  const EnergyTable table =
      energy_table(build_hamiltonian(random_graph(6, 0.5, rng)));
  const ParameterVector p = bench_params(spec, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient(spec, table, p));
  }
}
BENCHMARK(BM_ParameterShiftGradient)->DenseRange(2, 5);

void BM_SeedSolve(benchmark::State& state) {
  Rng rng(5);
  const IsingHamiltonian h = build_hamiltonian(random_graph(6, 0.5, rng));
  const AnsatzSpec spec{6, 3};
  const ParameterVector initial = bench_params(spec, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_vqe(h, spec, initial));
  }
}
BENCHMARK(BM_SeedSolve)->Unit(benchmark::kMillisecond);

void BM_CrossEvaluate(benchmark::State& state) {
  Rng rng(6);
  const AnsatzSpec spec{6, 3};
  std::vector<ParameterVector> points;
  for (int i = 0; i < 10; ++i) points.push_back(bench_params(spec, 100 + i));
  std::vector<IsingHamiltonian> targets;
  for (int t = 0; t < 8; ++t) {
    targets.push_back(build_hamiltonian(random_graph(6, 0.5, rng)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_evaluate(points, targets, spec));
  }
}
BENCHMARK(BM_CrossEvaluate)->Unit(benchmark::kMicrosecond);

void BM_Trial(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.n = 6;
  cfg.k = 9;
  cfg.trials = 1;
  cfg.master_seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trial(cfg, 0));
  }
}
BENCHMARK(BM_Trial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
