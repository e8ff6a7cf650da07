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
#include "vqewarm/transfer.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "test_oracles.hpp"

namespace vqewarm {
namespace {

using testing::empty_graph;
using testing::triangle;

Trajectory linear_trajectory(int length, int params) {
  Trajectory t;
  for (int i = 0; i < length; ++i) {
    t.entries.push_back(
        {i, ParameterVector(static_cast<std::size_t>(params),
                            static_cast<double>(i)),
         -static_cast<double>(i)});
  }
  return t;
}

// A cross evaluation with prescribed energy rows; points are distinct so
// index mixups surface as value mismatches.
CrossEvaluation synthetic_ce(const std::vector<std::vector<double>>& rows) {
  CrossEvaluation ce;
  const std::size_t points = rows.empty() ? 0 : rows.front().size();
  for (std::size_t h = 0; h < points; ++h) {
    ce.points.push_back(ParameterVector{static_cast<double>(h)});
  }
  ce.energies = rows;
  return ce;
}

TEST(Subsample, EveryTenthPoint) {
  const Trajectory t = linear_trajectory(25, 2);
  const std::vector<ParameterVector> points = subsample(t, 10);
  ASSERT_EQ(points.size(), 3u);
  EXPECT_EQ(points[0][0], 0.0);
  EXPECT_EQ(points[1][0], 10.0);
  EXPECT_EQ(points[2][0], 20.0);
}

TEST(Subsample, StrideOneKeepsEverything) {
  const Trajectory t = linear_trajectory(7, 1);
  EXPECT_EQ(subsample(t, 1).size(), 7u);
}

TEST(Subsample, ShortTrajectoryKeepsOnlyTheStart) {
  const Trajectory t = linear_trajectory(9, 1);
  const std::vector<ParameterVector> points = subsample(t, 10);
  ASSERT_EQ(points.size(), 1u);
  EXPECT_EQ(points[0][0], 0.0);
}

TEST(Subsample, RejectsNonPositiveStride) {
  const Trajectory t = linear_trajectory(5, 1);
  EXPECT_THROW(subsample(t, 0), std::invalid_argument);
  EXPECT_THROW(subsample(t, -3), std::invalid_argument);
}

TEST(Subsample, TrajectoryVariantKeepsLabelsAndEnergies) {
  const Trajectory kept = subsample_trajectory(linear_trajectory(25, 1), 10);
  ASSERT_EQ(kept.entries.size(), 3u);
  EXPECT_EQ(kept.entries[2].iteration, 20);
  EXPECT_EQ(kept.entries[2].energy, -20.0);
}

TEST(CrossEvaluate, SinglePointOnTriangle) {
  const AnsatzSpec spec{3, 1};
  const std::vector<ParameterVector> points{ParameterVector(6, 0.0)};
  const CrossEvaluation ce =
      cross_evaluate(points, {build_hamiltonian(triangle())}, spec);
  ASSERT_EQ(ce.energies.size(), 1u);
  ASSERT_EQ(ce.energies[0].size(), 1u);
  EXPECT_EQ(ce.energies[0][0], 3.0);
}

TEST(CrossEvaluate, EmptyGraphTargetGivesZeroRow) {
  Rng rng(3);
  const AnsatzSpec spec{3, 2};
  std::vector<ParameterVector> points;
  for (int i = 0; i < 4; ++i) {
    points.push_back(random_initial(spec, Bounds{}, rng));
  }
  const CrossEvaluation ce =
      cross_evaluate(points, {build_hamiltonian(empty_graph(3))}, spec);
  for (double e : ce.energies[0]) EXPECT_EQ(e, 0.0);
}

TEST(CrossEvaluate, MatchesElementWiseEnergyAt) {
  Rng rng(5);
  const AnsatzSpec spec{4, 2};
  std::vector<ParameterVector> points;
  for (int i = 0; i < 3; ++i) {
    points.push_back(random_initial(spec, Bounds{}, rng));
  }
  std::vector<IsingHamiltonian> targets{
      build_hamiltonian(random_graph(4, 0.5, rng)),
      build_hamiltonian(random_graph(4, 0.5, rng))};
  const CrossEvaluation ce = cross_evaluate(points, targets, spec);
  ASSERT_EQ(ce.energies.size(), 2u);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const EnergyTable table = energy_table(targets[t]);
    for (std::size_t h = 0; h < points.size(); ++h) {
      EXPECT_EQ(ce.energies[t][h], energy_at(spec, table, points[h]));
    }
  }
}

TEST(CrossEvaluate, RejectsQubitCountMismatch) {
  const AnsatzSpec spec{3, 1};
  EXPECT_THROW(cross_evaluate({ParameterVector(6, 0.0)},
                              {build_hamiltonian(empty_graph(4))}, spec),
               std::invalid_argument);
}

TEST(SelectInitial, ArgminUnderBothObjectives) {
  const CrossEvaluation ce = synthetic_ce({{-3.0, -1.0, 2.0}});
  const AnsatzSpec spec{1, 0};
  Rng rng(7);

  Strategy abs_all{StrategyKind::kAllPoints, SelectionObjective::kAbsEnergy};
  const SelectionResult by_abs =
      select_initial(ce, 0, abs_all, spec, Bounds{}, rng);
  EXPECT_EQ(by_abs.chosen_index, 1);
  EXPECT_EQ(by_abs.objective_value, 1.0);
  EXPECT_EQ(by_abs.chosen_point, ce.points[1]);

  Strategy raw_all{StrategyKind::kAllPoints, SelectionObjective::kEnergy};
  const SelectionResult by_energy =
      select_initial(ce, 0, raw_all, spec, Bounds{}, rng);
  EXPECT_EQ(by_energy.chosen_index, 0);
  EXPECT_EQ(by_energy.objective_value, -3.0);
}

TEST(SelectInitial, FirstHalfRestrictsTheArgmin) {
  // ceil(6/2) = 3 candidates: {5, -2, -2} -> |.| argmin at index 1.
  const CrossEvaluation ce =
      synthetic_ce({{5.0, -2.0, -2.0, 0.0, 1.0, -4.0}});
  const AnsatzSpec spec{1, 0};
  Rng rng(9);
  Strategy half{StrategyKind::kFirstHalf, SelectionObjective::kAbsEnergy};
  const SelectionResult result =
      select_initial(ce, 0, half, spec, Bounds{}, rng);
  EXPECT_EQ(result.chosen_index, 1);
  EXPECT_EQ(result.objective_value, 2.0);
}

TEST(SelectInitial, TiesBreakTowardLowestIndex) {
  const CrossEvaluation ce = synthetic_ce({{1.0, -1.0, 1.0}});
  const AnsatzSpec spec{1, 0};
  Rng rng(11);
  Strategy abs_all{StrategyKind::kAllPoints, SelectionObjective::kAbsEnergy};
  EXPECT_EQ(select_initial(ce, 0, abs_all, spec, Bounds{}, rng).chosen_index,
            0);
}

TEST(SelectInitial, RandomStrategyIgnoresCrossEvaluations) {
  // Even an empty cross evaluation is fine for the random strategy.
  const CrossEvaluation ce;
  const AnsatzSpec spec{2, 1};
  const Bounds bounds{-1.0, 1.0};
  Rng rng(13);
  Strategy random{StrategyKind::kRandom, SelectionObjective::kAbsEnergy};
  const SelectionResult result =
      select_initial(ce, 5, random, spec, bounds, rng);
  EXPECT_FALSE(result.chosen_index.has_value());
  EXPECT_FALSE(result.objective_value.has_value());
  ASSERT_EQ(result.chosen_point.size(), 4u);
  for (double v : result.chosen_point) {
    EXPECT_GE(v, -1.0);
    EXPECT_LE(v, 1.0);
  }
  Rng twin(13);
  EXPECT_EQ(result.chosen_point, random_initial(spec, bounds, twin));
}

TEST(SelectInitial, NonRandomStrategiesDoNotTouchTheRng) {
  const CrossEvaluation ce = synthetic_ce({{2.0, -1.0}});
  const AnsatzSpec spec{1, 0};
  Rng rng(17), twin(17);
  Strategy half{StrategyKind::kFirstHalf, SelectionObjective::kAbsEnergy};
  (void)select_initial(ce, 0, half, spec, Bounds{}, rng);
  EXPECT_EQ(rng(), twin());
}

TEST(SelectInitial, RejectsBadInputs) {
  const AnsatzSpec spec{1, 0};
  Rng rng(19);
  Strategy all{StrategyKind::kAllPoints, SelectionObjective::kAbsEnergy};
  const CrossEvaluation no_points;
  EXPECT_THROW(select_initial(no_points, 0, all, spec, Bounds{}, rng),
               std::invalid_argument);
  const CrossEvaluation ce = synthetic_ce({{1.0}});
  EXPECT_THROW(select_initial(ce, 2, all, spec, Bounds{}, rng),
               std::invalid_argument);
}

TEST(SelectInitial, RestrictionAndScalingProperties) {
  Rng rng(23);
  const AnsatzSpec spec{1, 0};
  Strategy abs_all{StrategyKind::kAllPoints, SelectionObjective::kAbsEnergy};
  Strategy abs_half{StrategyKind::kFirstHalf, SelectionObjective::kAbsEnergy};
  Strategy raw_all{StrategyKind::kAllPoints, SelectionObjective::kEnergy};
  Strategy raw_half{StrategyKind::kFirstHalf, SelectionObjective::kEnergy};

  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t count = 1 + rng() % 9;
    std::vector<double> row(count);
    for (double& e : row) e = uniform_in(rng, -4.0, 4.0);
    const CrossEvaluation ce = synthetic_ce({row});

    for (const auto& [all, half] :
         {std::pair{abs_all, abs_half}, std::pair{raw_all, raw_half}}) {
      const SelectionResult full =
          select_initial(ce, 0, all, spec, Bounds{}, rng);
      const SelectionResult restricted =
          select_initial(ce, 0, half, spec, Bounds{}, rng);
      // Restricting an argmin can only worsen (raise) the objective.
      EXPECT_GE(*restricted.objective_value, *full.objective_value);
      if (*full.chosen_index < static_cast<int>((count + 1) / 2)) {
        EXPECT_EQ(*full.chosen_index, *restricted.chosen_index);
      }
    }

    // Positive scaling never changes the argmin.
    std::vector<double> scaled = row;
    for (double& e : scaled) e *= 3.5;
    const CrossEvaluation ce_scaled = synthetic_ce({scaled});
    for (const Strategy& s : {abs_all, abs_half, raw_all, raw_half}) {
      EXPECT_EQ(select_initial(ce, 0, s, spec, Bounds{}, rng).chosen_index,
                select_initial(ce_scaled, 0, s, spec, Bounds{}, rng)
                    .chosen_index);
    }
  }
}

TEST(StrategyLabels, RoundTrip) {
  for (const StrategyKind kind :
       {StrategyKind::kAllPoints, StrategyKind::kFirstHalf,
        StrategyKind::kRandom}) {
    for (const SelectionObjective obj :
         {SelectionObjective::kAbsEnergy, SelectionObjective::kEnergy}) {
      const Strategy s{kind, obj};
      EXPECT_EQ(strategy_from_label(strategy_label(s)), s);
    }
  }
  EXPECT_THROW(strategy_from_label("bogus"), std::invalid_argument);
  EXPECT_THROW(strategy_from_label("all_points:bogus"), std::invalid_argument);
}

TEST(CrossEvaluationCsv, RoundTripsWithPointsSidecar) {
  Rng rng(29);
  const AnsatzSpec spec{3, 1};
  Trajectory kept;
  for (int i = 0; i < 3; ++i) {
    kept.entries.push_back(
        {i * 10, random_initial(spec, Bounds{}, rng), uniform_in(rng, -2, 2)});
  }
  std::vector<ParameterVector> points;
  for (const TrajectoryEntry& e : kept.entries) points.push_back(e.params);
  const std::vector<IsingHamiltonian> targets{
      build_hamiltonian(triangle()),
      build_hamiltonian(random_graph(3, 0.5, rng))};
  const CrossEvaluation ce = cross_evaluate(points, targets, spec);

  std::stringstream matrix, sidecar;
  write_cross_evaluation_csv(ce, matrix);
  write_trajectory_csv(kept, sidecar);
  const CrossEvaluation back = read_cross_evaluation_csv(matrix, sidecar);
  EXPECT_EQ(back.points, ce.points);
  EXPECT_EQ(back.energies, ce.energies);
}

TEST(CrossEvaluationCsv, RejectsIncompleteMatrices) {
  std::stringstream matrix("point_index,target_index,energy\n0,0,1.5\n");
  std::stringstream sidecar("iter,energy,theta_0\n0,0,0\n10,0,1\n");
  EXPECT_THROW(read_cross_evaluation_csv(matrix, sidecar), std::runtime_error);
}

}  // namespace
}  // namespace vqewarm
