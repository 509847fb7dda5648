// Copyright 2026 The RobustEA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "robustea/ea.h"

#include <gtest/gtest.h>

#include <cmath>

#include "robustea/errors.h"

namespace robustea {
namespace {

TEST(RunTest, SingleItemMeanIsThreeHalves) {
  // Half of the starts are optimal; otherwise every step flips the bit.
  const Instance inst(BuildOneMax(1, 1, 0));
  const int runs = 20000;
  double sum = 0;
  double sq = 0;
  for (int i = 0; i < runs; ++i) {
    RunConfig cfg;
    cfg.seed = DeriveSeed(5, 0, static_cast<std::uint64_t>(i));
    const RunResult r = robustea::Run(inst, cfg);
    ASSERT_TRUE(r.hit_optimum);
    ASSERT_TRUE(r.evaluations == 1 || r.evaluations == 2);
    sum += static_cast<double>(r.evaluations);
    sq += static_cast<double>(r.evaluations * r.evaluations);
  }
  const double mean = sum / runs;
  const double se = std::sqrt((sq / runs - mean * mean) / runs);
  EXPECT_NEAR(mean, 1.5, 6 * se);
}

TEST(RunTest, BudgetOfOneReportsTheInitialSolution) {
  const Instance inst(BuildOneMax(1, 1, 0));
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.max_evaluations = 1;
    const RunResult r = robustea::Run(inst, cfg);
    EXPECT_EQ(r.evaluations, 1u);
    EXPECT_EQ(r.hit_optimum, r.final_solution.ones() == 1);
    hits += r.hit_optimum;
  }
  EXPECT_GT(hits, 0);
  EXPECT_LT(hits, 50);
}

TEST(RunTest, IsDeterministicPerSeed) {
  const Instance inst(BuildBinVal(20, 8, 3));
  RunConfig cfg;
  cfg.seed = 77;
  cfg.record_trajectory = true;
  const RunResult a = robustea::Run(inst, cfg);
  const RunResult b = robustea::Run(inst, cfg);
  EXPECT_EQ(a.evaluations, b.evaluations);
  EXPECT_EQ(a.final_solution, b.final_solution);
  ASSERT_EQ(a.trajectory.size(), b.trajectory.size());
  for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
    EXPECT_EQ(a.trajectory[i].evaluation, b.trajectory[i].evaluation);
    EXPECT_EQ(a.trajectory[i].fitness, b.trajectory[i].fitness);
  }
  EXPECT_TRUE(a.hit_optimum);
  EXPECT_TRUE(IsOptimal(inst, a.final_solution));
}

TEST(RunTest, FitnessNeverDecreases) {
  const Instance inst(BuildLinear(ToWeights({9, 7, 7, 5, 4, 3, Ratio(5, 2), 2, Ratio(3, 2), 1}),
                                  4, 1));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.max_evaluations = 3000;
    cfg.stop_on_optimum = false;
    cfg.record_trajectory = true;
    const RunResult r = robustea::Run(inst, cfg);
    EXPECT_EQ(r.evaluations, 3000u);
    ASSERT_GE(r.trajectory.size(), 2u);
    EXPECT_EQ(r.trajectory.front().evaluation, 1u);
    EXPECT_EQ(r.trajectory.back().evaluation, 3000u);
    for (std::size_t i = 1; i < r.trajectory.size(); ++i) {
      EXPECT_GT(r.trajectory[i].evaluation, r.trajectory[i - 1].evaluation);
      EXPECT_GE(*r.trajectory[i].fitness, *r.trajectory[i - 1].fitness);
    }
  }
}

TEST(RunTest, CensoredAtBudget) {
  const Instance inst(BuildPlateau(16, 7));
  RunConfig cfg;
  cfg.seed = 1;
  cfg.max_evaluations = 10;
  const RunResult r = robustea::Run(inst, cfg);
  EXPECT_FALSE(r.hit_optimum);
  EXPECT_EQ(r.evaluations, 10u);
}

TEST(RunTest, UnknownOptimumNeedsCensoredMode) {
  const Instance inst(BuildWorst({ToWeights({1, 2}), ToWeights({2, 1})}, 1));
  RunConfig cfg;
  EXPECT_THROW(robustea::Run(inst, cfg), CensoredModeError);
  cfg.stop_on_optimum = false;
  cfg.max_evaluations = 50;
  const RunResult r = robustea::Run(inst, cfg);
  EXPECT_EQ(r.evaluations, 50u);
  EXPECT_FALSE(r.hit_optimum);
}

TEST(RunAcceptAllTest, StopsAboveThreshold) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RunConfig cfg;
    cfg.seed = seed;
    const RunResult r = RunAcceptAll(1, 0, cfg);
    EXPECT_TRUE(r.hit_optimum);
    EXPECT_EQ(r.final_solution.ones(), 1);
    EXPECT_TRUE(r.evaluations == 1 || r.evaluations == 2);
  }
  RunConfig cfg;
  cfg.seed = 3;
  const RunResult r = RunAcceptAll(40, 25, cfg);
  EXPECT_TRUE(r.hit_optimum);
  EXPECT_GT(r.final_solution.ones(), 25);
  EXPECT_THROW(RunAcceptAll(5, 5, cfg), PreconditionError);
}

}  // namespace
}  // namespace robustea
