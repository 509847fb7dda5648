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

#include "robustea/drift.h"

#include <gtest/gtest.h>

#include <cmath>

#include "robustea/errors.h"
#include "robustea/oracle.h"

namespace robustea {
namespace {

BitString S(const char* text) { return BitString::FromString(text); }

TEST(DistanceTest, PiecewiseVanishesAboveThreshold) {
  const DistanceFunction f = DistanceFunction::ThresholdPiecewise(20, 3);
  EXPECT_EQ(f.d(), 13);
  for (int j = 14; j <= 20; ++j) EXPECT_EQ(f.Eval(BitString::LeadingOnes(20, j)), 0);
  for (int j = 0; j <= 13; ++j) EXPECT_GT(f.Eval(BitString::LeadingOnes(20, j)), 0);
}

TEST(DistanceTest, PiecewisePreconditions) {
  EXPECT_THROW(DistanceFunction::ThresholdPiecewise(21, 2), PreconditionError);
  EXPECT_THROW(DistanceFunction::ThresholdPiecewise(20, 0), PreconditionError);
  EXPECT_THROW(DistanceFunction::ThresholdPiecewise(20, 10), PreconditionError);
}

TEST(DistanceTest, PiecewiseLadderValues) {
  const DistanceFunction f = DistanceFunction::ThresholdPiecewise(100, 5);
  // 20r/n = 1, so the steps above n/2 double.
  EXPECT_EQ(f.LadderD(50), Ratio(1, 2));
  EXPECT_EQ(f.LadderD(51), 1);
  EXPECT_EQ(f.LadderD(56), 32);
  EXPECT_EQ(f.LadderV(55) - f.LadderV(56), 100 * 32 + 1);
  EXPECT_EQ(f.LadderV(56), 0);
}

TEST(DistanceTest, LadderIdentitiesHoldExactly) {
  for (auto [n, r] : {std::pair{10, 1}, std::pair{100, 5}, std::pair{64, 7}, std::pair{200, 40}}) {
    const LadderCheck c = CheckThresholdLadder(n, r);
    EXPECT_TRUE(c.differences_match) << n << " " << r;
    EXPECT_TRUE(c.ratios_match) << n << " " << r;
    EXPECT_TRUE(c.final_step_dominates) << n << " " << r;
  }
}

TEST(DistanceTest, OneMaxPhase2) {
  const DistanceFunction f = DistanceFunction::OneMaxPhase2(BuildOneMax(8, 5, 2));
  EXPECT_EQ(f.Eval(S("11111000")), 0);
  EXPECT_EQ(f.Eval(S("01010100")), 2);
  EXPECT_THROW(f.Eval(S("11111100")), DomainError);
  EXPECT_THROW(DistanceFunction::OneMaxPhase2(BuildBinVal(8, 5, 2)), PreconditionError);
}

TEST(DistanceTest, BinValPhases) {
  const DeletionRobustInstance inst = BuildBinVal(8, 5, 2);
  const DistanceFunction a = DistanceFunction::BinValPhase2a(inst);
  EXPECT_EQ(a.Eval(S("10101100")), 2);
  EXPECT_EQ(a.Eval(S("11100000")), 0);
  EXPECT_THROW(a.Eval(S("10100000")), DomainError);
  const DistanceFunction b = DistanceFunction::BinValPhase2b(inst);
  EXPECT_EQ(b.Eval(S("11101000")), 2);
  EXPECT_EQ(b.Eval(S("11111000")), 0);
  EXPECT_THROW(b.Eval(S("11010000")), DomainError);
}

TEST(DistanceTest, GeneralDeletionOnPlateau) {
  const DeletionRobustInstance inst = BuildPlateau(8, 3);
  const DistanceFunction f = DistanceFunction::GeneralDeletion(inst);
  EXPECT_EQ(f.Eval(S("11110000")), 0);
  EXPECT_EQ(f.Eval(S("11101000")), 1);
  EXPECT_EQ(f.Eval(S("00001111")), 1);
  EXPECT_EQ(f.MinPositive(), 1);
}

TEST(DistanceTest, MinPositiveExhaustiveAndBound) {
  const std::vector<Rational> w = {9, 7, 7, 5, 4, 3, Ratio(5, 2), 2, Ratio(3, 2), 1};
  const DistanceFunction f = DistanceFunction::GeneralDeletion(BuildLinear(ToWeights(w), 4, 1));
  Rational best = -1;
  for (std::uint64_t idx = 0; idx < 1024; ++idx) {
    const BitString x = BitString::FromIndex(10, idx);
    if (x.ones() > 4) continue;
    const Rational v = f.Eval(x);
    if (v > 0 && (best < 0 || v < best)) best = v;
  }
  EXPECT_EQ(f.MinPositive(), best);
  // n > 20 falls back to 1/(1/w_n + 1/delta).
  std::vector<Rational> many(24, 2);
  many.back() = 1;
  const DistanceFunction g =
      DistanceFunction::GeneralDeletion(BuildLinear(ToWeights(many), 5, 1));
  EXPECT_EQ(g.MinPositive(), Ratio(1, 2));
}

TEST(DriftTest, ZeroDistanceTakesNoStep) {
  const DistanceFunction f = DistanceFunction::OneMaxPhase2(BuildOneMax(8, 5, 2));
  Rng rng(1);
  const DriftEstimate e = EstimateDrift(f, S("11111000"), 1000, rng);
  EXPECT_EQ(e.mean, 0);
  EXPECT_EQ(e.standard_error, 0);
}

TEST(DriftTest, AcceptAllEstimateMatchesExactExpectation) {
  const int n = 30;
  const int d = 20;
  const DistanceFunction f = DistanceFunction::ThresholdLinear(n, d);
  for (int j : {0, 10, 15, 19, 20}) {
    // E[V(j) - V(j')] from the exact one-count step distribution.
    const auto p = OneCountStepDistributionExact(n, j);
    Rational expected = 0;
    const Rational vj = f.Eval(BitString::LeadingOnes(n, j));
    for (int i = 0; i <= n; ++i) {
      expected += p[static_cast<std::size_t>(i)] * (vj - f.Eval(BitString::LeadingOnes(n, i)));
    }
    Rng rng(DeriveSeed(4, 0, static_cast<std::uint64_t>(j)));
    const DriftEstimate e = EstimateDrift(f, BitString::LeadingOnes(n, j), 200000, rng);
    EXPECT_NEAR(e.mean, static_cast<double>(ToLongDouble(expected)), 5 * e.standard_error) << j;
  }
}

TEST(DriftTest, OneMaxPhase2MultiplicativeBoundHolds) {
  const DistanceFunction f = DistanceFunction::OneMaxPhase2(BuildOneMax(20, 12, 4));
  std::vector<BitString> states;
  Rng rng(8);
  for (int ones = 5; ones <= 12; ++ones) states.push_back(RandomStringWithOnes(20, ones, rng));
  const double c = 1 / (std::exp(1.0) * 20);
  const BoundReport report =
      CheckBound(f, states, {DriftBound::Kind::kMultiplicative, c}, 20000, 5);
  EXPECT_TRUE(report.all_pass);
  EXPECT_EQ(report.v_min, 1);
  ASSERT_EQ(report.states.size(), states.size());
  EXPECT_TRUE(report.states.back().absorbed);
  // (1 + ln(V/V_min))/c at V = 7.
  EXPECT_NEAR(report.max_implied_runtime_bound, (1 + std::log(7.0)) / c, 1e-9);
}

TEST(DriftTest, ViolatedBoundIsReported) {
  const DistanceFunction f = DistanceFunction::OneMaxPhase2(BuildOneMax(20, 12, 4));
  Rng rng(8);
  const BoundReport report = CheckBound(f, {RandomStringWithOnes(20, 6, rng)},
                                        {DriftBound::Kind::kAdditive, 10.0}, 5000, 1);
  EXPECT_FALSE(report.all_pass);
  EXPECT_NEAR(report.max_implied_runtime_bound, 0.6, 1e-12);
  const std::string csv = BoundReportCsv(report);
  EXPECT_EQ(csv.rfind("state,ones,distance,drift,stderr,required,margin,pass\n", 0), 0u);
}

TEST(DriftTest, CheckBoundIsDeterministic) {
  const DistanceFunction f = DistanceFunction::ThresholdPiecewise(20, 2);
  std::vector<BitString> states;
  for (int j = 0; j <= 12; ++j) states.push_back(BitString::LeadingOnes(20, j));
  const DriftBound bound{DriftBound::Kind::kAdditive, 1.0 / 400};
  EXPECT_EQ(BoundReportCsv(CheckBound(f, states, bound, 3000, 9)),
            BoundReportCsv(CheckBound(f, states, bound, 3000, 9)));
}

TEST(RandomStringTest, HasRequestedOnes) {
  Rng rng(2);
  std::vector<int> hits(10, 0);
  for (int s = 0; s < 10000; ++s) {
    const BitString x = RandomStringWithOnes(10, 3, rng);
    ASSERT_EQ(x.ones(), 3);
    for (int i = 0; i < 10; ++i) hits[i] += x[i];
  }
  // Each position is selected with probability 3/10; sd ~45.8.
  for (int h : hits) EXPECT_NEAR(h, 3000, 6 * 45.8);
}

}  // namespace
}  // namespace robustea
