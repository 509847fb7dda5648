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

#include "robustea/problems.h"

#include <gtest/gtest.h>

#include "robustea/errors.h"
#include "robustea/oracle.h"

namespace robustea {
namespace {

Rational Q(long p, long q = 1) { return Ratio(p, q); }

BitString S(const char* text) { return BitString::FromString(text); }

TEST(RationalTest, ParseAndFormatRoundTrip) {
  EXPECT_EQ(ParseRational("6/4"), Q(3, 2));
  EXPECT_EQ(FormatRational(Q(3, 2)), "3/2");
  EXPECT_EQ(FormatRational(Q(4, 2)), "2");
  EXPECT_EQ(ParseRational("-7"), Q(-7));
  EXPECT_THROW(ParseRational("1/0"), PreconditionError);
  EXPECT_THROW(ParseRational("x"), PreconditionError);
}

TEST(WeightTest, RejectsValuesBelowOne) {
  EXPECT_THROW(Weight(Q(1, 2)), PreconditionError);
  EXPECT_NO_THROW(Weight(Q(1)));
}

TEST(LinearObjectiveTest, SortsAndRemembersUserOrder) {
  const LinearObjective obj(ToWeights({Q(1), Q(3), Q(2)}));
  EXPECT_EQ(obj.weights(), (std::vector<Rational>{Q(3), Q(2), Q(1)}));
  EXPECT_EQ(obj.original_order(), (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(obj.UserWeights(), (std::vector<Rational>{Q(1), Q(3), Q(2)}));
}

TEST(LinearObjectiveTest, MinWeightGap) {
  const std::vector<Rational> a = {Q(2), Q(2), Q(1)};
  EXPECT_EQ(MinWeightGap(a), Q(1));
  const std::vector<Rational> b = {Q(5), Q(5), Q(5)};
  EXPECT_EQ(MinWeightGap(b), Q(1));
  const std::vector<Rational> c = {Q(3), Q(5, 2), Q(1)};
  EXPECT_EQ(MinWeightGap(c), Q(1, 2));
}

TEST(DeletionObjectiveTest, OneMaxDropsDOnes) {
  const DeletionRobustInstance inst = BuildOneMax(8, 5, 2);
  EXPECT_EQ(EvalFDeletion(inst, S("11111000")).value, Q(3));
  EXPECT_EQ(EvalFDeletion(inst, S("11000000")).value, Q(0));
  EXPECT_EQ(inst.optimum_value().value, Q(3));
}

TEST(DeletionObjectiveTest, BinValDropsLargestSelected) {
  const DeletionRobustInstance inst = BuildBinVal(4, 3, 1);
  EXPECT_EQ(EvalFDeletion(inst, S("1110")).value, Q(6));
  EXPECT_EQ(inst.optimum_value().value, Q(6));
  EXPECT_EQ(BuildBinVal(3, 3, 2).optimum_value().value, Q(1));
}

TEST(DeletionObjectiveTest, OptimumClosedForms) {
  EXPECT_EQ(BuildOneMax(9, 4, 0).optimum_value().value, Q(4));
  EXPECT_EQ(BuildOneMax(4, 4, 3).optimum_value().value, Q(1));
  EXPECT_THROW(BuildOneMax(4, 2, 2), PreconditionError);
  EXPECT_THROW(BuildOneMax(4, 5, 1), PreconditionError);
}

TEST(DeletionObjectiveTest, BinValStaysExactBeyond64Bits) {
  const int n = 70;
  const DeletionRobustInstance inst = BuildBinVal(n, 3, 1);
  EXPECT_FALSE(inst.scaled().fits_int64());
  BitString a(n);
  a.Set(0, true);
  a.Set(1, true);
  a.Set(n - 1, true);
  BitString b(n);
  b.Set(0, true);
  b.Set(1, true);
  // The last item adds 1 to a sum near 2^68.
  EXPECT_GT(EvalFDeletion(inst, a), EvalFDeletion(inst, b));
  EXPECT_EQ(EvalFDeletion(inst, a).value - EvalFDeletion(inst, b).value, Q(1));
}

TEST(DeletionObjectiveTest, ScalingWeightsScalesF) {
  Rng rng(17);
  const std::vector<Rational> w = {Q(7, 2), Q(3), Q(3), Q(2), Q(5, 3), Q(1)};
  std::vector<Rational> doubled;
  for (const auto& v : w) doubled.push_back(2 * v);
  const DeletionRobustInstance a = BuildLinear(ToWeights(w), 4, 2);
  const DeletionRobustInstance b = BuildLinear(ToWeights(doubled), 4, 2);
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    const BitString x = BitString::FromIndex(6, idx);
    EXPECT_EQ(EvalFDeletion(b, x).value, 2 * EvalFDeletion(a, x).value);
  }
}

TEST(DeletionObjectiveTest, AddingAnItemNeverDecreasesF) {
  const std::vector<Rational> w = {Q(9), Q(7), Q(7), Q(5), Q(4), Q(3), Q(5, 2), Q(2)};
  const DeletionRobustInstance inst = BuildLinear(ToWeights(w), 8, 3);
  for (std::uint64_t idx = 0; idx < 256; ++idx) {
    const BitString x = BitString::FromIndex(8, idx);
    for (int i = 0; i < 8; ++i) {
      if (x[i]) continue;
      BitString y = x;
      y.Set(i, true);
      EXPECT_GE(EvalFDeletion(inst, y), EvalFDeletion(inst, x));
    }
  }
}

TEST(DeletionObjectiveTest, MatchesBruteForceOnRandomWeights) {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> w;
    for (int i = 0; i < 9; ++i) {
      const long q = 1 + static_cast<long>(rng.UniformBelow(6));
      w.push_back(Q(q + static_cast<long>(rng.UniformBelow(5 * q)), q));
    }
    for (int d = 0; d <= 3; ++d) {
      const DeletionRobustInstance inst = BuildLinear(ToWeights(w), 7, d);
      for (std::uint64_t idx = 0; idx < 512; ++idx) {
        const BitString x = BitString::FromIndex(9, idx);
        ASSERT_EQ(EvalFDeletion(inst, x), BruteForceF(inst, x)) << x.ToString();
      }
    }
  }
}

TEST(FitnessTest, InfeasibleBranch) {
  const Instance inst(BuildOneMax(6, 3, 1));
  EXPECT_EQ(Fitness(inst, S("111110")).value, Q(-2));
  EXPECT_EQ(Fitness(inst, S("100000")).value, Q(0));
  const Instance onemax(BuildOneMax(8, 5, 2));
  EXPECT_EQ(Fitness(onemax, S("11111000")).value, Q(3));
}

TEST(FitnessTest, EveryFeasibleStringBeatsEveryInfeasibleOne) {
  const Instance inst(BuildBinVal(6, 3, 1));
  FitnessValue worst_feasible{Q(1000)};
  FitnessValue best_infeasible{Q(-1000)};
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    const BitString x = BitString::FromIndex(6, idx);
    const FitnessValue f = Fitness(inst, x);
    if (x.ones() <= 3) {
      worst_feasible = std::min(worst_feasible, f);
    } else {
      best_infeasible = std::max(best_infeasible, f);
    }
  }
  EXPECT_GT(worst_feasible, best_infeasible);
}

TEST(OptimalityTest, OneMaxAnyKSubset) {
  const Instance inst(BuildOneMax(6, 3, 1));
  EXPECT_TRUE(IsOptimal(inst, S("010101")));
  EXPECT_TRUE(IsOptimal(inst, S("111000")));
  EXPECT_FALSE(IsOptimal(inst, S("110000")));
  EXPECT_FALSE(IsOptimal(inst, S("111100")));
}

TEST(OptimalityTest, BinValOnlyPrefix) {
  const Instance inst(BuildBinVal(6, 3, 1));
  int optimal = 0;
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    const BitString x = BitString::FromIndex(6, idx);
    if (IsOptimal(inst, x)) {
      ++optimal;
      EXPECT_EQ(x.ToString(), "111000");
    }
  }
  EXPECT_EQ(optimal, 1);
}

TEST(PlateauTest, OnlyThePrefixScoresTwo) {
  const Instance inst(BuildPlateau(8, 3));
  EXPECT_EQ(inst.k(), 4);
  EXPECT_EQ(inst.optimum_value().value, Q(2));
  EXPECT_TRUE(IsOptimal(inst, S("11110000")));
  for (std::uint64_t idx = 0; idx < 256; ++idx) {
    const BitString x = BitString::FromIndex(8, idx);
    if (x.ones() != 4 || x.ToString() == "11110000") continue;
    EXPECT_EQ(EvalF(inst, x).value, Q(1));
    EXPECT_FALSE(IsOptimal(inst, x));
  }
}

TEST(WorstCaseTest, SingleRowIsLinearSum) {
  const WorstCaseInstance inst = BuildWorst({ToWeights({Q(2), Q(1), Q(3)})}, 2, Q(5));
  EXPECT_EQ(EvalFWorst(inst, S("000")).value, Q(0));
  EXPECT_EQ(EvalFWorst(inst, S("101")).value, Q(5));
}

TEST(WorstCaseTest, UnknownOptimumIsCensoredOnly) {
  const Instance inst(BuildWorst({ToWeights({Q(1), Q(2)}), ToWeights({Q(2), Q(1)})}, 1));
  EXPECT_FALSE(inst.has_optimum());
  EXPECT_THROW(inst.optimum_value(), CensoredModeError);
  EXPECT_THROW(IsOptimal(inst, S("10")), CensoredModeError);
}

TEST(WorstCaseTest, K1Instance) {
  const Instance inst(BuildTrapK1(6, 2));
  EXPECT_EQ(inst.k(), 1);
  EXPECT_EQ(inst.optimum_value().value, Q(2));
  EXPECT_TRUE(IsOptimal(inst, S("100000")));
  EXPECT_FALSE(IsOptimal(inst, S("010000")));
}

TEST(WorstCaseTest, MidKValues) {
  const int n = 11;
  const int k = 4;
  const Instance inst(BuildTrapMidK(n, k, 3));
  EXPECT_EQ(inst.optimum_value().value, Q(2 * k * k + 1, 2));
  EXPECT_EQ(EvalF(inst, S("11110000000")).value, Q(2 * k * k + 1, 2));
  // ones = k with the first k items unselected.
  EXPECT_EQ(EvalF(inst, S("00001111000")).value, Q(k * k));
  // ones = k, item k unselected, j of the first k-1 items selected.
  for (std::uint64_t idx = 0; idx < (1u << n); ++idx) {
    const BitString x = BitString::FromIndex(n, idx);
    if (x.ones() != k || x[k - 1]) continue;
    int j = 0;
    for (int i = 0; i < k - 1; ++i) j += x[i];
    EXPECT_EQ(EvalF(inst, x).value, Q(k * k - k * j + j)) << x.ToString();
  }
}

TEST(WorstCaseTest, MidKOptimumIsUniqueAndBeatsEveryOtherFeasibleString) {
  const Instance inst(BuildTrapMidK(9, 3, 2));
  for (std::uint64_t idx = 0; idx < (1u << 9); ++idx) {
    const BitString x = BitString::FromIndex(9, idx);
    if (x.ones() > 3) continue;
    if (x.ToString() == "111000000") {
      EXPECT_TRUE(IsOptimal(inst, x));
    } else {
      EXPECT_LT(EvalF(inst, x), inst.optimum_value());
    }
  }
}

TEST(WorstCaseTest, MidKLocalOptimaSitBetweenEverythingElseAndTheOptimum) {
  for (auto [n, k] : {std::pair{14, 3}, std::pair{12, 5}}) {
    const Instance inst(BuildTrapMidK(n, k, 2));
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
      const BitString x = BitString::FromIndex(n, idx);
      if (x.ones() > k) continue;
      bool prefix_empty = true;
      bool prefix_full = true;
      for (int i = 0; i < k; ++i) {
        prefix_empty = prefix_empty && !x[i];
        prefix_full = prefix_full && x[i];
      }
      const Rational f = EvalF(inst, x).value;
      if (x.ones() == k && prefix_full) {
        EXPECT_EQ(f, Ratio(2 * k * k + 1, 2));
      } else if (x.ones() == k && prefix_empty) {
        EXPECT_EQ(f, k * k);
      } else {
        EXPECT_LT(f, k * k) << x.ToString();
      }
    }
  }
}

TEST(WorstCaseTest, HighKValues) {
  const int n = 10;
  const int k = 6;
  const Instance inst(BuildTrapHighK(n, k));
  EXPECT_EQ(inst.optimum_value().value, Q(n + k - 1));
  EXPECT_EQ(EvalF(inst, S("1111110000")).value, Q(n + k - 1));
  EXPECT_EQ(EvalF(inst, S("1111101000")).value, Q(k));
  EXPECT_EQ(EvalF(inst, S("1010100000")).value, Q(3));
}

TEST(WorstCaseTest, BuilderPreconditions) {
  EXPECT_THROW(BuildTrapMidK(8, 4, 2), PreconditionError);
  EXPECT_THROW(BuildTrapMidK(9, 3, 1), PreconditionError);
  EXPECT_THROW(BuildTrapHighK(10, 4), PreconditionError);
}

TEST(FamilyTest, NamesRoundTrip) {
  for (Family f : {Family::kOneMax, Family::kBinVal, Family::kLinear, Family::kWorstCase,
                   Family::kPlateau, Family::kTrapK1, Family::kTrapMidK,
                   Family::kTrapHighK}) {
    EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  }
  EXPECT_THROW(ParseFamily("nope"), PreconditionError);
}

}  // namespace
}  // namespace robustea
