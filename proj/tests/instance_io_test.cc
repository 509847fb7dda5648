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

#include "robustea/instance_io.h"

#include <gtest/gtest.h>

#include "robustea/errors.h"

namespace robustea {
namespace {

TEST(InstanceIoTest, ParsesParametricFamily) {
  const Instance inst = ParseInstance(R"({"family": "onemax", "n": 8, "k": 5, "d": 2})");
  EXPECT_EQ(inst.family(), Family::kOneMax);
  EXPECT_EQ(inst.n(), 8);
  EXPECT_EQ(inst.optimum_value().value, 3);
}

TEST(InstanceIoTest, ParsesRationalWeightsInUserOrder) {
  const Instance inst = ParseInstance(
      R"({"family": "linear", "n": 3, "k": 2, "d": 1, "weights": [1, "5/2", 3]})");
  ASSERT_TRUE(inst.is_deletion());
  EXPECT_EQ(inst.deletion()->objective().UserWeights(),
            (std::vector<Rational>{1, Ratio(5, 2), 3}));
  EXPECT_EQ(inst.optimum_value().value, Ratio(5, 2));
}

TEST(InstanceIoTest, WorstCaseWithOptionalOptimum) {
  const Instance known = ParseInstance(
      R"({"family": "worstcase", "n": 2, "k": 1, "m": 2, "weights": [[1, 2], [2, 1]],
          "optimum": 1})");
  EXPECT_EQ(known.optimum_value().value, 1);
  const Instance unknown = ParseInstance(
      R"({"family": "worstcase", "n": 2, "k": 1, "weights": [[1, 2], [2, 1]]})");
  EXPECT_FALSE(unknown.has_optimum());
}

TEST(InstanceIoTest, RoundTrips) {
  const char* docs[] = {
      R"({"family": "binval", "n": 6, "k": 3, "d": 1})",
      R"({"family": "thm8", "n": 9, "d": 3})",
      R"({"family": "thm10_k1", "n": 7, "m": 3})",
      R"({"family": "thm10_midk", "n": 12, "k": 3, "m": 2})",
      R"({"family": "thm10_highk", "n": 10, "k": 6})",
      R"({"family": "linear", "n": 3, "k": 2, "d": 1, "weights": [1, "5/2", 3]})",
      R"({"family": "worstcase", "n": 2, "k": 1, "weights": [["3/2", 2], [2, 1]]})",
  };
  for (const char* doc : docs) {
    const Instance a = ParseInstance(doc);
    const std::string text = SerializeInstance(a);
    const Instance b = ParseInstance(text);
    EXPECT_EQ(SerializeInstance(b), text);
    EXPECT_EQ(a.family(), b.family());
    EXPECT_EQ(a.n(), b.n());
    EXPECT_EQ(a.k(), b.k());
    EXPECT_EQ(a.has_optimum(), b.has_optimum());
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << a.n()) && idx < 4096; ++idx) {
      const BitString x = BitString::FromIndex(a.n(), idx);
      EXPECT_EQ(Fitness(a, x), Fitness(b, x)) << doc;
    }
  }
}

TEST(InstanceIoTest, RejectsMalformedFiles) {
  EXPECT_THROW(ParseInstance("{"), PreconditionError);
  EXPECT_THROW(ParseInstance(R"({"n": 3})"), PreconditionError);
  EXPECT_THROW(ParseInstance(R"({"family": "onemax", "n": 3, "k": 2})"), PreconditionError);
  EXPECT_THROW(ParseInstance(R"({"family": "onemax", "n": 3, "k": 2, "d": 2})"),
               PreconditionError);
  EXPECT_THROW(ParseInstance(R"({"family": "linear", "n": 3, "k": 2, "d": 1,
                                 "weights": [1, 2]})"),
               PreconditionError);
  EXPECT_THROW(ParseInstance(R"({"family": "linear", "n": 2, "k": 2, "d": 1,
                                 "weights": [1, "1/2"]})"),
               PreconditionError);
  EXPECT_THROW(ParseInstance(R"({"family": "onemax", "n": 8, "k": 5, "d": 2,
                                 "optimum": 4})"),
               PreconditionError);
  EXPECT_THROW(LoadInstance("/nonexistent/instance.json"), PreconditionError);
}

TEST(InstanceIoTest, BuildFromParamsDefaults) {
  const Instance k1 = BuildFromParams({Family::kTrapK1, 6, std::nullopt, std::nullopt,
                                       std::nullopt});
  EXPECT_EQ(k1.worst_case()->objectives().size(), 2u);
  EXPECT_THROW(BuildFromParams({Family::kPlateau, 6, 5, 2, std::nullopt}),
               PreconditionError);
  EXPECT_THROW(BuildFromParams({Family::kLinear, 6, 3, 1, std::nullopt}), PreconditionError);
}

}  // namespace
}  // namespace robustea
