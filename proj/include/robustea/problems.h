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

#ifndef ROBUSTEA_PROBLEMS_H_
#define ROBUSTEA_PROBLEMS_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "robustea/bitstring.h"
#include "robustea/rational.h"

namespace robustea {

enum class Family {
  kOneMax,
  kBinVal,
  kLinear,
  kWorstCase,
  kPlateau,
  kTrapK1,
  kTrapMidK,
  kTrapHighK,
};

// Names used in instance files and on the command line: onemax, binval,
// linear, worstcase, thm8, thm10_k1, thm10_midk, thm10_highk.
std::string_view FamilyName(Family family);
Family ParseFamily(std::string_view name);
bool IsDeletionFamily(Family family);

// A weight of a linear function; always >= 1.
class Weight {
 public:
  explicit Weight(Rational value);
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

// Exact objective or fitness value. Negative values only arise from the
// constraint-violation branch of the fitness.
struct FitnessValue {
  Rational value;

  friend std::strong_ordering operator<=>(const FitnessValue& a,
                                          const FitnessValue& b) {
    return Compare(a.value, b.value);
  }
  friend bool operator==(const FitnessValue& a, const FitnessValue& b) {
    return a.value == b.value;
  }
  std::string ToString() const { return FormatRational(value); }
};

// Weights sorted non-increasingly. original_order()[i] is the user index of
// the weight stored at sorted index i (0-based); ties keep user order.
class LinearObjective {
 public:
  explicit LinearObjective(std::vector<Weight> user_weights);

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<int>& original_order() const { return original_order_; }
  std::vector<Rational> UserWeights() const;
  bool uniform() const { return weights_.front() == weights_.back(); }

 private:
  std::vector<Rational> weights_;
  std::vector<int> original_order_;
};

// Minimum difference between two different weights, or 1 if all are equal.
Rational MinWeightGap(std::span<const Rational> weights);

// Fitness arithmetic on integers: every weight is multiplied by the common
// denominator of all weights of the instance, so values compare exactly.
// Score is either std::int64_t (used when every reachable value fits in 62
// bits) or BigInt.
class ScaledEvaluator {
 public:
  enum class Kind { kDeletion, kWorstCase };

  ScaledEvaluator(Kind kind, int n, int k, int d,
                  const std::vector<std::vector<Rational>>& rows);

  bool fits_int64() const { return fits_int64_; }
  const BigInt& denominator() const { return denominator_; }

  template <typename Score>
  Score F(const BitString& x) const;
  template <typename Score>
  Score Fitness(const BitString& x) const;

  // Exact value*denominator if it is an integer.
  std::optional<BigInt> Scale(const Rational& value) const;
  Rational Unscale(const BigInt& score) const;
  Rational Unscale(std::int64_t score) const;

 private:
  template <typename Score>
  const std::vector<std::vector<Score>>& rows() const;

  Kind kind_;
  int n_;
  int k_;
  int d_;
  BigInt denominator_;
  bool fits_int64_ = false;
  bool uniform_ = false;
  std::vector<std::vector<BigInt>> big_rows_;
  std::vector<std::vector<std::int64_t>> small_rows_;
};

// Deletion-robust linear optimization: maximize F(x), the weighted sum left
// after an adversary deletes up to d selected items, subject to |x|_1 <= k.
// Bits are indexed in sorted-weight order.
class DeletionRobustInstance {
 public:
  DeletionRobustInstance(Family family, LinearObjective objective, int k, int d);

  Family family() const { return family_; }
  int n() const { return objective_.size(); }
  int k() const { return k_; }
  int d() const { return d_; }
  const LinearObjective& objective() const { return objective_; }
  const FitnessValue& optimum_value() const { return optimum_; }
  const ScaledEvaluator& scaled() const { return *scaled_; }

 private:
  Family family_;
  LinearObjective objective_;
  int k_;
  int d_;
  FitnessValue optimum_;
  std::shared_ptr<const ScaledEvaluator> scaled_;
};

// Worst-case linear optimization: maximize the minimum of m linear functions
// subject to |x|_1 <= k. Weights carry no order requirement.
class WorstCaseInstance {
 public:
  WorstCaseInstance(Family family, std::vector<std::vector<Weight>> objectives,
                    int k, std::optional<Rational> optimum);

  Family family() const { return family_; }
  int n() const { return static_cast<int>(objectives_.front().size()); }
  int m() const { return static_cast<int>(objectives_.size()); }
  int k() const { return k_; }
  const std::vector<std::vector<Rational>>& objectives() const {
    return objectives_;
  }
  const std::optional<FitnessValue>& optimum_value() const { return optimum_; }
  const ScaledEvaluator& scaled() const { return *scaled_; }

 private:
  Family family_;
  std::vector<std::vector<Rational>> objectives_;
  int k_;
  std::optional<FitnessValue> optimum_;
  std::shared_ptr<const ScaledEvaluator> scaled_;
};

// Either kind of robust problem. Immutable; cheap to copy.
class Instance {
 public:
  Instance(DeletionRobustInstance inst);  // NOLINT(runtime/explicit)
  Instance(WorstCaseInstance inst);       // NOLINT(runtime/explicit)

  Family family() const;
  int n() const;
  int k() const;
  bool is_deletion() const { return std::holds_alternative<DeletionRobustInstance>(data_); }
  const DeletionRobustInstance* deletion() const {
    return std::get_if<DeletionRobustInstance>(&data_);
  }
  const WorstCaseInstance* worst_case() const {
    return std::get_if<WorstCaseInstance>(&data_);
  }

  bool has_optimum() const;
  // Throws CensoredModeError when unknown.
  FitnessValue optimum_value() const;

  const ScaledEvaluator& scaled() const;

 private:
  std::variant<DeletionRobustInstance, WorstCaseInstance> data_;
};

FitnessValue EvalFDeletion(const DeletionRobustInstance& inst, const BitString& x);
FitnessValue EvalFWorst(const WorstCaseInstance& inst, const BitString& x);
FitnessValue EvalF(const Instance& inst, const BitString& x);

// k - |x|_1 when |x|_1 > k, F(x) otherwise.
FitnessValue Fitness(const Instance& inst, const BitString& x);

// |x|_1 <= k and F(x) equals the optimum. Throws CensoredModeError for a
// worst-case instance without a known optimum.
bool IsOptimal(const Instance& inst, const BitString& x);

DeletionRobustInstance BuildOneMax(int n, int k, int d);
DeletionRobustInstance BuildBinVal(int n, int k, int d);
DeletionRobustInstance BuildLinear(std::vector<Weight> weights, int k, int d);
// k = d+1, weights 2 on the first k items and 1 elsewhere; optimum 2 is only
// reached by 1^k 0^(n-k), every other k-subset scores 1.
DeletionRobustInstance BuildPlateau(int n, int d);

WorstCaseInstance BuildWorst(std::vector<std::vector<Weight>> weights, int k,
                             std::optional<Rational> optimum = std::nullopt);
// k = 1 and m copies of (2, 1, ..., 1).
WorstCaseInstance BuildTrapK1(int n, int m);
// 2 <= k < n/2, m >= 2. Global optimum 1^k 0^(n-k) with value k^2 + 1/2 and
// local optima {|x|_1 = k, x_1..x_k = 0} with value k^2.
WorstCaseInstance BuildTrapMidK(int n, int k, int m);
// k >= n/2, m = k functions, function s weighs item s by n and the rest by 1.
WorstCaseInstance BuildTrapHighK(int n, int k);

std::vector<Weight> ToWeights(const std::vector<Rational>& values);

}  // namespace robustea

#endif  // ROBUSTEA_PROBLEMS_H_
