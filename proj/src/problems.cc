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

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <utility>

#include "robustea/errors.h"

namespace robustea {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames = {{
    {Family::kOneMax, "onemax"},
    {Family::kBinVal, "binval"},
    {Family::kLinear, "linear"},
    {Family::kWorstCase, "worstcase"},
    {Family::kPlateau, "thm8"},
    {Family::kTrapK1, "thm10_k1"},
    {Family::kTrapMidK, "thm10_midk"},
    {Family::kTrapHighK, "thm10_highk"},
}};

// Largest magnitude allowed for the int64 fast path.
const BigInt kSmallLimit = BigInt(1) << 62;

std::vector<Rational> Values(const std::vector<Weight>& weights) {
  std::vector<Rational> out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(w.value());
  return out;
}

void CheckDeletionParams(int n, int k, int d) {
  Require(n >= 1, "n must be at least 1");
  Require(d >= 0, "d must be non-negative");
  Require(d < k, "d < k violated (d=" + std::to_string(d) +
                     ", k=" + std::to_string(k) + ")");
  Require(k <= n, "k <= n violated (k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
}

}  // namespace

std::string_view FamilyName(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family ParseFamily(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  throw PreconditionError("unknown family '" + std::string(name) + "'");
}

bool IsDeletionFamily(Family family) {
  return family == Family::kOneMax || family == Family::kBinVal ||
         family == Family::kLinear || family == Family::kPlateau;
}

Weight::Weight(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  Require(value_ >= 1, "weight " + FormatRational(value_) + " is below 1");
}

LinearObjective::LinearObjective(std::vector<Weight> user_weights) {
  Require(!user_weights.empty(), "a linear objective needs at least one weight");
  const int n = static_cast<int>(user_weights.size());
  original_order_.resize(static_cast<std::size_t>(n));
  std::iota(original_order_.begin(), original_order_.end(), 0);
  std::stable_sort(original_order_.begin(), original_order_.end(),
                   [&](int a, int b) {
                     return user_weights[a].value() > user_weights[b].value();
                   });
  weights_.reserve(static_cast<std::size_t>(n));
  for (int idx : original_order_) weights_.push_back(user_weights[idx].value());
}

std::vector<Rational> LinearObjective::UserWeights() const {
  std::vector<Rational> out(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    out[static_cast<std::size_t>(original_order_[i])] = weights_[i];
  }
  return out;
}

Rational MinWeightGap(std::span<const Rational> weights) {
  std::vector<Rational> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  std::optional<Rational> best;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) continue;
    Rational gap = sorted[i] - sorted[i - 1];
    if (!best || gap < *best) best = gap;
  }
  return best.value_or(Rational(1));
}

// ---------------------------------------------------------------------------
// ScaledEvaluator

ScaledEvaluator::ScaledEvaluator(Kind kind, int n, int k, int d,
                                 const std::vector<std::vector<Rational>>& rows)
    : kind_(kind), n_(n), k_(k), d_(d), denominator_(1) {
  for (const auto& row : rows) {
    Require(static_cast<int>(row.size()) == n, "weight row length differs from n");
    for (const auto& w : row) {
      mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(),
              w.get_den().get_mpz_t());
    }
  }
  BigInt magnitude = denominator_ * n;
  for (const auto& row : rows) {
    std::vector<BigInt> scaled;
    scaled.reserve(row.size());
    BigInt total = 0;
    for (const auto& w : row) {
      BigInt v = w.get_num() * (denominator_ / w.get_den());
      total += v;
      scaled.push_back(std::move(v));
    }
    if (total > magnitude) magnitude = total;
    big_rows_.push_back(std::move(scaled));
  }
  fits_int64_ = magnitude < kSmallLimit;
  if (fits_int64_) {
    for (const auto& row : big_rows_) {
      std::vector<std::int64_t> small;
      small.reserve(row.size());
      for (const auto& v : row) small.push_back(v.get_si());
      small_rows_.push_back(std::move(small));
    }
  }
  if (kind_ == Kind::kDeletion) {
    const auto& row = big_rows_.front();
    uniform_ = std::all_of(row.begin(), row.end(),
                           [&](const BigInt& v) { return v == row.front(); });
  }
}

template <>
const std::vector<std::vector<std::int64_t>>& ScaledEvaluator::rows<std::int64_t>() const {
  return small_rows_;
}

template <>
const std::vector<std::vector<BigInt>>& ScaledEvaluator::rows<BigInt>() const {
  return big_rows_;
}

template <typename Score>
Score ScaledEvaluator::F(const BitString& x) const {
  Require(x.size() == n_, "solution length " + std::to_string(x.size()) +
                              " differs from n=" + std::to_string(n_));
  const auto& all_rows = rows<Score>();
  if (kind_ == Kind::kDeletion) {
    const auto& w = all_rows.front();
    if (x.ones() <= d_) return Score(0);
    if (uniform_) return w.front() * Score(x.ones() - d_);
    // The d selected items with the smallest sorted index carry the largest
    // weights, so the adversary deletes exactly those.
    Score total(0);
    int skipped = 0;
    x.ForEachOne([&](int i) {
      if (skipped < d_) {
        ++skipped;
      } else {
        total += w[static_cast<std::size_t>(i)];
      }
      return true;
    });
    return total;
  }
  Score best(0);
  bool first = true;
  for (const auto& w : all_rows) {
    Score total(0);
    x.ForEachOne([&](int i) {
      total += w[static_cast<std::size_t>(i)];
      return true;
    });
    if (first || total < best) best = total;
    first = false;
  }
  return best;
}

template <typename Score>
Score ScaledEvaluator::Fitness(const BitString& x) const {
  if (x.ones() > k_) {
    Score violation(k_ - x.ones());
    if constexpr (std::is_same_v<Score, std::int64_t>) {
      return violation * denominator_.get_si();
    } else {
      return violation * denominator_;
    }
  }
  return F<Score>(x);
}

std::optional<BigInt> ScaledEvaluator::Scale(const Rational& value) const {
  Rational scaled = value * denominator_;
  if (scaled.get_den() != 1) return std::nullopt;
  return scaled.get_num();
}

Rational ScaledEvaluator::Unscale(const BigInt& score) const {
  Rational r(score, denominator_);
  r.canonicalize();
  return r;
}

Rational ScaledEvaluator::Unscale(std::int64_t score) const {
  return Unscale(BigInt(static_cast<long>(score)));
}

template std::int64_t ScaledEvaluator::F<std::int64_t>(const BitString&) const;
template BigInt ScaledEvaluator::F<BigInt>(const BitString&) const;
template std::int64_t ScaledEvaluator::Fitness<std::int64_t>(const BitString&) const;
template BigInt ScaledEvaluator::Fitness<BigInt>(const BitString&) const;

// ---------------------------------------------------------------------------
// Instances

DeletionRobustInstance::DeletionRobustInstance(Family family,
                                               LinearObjective objective, int k,
                                               int d)
    : family_(family), objective_(std::move(objective)), k_(k), d_(d) {
  Require(IsDeletionFamily(family), "family is not a deletion-robust family");
  CheckDeletionParams(objective_.size(), k, d);
  Rational optimum = 0;
  for (int i = d; i < k; ++i) optimum += objective_.weights()[static_cast<std::size_t>(i)];
  optimum_ = FitnessValue{optimum};
  scaled_ = std::make_shared<const ScaledEvaluator>(
      ScaledEvaluator::Kind::kDeletion, objective_.size(), k, d,
      std::vector<std::vector<Rational>>{objective_.weights()});
}

WorstCaseInstance::WorstCaseInstance(Family family,
                                     std::vector<std::vector<Weight>> objectives,
                                     int k, std::optional<Rational> optimum)
    : family_(family), k_(k) {
  Require(!IsDeletionFamily(family), "family is not a worst-case family");
  Require(!objectives.empty(), "m must be at least 1");
  const std::size_t n = objectives.front().size();
  Require(n >= 1, "n must be at least 1");
  for (const auto& row : objectives) {
    Require(row.size() == n, "all m functions must have n weights");
    objectives_.push_back(Values(row));
  }
  Require(k >= 0 && k <= static_cast<int>(n),
          "k <= n violated (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  if (optimum) optimum_ = FitnessValue{*optimum};
  scaled_ = std::make_shared<const ScaledEvaluator>(
      ScaledEvaluator::Kind::kWorstCase, static_cast<int>(n), k, -1, objectives_);
}

Instance::Instance(DeletionRobustInstance inst) : data_(std::move(inst)) {}
Instance::Instance(WorstCaseInstance inst) : data_(std::move(inst)) {}

Family Instance::family() const {
  return std::visit([](const auto& i) { return i.family(); }, data_);
}

int Instance::n() const {
  return std::visit([](const auto& i) { return i.n(); }, data_);
}

int Instance::k() const {
  return std::visit([](const auto& i) { return i.k(); }, data_);
}

bool Instance::has_optimum() const {
  if (const auto* wc = worst_case()) return wc->optimum_value().has_value();
  return true;
}

FitnessValue Instance::optimum_value() const {
  if (const auto* del = deletion()) return del->optimum_value();
  const auto& opt = worst_case()->optimum_value();
  if (!opt) {
    throw CensoredModeError(
        "worst-case instance has no known optimum; runs are censored-only");
  }
  return *opt;
}

const ScaledEvaluator& Instance::scaled() const {
  return std::visit(
      [](const auto& i) -> const ScaledEvaluator& { return i.scaled(); }, data_);
}

FitnessValue EvalFDeletion(const DeletionRobustInstance& inst, const BitString& x) {
  const auto& s = inst.scaled();
  return FitnessValue{s.Unscale(s.F<BigInt>(x))};
}

FitnessValue EvalFWorst(const WorstCaseInstance& inst, const BitString& x) {
  const auto& s = inst.scaled();
  return FitnessValue{s.Unscale(s.F<BigInt>(x))};
}

FitnessValue EvalF(const Instance& inst, const BitString& x) {
  const auto& s = inst.scaled();
  return FitnessValue{s.Unscale(s.F<BigInt>(x))};
}

FitnessValue Fitness(const Instance& inst, const BitString& x) {
  const auto& s = inst.scaled();
  return FitnessValue{s.Unscale(s.Fitness<BigInt>(x))};
}

bool IsOptimal(const Instance& inst, const BitString& x) {
  const FitnessValue optimum = inst.optimum_value();
  Require(x.size() == inst.n(), "solution length differs from n");
  return x.ones() <= inst.k() && EvalF(inst, x) == optimum;
}

std::vector<Weight> ToWeights(const std::vector<Rational>& values) {
  std::vector<Weight> out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(v);
  return out;
}

DeletionRobustInstance BuildOneMax(int n, int k, int d) {
  CheckDeletionParams(n, k, d);
  return DeletionRobustInstance(
      Family::kOneMax,
      LinearObjective(ToWeights(std::vector<Rational>(static_cast<std::size_t>(n), 1))),
      k, d);
}

DeletionRobustInstance BuildBinVal(int n, int k, int d) {
  CheckDeletionParams(n, k, d);
  std::vector<Rational> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    BigInt p = BigInt(1) << (n - i);
    w.emplace_back(p);
  }
  return DeletionRobustInstance(Family::kBinVal, LinearObjective(ToWeights(w)), k, d);
}

DeletionRobustInstance BuildLinear(std::vector<Weight> weights, int k, int d) {
  CheckDeletionParams(static_cast<int>(weights.size()), k, d);
  return DeletionRobustInstance(Family::kLinear, LinearObjective(std::move(weights)),
                                k, d);
}

DeletionRobustInstance BuildPlateau(int n, int d) {
  Require(n >= 1, "n must be at least 1");
  Require(d >= 0 && d < n, "thm8 requires 0 <= d < n");
  const int k = d + 1;
  std::vector<Rational> w(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = 2;
  return DeletionRobustInstance(Family::kPlateau, LinearObjective(ToWeights(w)),
                                k, d);
}

WorstCaseInstance BuildWorst(std::vector<std::vector<Weight>> weights, int k,
                             std::optional<Rational> optimum) {
  return WorstCaseInstance(Family::kWorstCase, std::move(weights), k,
                           std::move(optimum));
}

WorstCaseInstance BuildTrapK1(int n, int m) {
  Require(n >= 1, "n must be at least 1");
  Require(m >= 1, "m must be at least 1");
  std::vector<Rational> row(static_cast<std::size_t>(n), 1);
  row[0] = 2;
  std::vector<std::vector<Weight>> rows(static_cast<std::size_t>(m), ToWeights(row));
  return WorstCaseInstance(Family::kTrapK1, std::move(rows), 1, Rational(2));
}

WorstCaseInstance BuildTrapMidK(int n, int k, int m) {
  Require(k >= 2 && 2 * k < n, "thm10_midk requires 2 <= k < n/2");
  Require(m >= 2, "thm10_midk requires m >= 2");
  std::vector<Rational> common(static_cast<std::size_t>(n), k);
  std::vector<Rational> last(static_cast<std::size_t>(n), k);
  for (int i = 0; i < k - 1; ++i) {
    common[static_cast<std::size_t>(i)] = k + 1;
    last[static_cast<std::size_t>(i)] = 1;
  }
  common[static_cast<std::size_t>(k - 1)] = Ratio(3, 2);
  last[static_cast<std::size_t>(k - 1)] = k * k;
  std::vector<std::vector<Weight>> rows(static_cast<std::size_t>(m - 1),
                                        ToWeights(common));
  rows.push_back(ToWeights(last));
  return WorstCaseInstance(Family::kTrapMidK, std::move(rows), k,
                           Ratio(2 * k * k + 1, 2));
}

WorstCaseInstance BuildTrapHighK(int n, int k) {
  Require(k >= 1 && k <= n, "thm10_highk requires 1 <= k <= n");
  Require(2 * k >= n, "thm10_highk requires k >= n/2");
  std::vector<std::vector<Weight>> rows;
  rows.reserve(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) {
    std::vector<Rational> row(static_cast<std::size_t>(n), 1);
    row[static_cast<std::size_t>(s)] = n;
    rows.push_back(ToWeights(row));
  }
  return WorstCaseInstance(Family::kTrapHighK, std::move(rows), k,
                           Rational(n + k - 1));
}

}  // namespace robustea
