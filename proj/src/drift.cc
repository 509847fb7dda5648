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

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <type_traits>
#include <utility>

#include "robustea/errors.h"

namespace robustea {
namespace {

constexpr std::array<std::pair<DistanceFamily, std::string_view>, 6> kNames = {{
    {DistanceFamily::kThresholdPiecewise, "lemma1_piecewise"},
    {DistanceFamily::kThresholdLinear, "lemma1_linear"},
    {DistanceFamily::kOneMaxPhase2, "onemax_phase2"},
    {DistanceFamily::kBinValPhase2a, "binval_phase2a"},
    {DistanceFamily::kBinValPhase2b, "binval_phase2b"},
    {DistanceFamily::kGeneralDeletion, "general_deletion"},
}};

// Position (0-based) of the (count)-th selected item, or -1.
int NthOne(const BitString& x, int count) {
  int seen = 0;
  int found = -1;
  x.ForEachOne([&](int i) {
    if (++seen == count) {
      found = i;
      return false;
    }
    return true;
  });
  return found;
}

int LeadingOnes(const BitString& x) {
  int i = 0;
  while (i < x.size() && x[i]) ++i;
  return i;
}

Rational SumRange(const std::vector<Rational>& w, int from, int to) {
  Rational total = 0;
  for (int i = from; i < to; ++i) total += w[static_cast<std::size_t>(i)];
  return total;
}

class Welford {
 public:
  void Add(double v) {
    ++count_;
    const double delta = v - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (v - mean_);
  }
  DriftEstimate Result() const {
    DriftEstimate e;
    e.samples = count_;
    e.mean = mean_;
    if (count_ > 1) {
      e.standard_error = std::sqrt(m2_ / static_cast<double>(count_ - 1)) /
                         std::sqrt(static_cast<double>(count_));
    }
    return e;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

template <typename Score>
DriftEstimate EstimateEaDrift(const DistanceFunction& dist, const BitString& x,
                              std::uint64_t samples, Rng& rng) {
  const DeletionRobustInstance& inst = *dist.instance();
  const ScaledEvaluator& eval = inst.scaled();
  const Score fx = eval.Fitness<Score>(x);
  const long double denominator = ToLongDouble(Rational(eval.denominator()));
  const Rational vx = dist.Eval(x);
  Welford acc;
  for (std::uint64_t s = 0; s < samples; ++s) {
    BitString y = Mutate(x, rng);
    const Score fy = eval.Fitness<Score>(y);
    if (fy < fx) {
      acc.Add(0.0);
      continue;
    }
    if (dist.family() == DistanceFamily::kGeneralDeletion) {
      // V differs from -F by a constant, and both x and y are feasible here.
      Score gain = fy - fx;
      long double g;
      if constexpr (std::is_same_v<Score, std::int64_t>) {
        g = static_cast<long double>(gain);
      } else {
        g = ToLongDouble(Rational(gain));
      }
      acc.Add(static_cast<double>(g / denominator));
    } else {
      acc.Add(static_cast<double>(ToLongDouble(vx - dist.Eval(y))));
    }
  }
  return acc.Result();
}

}  // namespace

std::string_view DistanceFamilyName(DistanceFamily family) {
  for (const auto& [f, name] : kNames) {
    if (f == family) return name;
  }
  return "unknown";
}

DistanceFamily ParseDistanceFamily(std::string_view name) {
  for (const auto& [f, n] : kNames) {
    if (n == name) return f;
  }
  throw PreconditionError("unknown distance family '" + std::string(name) + "'");
}

DistanceFunction DistanceFunction::ThresholdPiecewise(int n, int r) {
  Require(n >= 2 && n % 2 == 0, "lemma1_piecewise requires an even n");
  Require(r >= 1, "lemma1_piecewise requires r >= 1");
  const int d = n / 2 + r;
  Require(d < n, "lemma1_piecewise requires d = n/2 + r < n");
  DistanceFunction f(DistanceFamily::kThresholdPiecewise, n, -1, d, r);
  const Rational growth = 1 + Ratio(20 * r, n);
  const Rational top = (1 + 20 * r) * Pow(growth, static_cast<unsigned>(r));
  const Rational flat_step = Ratio(20 * r, n + 20 * r);
  f.by_ones_.resize(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Rational v;
    if (2 * j < n) {
      v = top + Ratio(n - 2 * j, 2) * flat_step;
    } else if (j <= d) {
      v = top - Pow(growth, static_cast<unsigned>(j - n / 2)) + 1;
    } else {
      v = 0;
    }
    f.by_ones_[static_cast<std::size_t>(j)] = v;
  }
  return f;
}

DistanceFunction DistanceFunction::ThresholdLinear(int n, int d) {
  Require(n >= 1 && d >= 0 && d < n, "lemma1_linear requires 0 <= d < n");
  DistanceFunction f(DistanceFamily::kThresholdLinear, n, -1, d, -1);
  f.by_ones_.resize(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    f.by_ones_[static_cast<std::size_t>(j)] = j <= d ? Rational(d + 1 - j) : Rational(0);
  }
  return f;
}

DistanceFunction DistanceFunction::OneMaxPhase2(const DeletionRobustInstance& inst) {
  Require(inst.family() == Family::kOneMax, "onemax_phase2 needs a onemax instance");
  DistanceFunction f(DistanceFamily::kOneMaxPhase2, inst.n(), inst.k(), inst.d(), -1);
  f.instance_ = inst;
  f.by_ones_.resize(static_cast<std::size_t>(inst.n()) + 1);
  for (int j = 0; j <= inst.n(); ++j) {
    f.by_ones_[static_cast<std::size_t>(j)] = Rational(std::max(inst.k() - j, 0));
  }
  return f;
}

DistanceFunction DistanceFunction::BinValPhase2a(const DeletionRobustInstance& inst) {
  Require(inst.family() == Family::kBinVal, "binval_phase2a needs a binval instance");
  DistanceFunction f(DistanceFamily::kBinValPhase2a, inst.n(), inst.k(), inst.d(), -1);
  f.instance_ = inst;
  return f;
}

DistanceFunction DistanceFunction::BinValPhase2b(const DeletionRobustInstance& inst) {
  Require(inst.family() == Family::kBinVal, "binval_phase2b needs a binval instance");
  DistanceFunction f(DistanceFamily::kBinValPhase2b, inst.n(), inst.k(), inst.d(), -1);
  f.instance_ = inst;
  return f;
}

DistanceFunction DistanceFunction::GeneralDeletion(const DeletionRobustInstance& inst) {
  DistanceFunction f(DistanceFamily::kGeneralDeletion, inst.n(), inst.k(), inst.d(), -1);
  f.instance_ = inst;
  return f;
}

bool DistanceFunction::depends_on_ones_only() const { return !by_ones_.empty(); }

bool DistanceFunction::InDomain(const BitString& x) const {
  if (x.size() != n_) return false;
  switch (family_) {
    case DistanceFamily::kThresholdPiecewise:
    case DistanceFamily::kThresholdLinear:
      return true;
    case DistanceFamily::kOneMaxPhase2:
    case DistanceFamily::kGeneralDeletion:
      return x.ones() <= k_;
    case DistanceFamily::kBinValPhase2a:
      return x.ones() > d_ && x.ones() <= k_;
    case DistanceFamily::kBinValPhase2b:
      return x.ones() <= k_ && LeadingOnes(x) > d_;
  }
  return false;
}

Rational DistanceFunction::Eval(const BitString& x) const {
  if (!InDomain(x)) {
    throw DomainError(std::string(DistanceFamilyName(family_)) + ": " + x.ToString() +
                      " is outside the domain of the distance function");
  }
  if (depends_on_ones_only()) return by_ones_[static_cast<std::size_t>(x.ones())];
  switch (family_) {
    case DistanceFamily::kBinValPhase2a:
      // The (d+1)-th selected item sits at 0-based position d + j.
      return Rational(NthOne(x, d_ + 1) - d_);
    case DistanceFamily::kBinValPhase2b:
      return Rational(k_ - LeadingOnes(x));
    case DistanceFamily::kGeneralDeletion:
      return SumRange(instance_->objective().weights(), d_, k_) -
             EvalFDeletion(*instance_, x).value;
    default:
      break;
  }
  throw std::logic_error("unhandled distance family");
}

Rational DistanceFunction::MinPositive() const {
  if (depends_on_ones_only()) {
    std::optional<Rational> best;
    for (const auto& v : by_ones_) {
      if (v > 0 && (!best || v < *best)) best = v;
    }
    return best.value_or(Rational(0));
  }
  if (family_ != DistanceFamily::kGeneralDeletion) return Rational(1);
  const auto& w = instance_->objective().weights();
  if (n_ > 20) {
    const Rational delta = MinWeightGap(w);
    return 1 / (1 / w.back() + 1 / delta);
  }
  std::optional<Rational> best;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n_); ++idx) {
    if (std::popcount(idx) > k_) continue;
    const Rational v = Eval(BitString::FromIndex(n_, idx));
    if (v > 0 && (!best || v < *best)) best = v;
  }
  return best.value_or(Rational(0));
}

Rational DistanceFunction::LadderV(int j) const {
  Require(family_ == DistanceFamily::kThresholdPiecewise, "ladder needs lemma1_piecewise");
  Require(j >= 0 && j <= n_, "ladder index out of range");
  return by_ones_[static_cast<std::size_t>(j)];
}

Rational DistanceFunction::LadderD(int j) const {
  Require(family_ == DistanceFamily::kThresholdPiecewise, "ladder needs lemma1_piecewise");
  Require(j >= 1 && j <= d_ + 1, "ladder step index out of range");
  if (2 * j <= n_) return Ratio(20 * r_, n_ + 20 * r_);
  const Rational growth = 1 + Ratio(20 * r_, n_);
  return Pow(growth, static_cast<unsigned>(j - 1 - n_ / 2)) * Ratio(20 * r_, n_);
}

DriftEstimate EstimateDrift(const DistanceFunction& dist, const BitString& x,
                            std::uint64_t samples, Rng& rng) {
  Require(samples >= 1, "EstimateDrift: samples must be at least 1");
  const Rational vx = dist.Eval(x);
  if (vx == 0) return DriftEstimate{0, 0, samples};
  if (dist.accept_all_step()) {
    // V only depends on the one-count, so tabulate it once.
    std::vector<double> decrease(static_cast<std::size_t>(x.size()) + 1);
    BitString probe(x.size());
    for (int j = 0; j <= x.size(); ++j) {
      probe = BitString::LeadingOnes(x.size(), j);
      decrease[static_cast<std::size_t>(j)] =
          static_cast<double>(ToLongDouble(vx - dist.Eval(probe)));
    }
    Welford acc;
    for (std::uint64_t s = 0; s < samples; ++s) {
      acc.Add(decrease[static_cast<std::size_t>(Mutate(x, rng).ones())]);
    }
    return acc.Result();
  }
  if (dist.instance()->scaled().fits_int64()) {
    return EstimateEaDrift<std::int64_t>(dist, x, samples, rng);
  }
  return EstimateEaDrift<BigInt>(dist, x, samples, rng);
}

BoundReport CheckBound(const DistanceFunction& dist, const std::vector<BitString>& states,
                       DriftBound bound, std::uint64_t samples, std::uint64_t seed) {
  Require(!states.empty(), "CheckBound: states must be non-empty");
  Require(bound.c > 0, "CheckBound: c must be positive");
  BoundReport report;
  report.family = std::string(DistanceFamilyName(dist.family()));
  report.bound = bound;
  const Rational v_min = dist.MinPositive();
  report.v_min = static_cast<double>(ToLongDouble(v_min));
  for (std::size_t i = 0; i < states.size(); ++i) {
    const BitString& x = states[i];
    StateMargin m;
    m.state = x.ToString();
    m.ones = x.ones();
    const Rational v = dist.Eval(x);
    m.distance = static_cast<double>(ToLongDouble(v));
    m.absorbed = v == 0;
    Rng rng(DeriveSeed(seed, 0, i));
    m.drift = EstimateDrift(dist, x, samples, rng);
    if (!m.absorbed) {
      if (bound.kind == DriftBound::Kind::kAdditive) {
        m.required = bound.c;
        m.implied_runtime_bound = m.distance / bound.c;
      } else {
        m.required = bound.c * m.distance;
        m.implied_runtime_bound =
            (1 + std::log(static_cast<double>(ToLongDouble(v / v_min)))) / bound.c;
      }
    }
    m.margin = m.drift.mean - m.required;
    m.pass = m.absorbed || m.margin >= -3 * m.drift.standard_error;
    report.all_pass = report.all_pass && m.pass;
    report.max_implied_runtime_bound =
        std::max(report.max_implied_runtime_bound, m.implied_runtime_bound);
    report.states.push_back(std::move(m));
  }
  return report;
}

std::string BoundReportCsv(const BoundReport& report) {
  std::string out = "state,ones,distance,drift,stderr,required,margin,pass\n";
  char buf[256];
  for (const auto& m : report.states) {
    std::snprintf(buf, sizeof(buf), ",%d,%.10g,%.10g,%.10g,%.10g,%.10g,%d\n", m.ones,
                  m.distance, m.drift.mean, m.drift.standard_error, m.required, m.margin,
                  m.pass ? 1 : 0);
    out += m.state;
    out += buf;
  }
  return out;
}

LadderCheck CheckThresholdLadder(int n, int r) {
  const DistanceFunction f = DistanceFunction::ThresholdPiecewise(n, r);
  const int d = f.d();
  LadderCheck check{true, true, true};
  for (int j = 1; j <= d; ++j) {
    if (f.LadderD(j) != f.LadderV(j - 1) - f.LadderV(j)) check.differences_match = false;
  }
  const Rational growth = 1 + Ratio(20 * r, n);
  for (int j = 1; j <= d; ++j) {
    const Rational ratio = f.LadderD(j + 1) / f.LadderD(j);
    const Rational expected = 2 * j < n ? Rational(1) : growth;
    if (ratio != expected) check.ratios_match = false;
  }
  const Rational last = f.LadderV(d) - f.LadderV(d + 1);
  for (int j = 1; j <= d + 1; ++j) {
    if (last < n * f.LadderD(j)) check.final_step_dominates = false;
  }
  return check;
}

BitString RandomStringWithOnes(int n, int ones, Rng& rng) {
  Require(ones >= 0 && ones <= n, "RandomStringWithOnes: ones out of range");
  std::vector<int> positions(static_cast<std::size_t>(n));
  std::iota(positions.begin(), positions.end(), 0);
  BitString x(n);
  for (int i = 0; i < ones; ++i) {
    const auto pick = static_cast<std::size_t>(i) +
                      static_cast<std::size_t>(rng.UniformBelow(static_cast<std::uint64_t>(n - i)));
    std::swap(positions[static_cast<std::size_t>(i)], positions[pick]);
    x.Set(positions[static_cast<std::size_t>(i)], true);
  }
  return x;
}

}  // namespace robustea
