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

#include "robustea/verification.h"

#include <algorithm>
#include <bit>
#include <cstdarg>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <utility>

#include "robustea/bitstring.h"
#include "robustea/drift.h"
#include "robustea/errors.h"
#include "robustea/experiments.h"
#include "robustea/oracle.h"
#include "robustea/problems.h"

namespace robustea {
namespace {

constexpr std::uint64_t kSuiteSeed = 20260401;

std::string Format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string Format(const char* fmt, ...) {
  char buf[1024];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

double Binomial(int n, int k) {
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n - k + 1.0)));
}

// p/q with 1 <= q <= 8 and p/q in [1, 8].
std::vector<Weight> RandomRationalWeights(int n, Rng& rng) {
  std::vector<Weight> w;
  for (int i = 0; i < n; ++i) {
    const auto q = static_cast<long>(1 + rng.UniformBelow(8));
    const auto p = q + static_cast<long>(rng.UniformBelow(static_cast<std::uint64_t>(7 * q + 1)));
    w.emplace_back(Ratio(p, q));
  }
  return w;
}

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome ObjectiveCorrectness(const VerifyOptions& o) {
  const int max_n = o.quick ? 10 : 14;
  const int vectors = o.quick ? 5 : 20;
  Rng rng(DeriveSeed(kSuiteSeed, 1, 0));
  std::uint64_t checked = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int v = 0; v < vectors; ++v) {
      const std::vector<Weight> weights = RandomRationalWeights(n, rng);
      for (int d = 0; d <= std::min(4, n - 1); ++d) {
        // F does not depend on k, so one brute-force pass serves every k.
        std::vector<DeletionRobustInstance> by_k;
        for (int k = d + 1; k <= n; ++k) by_k.push_back(BuildLinear(weights, k, d));
        for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
          const BitString x = BitString::FromIndex(n, idx);
          const FitnessValue expected = BruteForceF(by_k.front(), x);
          for (const auto& inst : by_k) {
            const FitnessValue got = EvalFDeletion(inst, x);
            ++checked;
            if (got != expected) {
              return {false, Format("mismatch at n=%d k=%d d=%d x=%s: closed form %s, brute "
                                    "force %s",
                                    n, inst.k(), d, x.ToString().c_str(),
                                    got.ToString().c_str(), expected.ToString().c_str())};
            }
          }
        }
      }
    }
  }
  return {true, Format("%llu (x, k, d, w) combinations agree for n <= %d",
                       static_cast<unsigned long long>(checked), max_n)};
}

Outcome ChainSimulationAgreement(const VerifyOptions& o) {
  const int runs = o.quick ? 2000 : 10000;
  const ChainSolution lumped = LumpedChainEfht(ChainKind::kDeletionOneMax, 30, 20, 5);
  TrialOptions topt;
  topt.workers = o.workers;
  const TrialStats stats =
      RunTrials(Instance(BuildOneMax(30, 20, 5)), runs, DeriveSeed(kSuiteSeed, 2, 0), topt);
  const double expected = static_cast<double>(lumped.mean_evaluations);
  const double z = std::abs(stats.mean - expected) / stats.standard_error;
  bool passed = z <= 3 && stats.censored == 0;

  const int max_n = o.quick ? 7 : 10;
  long double worst = 0;
  int pairs = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int d = 0; d < k; ++d) {
        const ChainSolution full = FullChainEfht(Instance(BuildOneMax(n, k, d)));
        const ChainSolution lump = LumpedChainEfht(ChainKind::kDeletionOneMax, n, k, d);
        auto rel = [](long double a, long double b) {
          return a == b ? 0.0L : std::abs(a - b) / std::max(std::abs(a), std::abs(b));
        };
        worst = std::max(worst, rel(full.mean_evaluations, lump.mean_evaluations));
        for (std::uint64_t idx = 0; idx < full.efht.size(); ++idx) {
          const int ones = std::popcount(idx);
          worst = std::max(worst, rel(full.efht[idx], lump.efht[static_cast<std::size_t>(ones)]));
        }
        ++pairs;
      }
    }
  }
  passed = passed && worst <= 1e-9L;
  return {passed, Format("n=30 k=20 d=5: chain %.4f, simulated %.4f +- %.4f (z=%.2f, %d runs); "
                         "lumped vs full over %d (n,k,d) with n <= %d: max rel diff %.3Le",
                         expected, stats.mean, stats.standard_error, z, runs, pairs, max_n,
                         worst)};
}

Outcome NLogNRegime(const VerifyOptions& o) {
  SweepSpec spec;
  spec.family = Family::kOneMax;
  spec.n = o.quick ? std::vector<int>{32, 64, 128} : std::vector<int>{64, 128, 256, 512};
  spec.d_rule = SweepSpec::DRule::kSqrtN;
  spec.k_rule = SweepSpec::KRule::kTwoD;
  spec.trials = o.quick ? 100 : 500;
  spec.master_seed = DeriveSeed(kSuiteSeed, 3, 0);
  const SweepResult result = Sweep(spec, o.workers);
  if (!result.skipped.empty()) {
    return {false, "sweep skipped a cell: " + result.skipped.front().reason};
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0;
  std::string cells;
  bool censored = false;
  for (const auto& row : result.rows) {
    const double n = row.cell.n;
    const double ratio = row.stats.mean / (n * std::log(n));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    censored = censored || row.stats.censored > 0;
    cells += Format(" n=%d:%.3f", row.cell.n, ratio);
  }
  const double spread = hi / lo;
  // The same ratio from the exact one-count chain, for reference.
  double chain_lo = std::numeric_limits<double>::infinity();
  double chain_hi = 0;
  for (const auto& row : result.rows) {
    const double n = row.cell.n;
    const ChainSolution sol =
        LumpedChainEfht(ChainKind::kDeletionOneMax, row.cell.n, *row.cell.k, *row.cell.d);
    const double ratio = static_cast<double>(sol.mean_evaluations) / (n * std::log(n));
    chain_lo = std::min(chain_lo, ratio);
    chain_hi = std::max(chain_hi, ratio);
  }
  return {spread <= 2 && !censored,
          Format("mean/(n ln n):%s; max/min %.3f (<= 2); exact chain max/min %.4f", cells.c_str(),
                 spread, chain_hi / chain_lo)};
}

Outcome ThresholdBlowUp(const VerifyOptions&) {
  auto compare = [](int n) {
    RegimeSpec small;
    small.process = RegimeSpec::Process::kAcceptAll;
    small.method = RegimeSpec::Method::kExactChain;
    small.n = n;
    small.r = SqrtOffset(n);
    RegimeSpec large = small;
    large.r = SqrtNLogNOffset(n);
    return CompareRegimes(small, large);
  };
  const RegimeComparison at100 = compare(100);
  const RegimeComparison at200 = compare(200);
  const bool big_enough = at100.ratio >= 10;
  const bool increases = at200.ratio > at100.ratio;
  std::string detail = Format(
      "n=100: d=%d EFHT %.6g, d=%d EFHT %.6g%s, ratio %.6g (>= 10: %s); n=200: d=%d EFHT "
      "%.6g, d=%d EFHT %.6g, ratio %.6g; increases: %s",
      at100.small.d, at100.small.evaluations, at100.large.d, at100.large.evaluations,
      at100.large.reachable ? "" : " (d >= n, target empty)", at100.ratio,
      big_enough ? "yes" : "no", at200.small.d, at200.small.evaluations, at200.large.d,
      at200.large.evaluations, at200.ratio, increases ? "yes" : "no");
  return {big_enough && increases, detail};
}

Outcome PlateauLowerBound(const VerifyOptions& o) {
  const int trials = o.quick ? 60 : 200;
  TrialOptions topt;
  topt.workers = o.workers;
  const TrialStats stats = RunTrials(Instance(BuildPlateau(16, 7)), trials,
                                     DeriveSeed(kSuiteSeed, 5, 0), topt);
  const double threshold = Binomial(16, 8) / 8;
  const ChainSolution full = FullChainEfht(Instance(BuildPlateau(10, 4)));
  const double exact = static_cast<double>(full.mean_evaluations);
  const double exact_threshold = Binomial(10, 5) / 4;
  return {stats.mean >= threshold && exact >= exact_threshold,
          Format("n=16 d=7: mean %.2f over %d runs (>= %.2f, %d censored); n=10 d=4 exact "
                 "chain %.4f (>= %.2f)",
                 stats.mean, trials, threshold, stats.censored, exact, exact_threshold)};
}

Outcome QuadraticLowerBound(const VerifyOptions& o) {
  const std::vector<int> sizes =
      o.quick ? std::vector<int>{16, 32, 64} : std::vector<int>{32, 64, 128};
  const int trials = o.quick ? 100 : 300;
  bool passed = true;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0;
  std::string cells;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const int n = sizes[i];
    TrialOptions topt;
    topt.workers = o.workers;
    topt.cell_id = i;
    const TrialStats stats =
        RunTrials(Instance(BuildTrapK1(n, 2)), trials, DeriveSeed(kSuiteSeed, 6, 0), topt);
    const double bound = (n / 4.0) * (n / 4.0);
    passed = passed && stats.mean >= bound;
    const double ratio = stats.mean / (static_cast<double>(n) * n);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    cells += Format(" n=%d: mean %.1f (>= %.1f), mean/n^2 %.4f;", n, stats.mean, bound, ratio);
  }
  passed = passed && hi / lo <= 3;
  return {passed, Format("%s band max/min %.3f (<= 3)", cells.c_str(), hi / lo)};
}

Outcome HighKPlateau(const VerifyOptions& o) {
  const int trials = o.quick ? 40 : 100;
  TrialOptions topt;
  topt.workers = o.workers;
  const TrialStats stats = RunTrials(Instance(BuildTrapHighK(14, 7)), trials,
                                     DeriveSeed(kSuiteSeed, 7, 0), topt);
  const double threshold = Binomial(14, 7) / 8;
  return {stats.mean >= threshold,
          Format("n=14 k=7: mean %.2f over %d runs (>= %.2f, %d censored)", stats.mean, trials,
                 threshold, stats.censored)};
}

Outcome DriftSuite(const VerifyOptions& o) {
  const std::uint64_t samples = o.quick ? 10000 : 100000;
  const double e = std::numbers::e;
  std::string detail;
  bool passed = true;
  auto record = [&](const char* label, const BoundReport& report) {
    int failing = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& m : report.states) {
      if (!m.pass) ++failing;
      if (!m.absorbed && m.drift.standard_error > 0) {
        worst = std::min(worst, m.margin / m.drift.standard_error);
      }
    }
    passed = passed && report.all_pass;
    detail += Format("%s: %zu states, %d failing, min margin/se %.2f; ", label,
                     report.states.size(), failing, worst);
  };

  {
    const DistanceFunction dist = DistanceFunction::OneMaxPhase2(BuildOneMax(50, 30, 10));
    Rng rng(DeriveSeed(kSuiteSeed, 8, 0));
    std::vector<BitString> states;
    for (int ones = 11; ones < 30; ++ones) states.push_back(RandomStringWithOnes(50, ones, rng));
    record("onemax_phase2",
           CheckBound(dist, states, {DriftBound::Kind::kMultiplicative, 1 / (e * 50)}, samples,
                      DeriveSeed(kSuiteSeed, 8, 1)));
  }
  {
    const DistanceFunction dist = DistanceFunction::ThresholdPiecewise(100, 5);
    Rng rng(DeriveSeed(kSuiteSeed, 8, 2));
    std::vector<BitString> states;
    for (int j = 0; j <= dist.d(); ++j) states.push_back(RandomStringWithOnes(100, j, rng));
    record("lemma1_piecewise",
           CheckBound(dist, states, {DriftBound::Kind::kAdditive, 1.0 / (100 * 100)}, samples,
                      DeriveSeed(kSuiteSeed, 8, 3)));
  }
  {
    const std::vector<Rational> w = {9, 7, 7, 5, 4, 3, Ratio(5, 2), 2, Ratio(3, 2), 1};
    const DistanceFunction dist =
        DistanceFunction::GeneralDeletion(BuildLinear(ToWeights(w), 4, 1));
    std::vector<BitString> states;
    for (std::uint64_t idx = 0; idx < 1024; ++idx) {
      const int ones = std::popcount(idx);
      if (ones >= 2 && ones <= 4) states.push_back(BitString::FromIndex(10, idx));
    }
    const double c = 1 / (e * std::pow(10.0, 4));
    record("general_deletion",
           CheckBound(dist, states, {DriftBound::Kind::kMultiplicative, c}, samples,
                      DeriveSeed(kSuiteSeed, 8, 4)));
  }
  const LadderCheck ladder = CheckThresholdLadder(100, 5);
  const bool ladder_ok =
      ladder.differences_match && ladder.ratios_match && ladder.final_step_dominates;
  passed = passed && ladder_ok;
  detail += Format("ladder identities at n=100 r=5: %s (%llu samples/state)",
                   ladder_ok ? "exact" : "violated", static_cast<unsigned long long>(samples));
  return {passed, detail};
}

Outcome OptimumCrossCheck(const VerifyOptions& o) {
  const int max_n = o.quick ? 8 : 12;
  int checked = 0;
  std::string failure;
  auto check = [&](const Instance& inst, const std::string& label) {
    ++checked;
    const FitnessValue brute = BruteForceOptimum(inst);
    if (failure.empty() && brute != inst.optimum_value()) {
      failure = label + ": stored " + inst.optimum_value().ToString() + ", brute force " +
                brute.ToString();
    }
  };
  Rng rng(DeriveSeed(kSuiteSeed, 9, 0));
  for (int n = 1; n <= max_n; ++n) {
    const std::string sn = "n=" + std::to_string(n);
    const std::vector<Weight> weights = RandomRationalWeights(n, rng);
    for (int k = 1; k <= n; ++k) {
      for (int d = 0; d < k; ++d) {
        const std::string p = sn + " k=" + std::to_string(k) + " d=" + std::to_string(d);
        check(Instance(BuildOneMax(n, k, d)), "onemax " + p);
        check(Instance(BuildBinVal(n, k, d)), "binval " + p);
        check(Instance(BuildLinear(weights, k, d)), "linear " + p);
      }
    }
    for (int d = 0; d + 1 <= n; ++d) {
      check(Instance(BuildPlateau(n, d)), "thm8 " + sn + " d=" + std::to_string(d));
    }
    if (n >= 2) {
      for (int m = 1; m <= 3; ++m) {
        check(Instance(BuildTrapK1(n, m)), "thm10_k1 " + sn + " m=" + std::to_string(m));
      }
    }
    for (int k = 2; 2 * k < n; ++k) {
      for (int m = 2; m <= 3; ++m) {
        check(Instance(BuildTrapMidK(n, k, m)),
              "thm10_midk " + sn + " k=" + std::to_string(k) + " m=" + std::to_string(m));
      }
    }
    for (int k = (n + 1) / 2; k <= n; ++k) {
      if (k < 1) continue;
      check(Instance(BuildTrapHighK(n, k)), "thm10_highk " + sn + " k=" + std::to_string(k));
    }
  }
  if (!failure.empty()) return {false, failure};
  return {true, Format("%d instances over every builder family with n <= %d", checked, max_n)};
}

Outcome SweepDeterminism(const VerifyOptions& o) {
  SweepSpec spec;
  spec.family = Family::kOneMax;
  spec.n = {16, 24, 32, 48};
  spec.d_rule = SweepSpec::DRule::kSqrtN;
  spec.k_rule = SweepSpec::KRule::kTwoD;
  spec.trials = o.quick ? 20 : 50;
  spec.master_seed = DeriveSeed(kSuiteSeed, 10, 0);
  const std::string one = SweepCsv(Sweep(spec, 1));
  const std::string eight = SweepCsv(Sweep(spec, 8));
  return {one == eight, Format("%zu-byte CSV at workers 1 and 8: %s", one.size(),
                               one == eight ? "identical" : "different")};
}

struct Criterion {
  const char* name;
  Outcome (*run)(const VerifyOptions&);
};

constexpr Criterion kCriteria[kCriterionCount] = {
    {"objective correctness", ObjectiveCorrectness},
    {"chain/simulation agreement", ChainSimulationAgreement},
    {"n log n regime", NLogNRegime},
    {"threshold blow-up", ThresholdBlowUp},
    {"plateau lower bound", PlateauLowerBound},
    {"k=1 quadratic lower bound", QuadraticLowerBound},
    {"high-k plateau", HighKPlateau},
    {"drift suite", DriftSuite},
    {"optimum cross-check", OptimumCrossCheck},
    {"sweep determinism", SweepDeterminism},
};

}  // namespace

CriterionResult RunCriterion(int id, const VerifyOptions& options) {
  Require(id >= 1 && id <= kCriterionCount,
          "criterion id must be in 1.." + std::to_string(kCriterionCount));
  const Criterion& c = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.name = c.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome = c.run(options);
    result.passed = outcome.passed;
    result.detail = std::move(outcome.detail);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("error: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> RunAcceptanceSuite(const VerifyOptions& options) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) results.push_back(RunCriterion(id, options));
  return results;
}

std::string FormatCriterion(const CriterionResult& r) {
  return Format("%s [%d] %s: %s (%.1fs)", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
}

}  // namespace robustea
