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

#ifndef ROBUSTEA_EXPERIMENTS_H_
#define ROBUSTEA_EXPERIMENTS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robustea/ea.h"
#include "robustea/problems.h"

namespace robustea {

// Summary of a batch of runs. Censored runs enter the statistics with their
// budget count, so the mean is then only a lower bound of the true mean.
struct TrialStats {
  std::uint64_t cell_id = 0;
  int trials = 0;
  int censored = 0;
  double mean = 0;
  double median = 0;
  double stddev = 0;          // sample standard deviation (n-1)
  double standard_error = 0;  // stddev / sqrt(trials)
  double q05 = 0;             // linear-interpolation quantiles
  double q95 = 0;
  bool mean_is_lower_bound = false;
  // Set when a wall-clock guard stopped the cell early; trials then counts
  // the completed prefix of trial indices.
  bool time_limited = false;

  // Normal-approximation 95% interval mean +- 1.96 se.
  double ci95_low() const { return mean - 1.96 * standard_error; }
  double ci95_high() const { return mean + 1.96 * standard_error; }
};

TrialStats Summarize(std::uint64_t cell_id, const std::vector<std::uint64_t>& evaluations,
                     const std::vector<bool>& censored);

struct TrialOptions {
  std::uint64_t max_evaluations = kDefaultMaxEvaluations;
  int workers = 1;
  std::uint64_t cell_id = 0;
  // Stop claiming new trials after this many seconds; 0 disables the guard.
  double time_limit_seconds = 0;
};

// `trials` independent (1+1)-EA runs; trial i uses
// DeriveSeed(master_seed, cell_id, i). The result does not depend on the
// number of workers.
TrialStats RunTrials(const Instance& inst, int trials, std::uint64_t master_seed,
                     const TrialOptions& options = {});

// Same for the accept-all walk with threshold d.
TrialStats RunAcceptAllTrials(int n, int d, int trials, std::uint64_t master_seed,
                              const TrialOptions& options = {});

// Grid of builder parameters. A cell is one combination of the grid values;
// grids left empty are unset. d can instead come from d_rule, k from k_rule.
struct SweepSpec {
  enum class DRule { kNone, kSqrtN, kHalfNPlusR };
  enum class KRule { kNone, kTwoD, kDPlusOne, kHalfN };

  Family family = Family::kOneMax;
  std::vector<int> n;
  std::vector<int> k;
  std::vector<int> d;
  std::vector<int> r;
  std::vector<int> m;
  DRule d_rule = DRule::kNone;
  KRule k_rule = KRule::kNone;
  int trials = 1;
  std::uint64_t master_seed = 0;
  std::uint64_t max_evaluations = kDefaultMaxEvaluations;
  double cell_time_limit_seconds = 0;
};

// JSON form:
//   {"family": "onemax", "n": [64, 128], "d_rule": "sqrt_n", "k_rule": "two_d",
//    "trials": 500, "master_seed": 7, "max_evaluations": 1000000000}
// with optional "k", "d", "r", "m" grids, d_rule in {sqrt_n, half_n_plus_r},
// k_rule in {two_d, d_plus_1, half_n} and "cell_time_limit_seconds".
SweepSpec ParseSweepSpec(std::string_view json_text);
SweepSpec LoadSweepSpec(const std::string& path);

struct SweepCell {
  std::uint64_t id = 0;  // position in grid order
  Family family = Family::kOneMax;
  int n = 0;
  std::optional<int> k;
  std::optional<int> d;
  std::optional<int> r;
  std::optional<int> m;
};

struct SweepRow {
  SweepCell cell;
  std::uint64_t max_evaluations = 0;
  TrialStats stats;
};

struct SkippedCell {
  SweepCell cell;
  std::string reason;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SkippedCell> skipped;
};

// Cells in grid order (n outermost, then k, d, r, m).
std::vector<SweepCell> ExpandSweep(const SweepSpec& spec);

SweepResult Sweep(const SweepSpec& spec, int workers = 1);

// family,n,k,d,r,m,trials,censored,mean,median,stddev,stderr,q05,q95,max_evals
std::string SweepCsv(const SweepResult& result);
// One JSON object per line with the same fields; skipped cells carry
// "skipped": true and the reason.
std::string SweepJsonLines(const SweepResult& result);

enum class ScalingModel {
  kNLogN,        // a n ln n
  kPower,        // a n^b
  kExponential,  // a e^{c g(n)}
  kBinomial,     // a C(n, k)
};

struct ScalingPoint {
  int n = 0;
  double mean = 0;
  bool censored = false;
  int k = 0;  // kBinomial only
};

struct ScalingFit {
  ScalingModel model = ScalingModel::kNLogN;
  double a = 0;
  // Exponent b (kPower) or rate c (kExponential); 0 otherwise.
  double exponent = 0;
  // Coefficient of determination of the fit to ln(mean).
  double r_squared = 0;
  int cells = 0;
};

struct ScalingOptions {
  // g for kExponential; g(n) = n when empty.
  std::function<double(int)> g;
  // Admit censored points as lower bounds.
  bool allow_lower_bounds = false;
};

// Least squares on the log-transformed model. Requires at least 3 points
// with positive means, not all at the same n and not all with the same mean.
ScalingFit FitScaling(const std::vector<ScalingPoint>& points, ScalingModel model,
                      const ScalingOptions& options = {});

// Threshold offsets r = floor(coefficient * sqrt(n)) and
// r = floor(coefficient * sqrt(n ln n)).
int SqrtOffset(int n, double coefficient = 1.0);
int SqrtNLogNOffset(int n, double coefficient = 3.0);

// One side of a regime comparison: threshold d = floor(n/2) + r.
struct RegimeSpec {
  enum class Process { kAcceptAll, kDeletionOneMax };
  enum class Method { kExactChain, kSimulation };

  Process process = Process::kAcceptAll;
  Method method = Method::kExactChain;
  int n = 0;
  int r = 0;
  int k = 0;  // kDeletionOneMax only
  int trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t max_evaluations = kDefaultMaxEvaluations;
  int workers = 1;
};

struct RegimeOutcome {
  int d = 0;
  // Expected evaluations (exact) or mean evaluations (simulation); +inf when
  // the target set is empty.
  double evaluations = 0;
  bool reachable = true;
  bool lower_bound = false;  // simulation with censored runs
};

struct RegimeComparison {
  RegimeOutcome small;
  RegimeOutcome large;
  // large.evaluations / small.evaluations; NaN when both are infinite.
  double ratio = 0;
};

RegimeComparison CompareRegimes(const RegimeSpec& small_r, const RegimeSpec& large_r);

}  // namespace robustea

#endif  // ROBUSTEA_EXPERIMENTS_H_
