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

#ifndef ROBUSTEA_DRIFT_H_
#define ROBUSTEA_DRIFT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robustea/bitstring.h"
#include "robustea/problems.h"

namespace robustea {

enum class DistanceFamily {
  kThresholdPiecewise,  // accept-all walk, d = n/2 + r
  kThresholdLinear,     // accept-all walk, V = d + 1 - |x|_1 below the threshold
  kOneMaxPhase2,     // V = k - |x|_1
  kBinValPhase2a,    // items before the (d+1)-th selected item left unselected
  kBinValPhase2b,    // k minus the length of the leading run of ones
  kGeneralDeletion,  // V = sum_{i=d+1}^{k} w_i - F(x)
};

// lemma1_piecewise, lemma1_linear, onemax_phase2, binval_phase2a,
// binval_phase2b, general_deletion.
std::string_view DistanceFamilyName(DistanceFamily family);
DistanceFamily ParseDistanceFamily(std::string_view name);

// A distance V to a target set together with the one-step process it is
// measured under: the accept-all walk for the two threshold families, the
// (1+1)-EA on the attached instance otherwise. V is exact.
class DistanceFunction {
 public:
  // Requires n even, r >= 1 and d = n/2 + r < n.
  static DistanceFunction ThresholdPiecewise(int n, int r);
  static DistanceFunction ThresholdLinear(int n, int d);
  // Require an instance of the matching family (onemax / binval).
  static DistanceFunction OneMaxPhase2(const DeletionRobustInstance& inst);
  static DistanceFunction BinValPhase2a(const DeletionRobustInstance& inst);
  static DistanceFunction BinValPhase2b(const DeletionRobustInstance& inst);
  static DistanceFunction GeneralDeletion(const DeletionRobustInstance& inst);

  DistanceFamily family() const { return family_; }
  int n() const { return n_; }
  int d() const { return d_; }
  int k() const { return k_; }
  int r() const { return r_; }
  bool accept_all_step() const {
    return family_ == DistanceFamily::kThresholdPiecewise ||
           family_ == DistanceFamily::kThresholdLinear;
  }
  const std::optional<DeletionRobustInstance>& instance() const { return instance_; }

  bool InDomain(const BitString& x) const;
  // Throws DomainError outside the domain.
  Rational Eval(const BitString& x) const;

  // Smallest positive value V can take on its domain. Exhaustive for
  // general_deletion with n <= 20, otherwise the bound 1/(1/w_n + 1/delta).
  Rational MinPositive() const;

  // Piecewise ladder of the accept-all analysis (lemma1_piecewise only):
  // V_j for 0 <= j <= n and D_j for 1 <= j <= d+1.
  Rational LadderV(int j) const;
  Rational LadderD(int j) const;

 private:
  DistanceFunction(DistanceFamily family, int n, int k, int d, int r)
      : family_(family), n_(n), k_(k), d_(d), r_(r) {}

  // Values by one-count for the families that only depend on |x|_1.
  bool depends_on_ones_only() const;

  DistanceFamily family_;
  int n_;
  int k_;
  int d_;
  int r_;
  std::optional<DeletionRobustInstance> instance_;
  std::vector<Rational> by_ones_;
};

struct DriftEstimate {
  double mean = 0;
  double standard_error = 0;
  std::uint64_t samples = 0;
};

// Monte Carlo estimate of E[V(x) - V(x')] for one step of the family's
// process from x. Zero-distance states report drift 0 without stepping.
DriftEstimate EstimateDrift(const DistanceFunction& dist, const BitString& x,
                            std::uint64_t samples, Rng& rng);

struct DriftBound {
  enum class Kind { kAdditive, kMultiplicative };
  Kind kind = Kind::kAdditive;
  double c = 0;
};

struct StateMargin {
  std::string state;
  int ones = 0;
  double distance = 0;
  DriftEstimate drift;
  double required = 0;  // c, or c * V(x)
  double margin = 0;    // drift.mean - required
  bool absorbed = false;
  bool pass = false;    // margin >= -3 * standard_error, or absorbed
  // V(x)/c (additive) or (1 + ln(V(x)/V_min))/c (multiplicative).
  double implied_runtime_bound = 0;
};

struct BoundReport {
  std::string family;
  DriftBound bound;
  double v_min = 0;
  std::vector<StateMargin> states;
  bool all_pass = true;
  double max_implied_runtime_bound = 0;
};

// Checks the drift condition of an additive or multiplicative drift theorem at
// each given state. States are estimated in order with seeds derived from
// `seed` and the state index.
BoundReport CheckBound(const DistanceFunction& dist, const std::vector<BitString>& states,
                       DriftBound bound, std::uint64_t samples, std::uint64_t seed);

// "state,ones,distance,drift,stderr,required,margin,pass" CSV table.
std::string BoundReportCsv(const BoundReport& report);

struct LadderCheck {
  bool differences_match = false;  // D_j = V_{j-1} - V_j for 1 <= j <= d
  bool ratios_match = false;       // D_{j+1}/D_j = 1 or 1 + 20r/n
  bool final_step_dominates = false;  // V_d - V_{d+1} >= n D_j, 1 <= j <= d+1
};

// Exact check of the piecewise ladder identities.
LadderCheck CheckThresholdLadder(int n, int r);

// A uniformly random string of length n with exactly `ones` ones.
BitString RandomStringWithOnes(int n, int ones, Rng& rng);

}  // namespace robustea

#endif  // ROBUSTEA_DRIFT_H_
