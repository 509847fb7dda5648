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

#ifndef ROBUSTEA_ORACLE_H_
#define ROBUSTEA_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robustea/bitstring.h"
#include "robustea/problems.h"

namespace robustea {

// Limits of the brute-force objective: at most this many deletion subsets
// per solution, and at most kBruteForceMaxOnes selected items.
inline constexpr std::uint64_t kBruteForceSubsetCap = std::uint64_t{1} << 24;
inline constexpr int kBruteForceMaxOnes = 24;
inline constexpr int kBruteForceOptimumMaxN = 20;
inline constexpr int kLumpedChainMaxN = 2000;
inline constexpr int kFullChainMaxN = 12;
inline constexpr int kExactLumpedMaxN = 64;
inline constexpr int kExactFullMaxN = 6;
// Componentwise backward error every float-mode solve must meet.
inline constexpr long double kMaxBackwardError = 1e-9L;

// min over z subset of x with |z|_1 <= d of sum_i w_i (x_i - z_i), by
// enumerating every deletion subset. Throws EnumerationCapError past the cap.
FitnessValue BruteForceF(const DeletionRobustInstance& inst, const BitString& x);

// Maximum of F over every x with |x|_1 <= k. Deletion-robust F values come
// from BruteForceF, worst-case ones from the definition. Requires n <= 20.
FitnessValue BruteForceOptimum(const Instance& inst);

enum class ChainKind { kDeletionOneMax, kAcceptAllWalk };
enum class Precision { kLongDouble, kExact };

struct InitialDistribution {
  static InitialDistribution Uniform() { return {}; }
  static InitialDistribution Point(int ones) { return {ones}; }
  // Empty means uniform over {0,1}^n.
  std::optional<int> point;
};

struct ChainSolution {
  // Human-readable description of the state index set.
  std::string states;
  // Expected first hitting time (iterations) per state; 0 on absorbing states.
  std::vector<long double> efht;
  // Same values as exact rationals when solved with Precision::kExact.
  std::optional<std::vector<Rational>> exact_efht;
  // 1 + sum over states of pi_0(state) * efht(state).
  long double mean_evaluations = 0;
  std::optional<Rational> exact_mean_evaluations;
  // max_i |r_i| / (t_i + 1 + sum_j Q_ij t_j) for the residual r of
  // (I - Q) t = 1; 0 in exact mode.
  long double backward_error = 0;
};

// P(Y - X = i) for i = -j .. n-j (index i + j), X ~ B(j, 1/n), Y ~ B(n-j, 1/n):
// the change of the one-count under bit-wise mutation of a string with j ones.
std::vector<long double> OneCountStepDistribution(int n, int j);
std::vector<Rational> OneCountStepDistributionExact(int n, int j);

// Full (n+1)x(n+1) transition matrix of the one-count chain, absorbing
// states included as self-loops. Row-major.
std::vector<long double> LumpedTransitionMatrix(ChainKind kind, int n, int k, int d);

// Exact EFHT on the one-count chain. For kDeletionOneMax the acceptance rule
// is that of the (1+1)-EA on deletion-robust OneMax and the target is
// {j = k}; for kAcceptAllWalk every offspring is accepted and the target is
// {j > d} (k is ignored). Throws SingularChainError when the target is not
// reachable from every state.
ChainSolution LumpedChainEfht(ChainKind kind, int n, int k, int d,
                              InitialDistribution init = InitialDistribution::Uniform(),
                              Precision precision = Precision::kLongDouble);

// Exact EFHT of the (1+1)-EA on the full state space {0,1}^n (state index =
// BitString::ToIndex), target = optimal solutions, uniform initial
// distribution. Requires n <= 12 (n <= 6 in exact mode).
ChainSolution FullChainEfht(const Instance& inst,
                            Precision precision = Precision::kLongDouble);

// Transition probabilities of the full chain from state `from` (all 2^n
// targets, rejected offspring folded into the self-loop). For tests.
std::vector<long double> FullChainTransitionRow(const Instance& inst,
                                                std::uint64_t from);

// "state,efht" CSV table.
std::string ChainSolutionCsv(const ChainSolution& solution);

}  // namespace robustea

#endif  // ROBUSTEA_ORACLE_H_
