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

#ifndef ROBUSTEA_EA_H_
#define ROBUSTEA_EA_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "robustea/bitstring.h"
#include "robustea/problems.h"

namespace robustea {

inline constexpr std::uint64_t kDefaultMaxEvaluations = 1'000'000'000;

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_evaluations = kDefaultMaxEvaluations;
  bool stop_on_optimum = true;
  bool record_trajectory = false;
};

struct TrajectoryPoint {
  std::uint64_t evaluation = 0;
  int ones = 0;
  // Fitness of the maintained solution; empty for the accept-all walk.
  std::optional<FitnessValue> fitness;
};

struct RunResult {
  // 1 for the initial solution plus one per iteration.
  std::uint64_t evaluations = 0;
  // False means the run was censored at max_evaluations.
  bool hit_optimum = false;
  BitString final_solution{1};
  // Log-spaced checkpoints (ratio 1.1) plus the final state.
  std::vector<TrajectoryPoint> trajectory;
};

// The (1+1)-EA from a uniformly random solution: mutate bit-wise, keep the
// offspring when its fitness is >= the parent's. Stops at the first optimal
// solution when cfg.stop_on_optimum, otherwise after max_evaluations.
// Throws CensoredModeError if stopping on an unknown optimum is requested.
RunResult Run(const Instance& inst, const RunConfig& cfg);

// The same loop with every offspring accepted, stopped once the solution has
// more than d ones. hit_optimum reports whether that happened.
RunResult RunAcceptAll(int n, int d, const RunConfig& cfg);

}  // namespace robustea

#endif  // ROBUSTEA_EA_H_
