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

#include "robustea/ea.h"

#include "robustea/errors.h"

namespace robustea {
namespace {

class Checkpoints {
 public:
  explicit Checkpoints(bool enabled) : enabled_(enabled) {}

  bool Due(std::uint64_t evaluation) const { return enabled_ && evaluation >= next_; }
  void Advance(std::uint64_t evaluation) {
    next_ = std::max(evaluation + 1, evaluation + evaluation / 10);
  }

 private:
  bool enabled_;
  std::uint64_t next_ = 1;
};

void CheckConfig(const RunConfig& cfg) {
  Require(cfg.max_evaluations >= 1, "max_evaluations must be at least 1");
}

template <typename Score>
RunResult RunWithScore(const Instance& inst, const RunConfig& cfg) {
  const ScaledEvaluator& eval = inst.scaled();
  const int k = inst.k();
  std::optional<Score> target;
  bool can_hit = false;
  if (inst.has_optimum()) {
    if (auto scaled = eval.Scale(inst.optimum_value().value)) {
      can_hit = true;
      if constexpr (std::is_same_v<Score, std::int64_t>) {
        target = scaled->get_si();
      } else {
        target = *scaled;
      }
    }
  }

  Rng rng(cfg.seed);
  RunResult result;
  BitString x = SampleUniform(inst.n(), rng);
  Score fx = eval.Fitness<Score>(x);
  std::uint64_t evaluations = 1;
  Checkpoints checkpoints(cfg.record_trajectory);
  auto record = [&] {
    result.trajectory.push_back({evaluations, x.ones(), FitnessValue{eval.Unscale(fx)}});
  };
  auto optimal = [&] { return can_hit && x.ones() <= k && fx == *target; };

  bool hit = cfg.stop_on_optimum && optimal();
  if (checkpoints.Due(evaluations)) {
    record();
    checkpoints.Advance(evaluations);
  }
  while (!hit && evaluations < cfg.max_evaluations) {
    BitString y = Mutate(x, rng);
    Score fy = eval.Fitness<Score>(y);
    ++evaluations;
    if (fy >= fx) {
      x = std::move(y);
      fx = std::move(fy);
    }
    if (checkpoints.Due(evaluations)) {
      record();
      checkpoints.Advance(evaluations);
    }
    hit = cfg.stop_on_optimum && optimal();
  }
  if (cfg.record_trajectory &&
      (result.trajectory.empty() || result.trajectory.back().evaluation != evaluations)) {
    record();
  }
  result.evaluations = evaluations;
  result.hit_optimum = hit || (!cfg.stop_on_optimum && optimal());
  result.final_solution = std::move(x);
  return result;
}

}  // namespace

RunResult Run(const Instance& inst, const RunConfig& cfg) {
  CheckConfig(cfg);
  if (cfg.stop_on_optimum && !inst.has_optimum()) {
    throw CensoredModeError(
        "stop_on_optimum requested but the instance has no known optimum");
  }
  if (inst.scaled().fits_int64()) return RunWithScore<std::int64_t>(inst, cfg);
  return RunWithScore<BigInt>(inst, cfg);
}

RunResult RunAcceptAll(int n, int d, const RunConfig& cfg) {
  CheckConfig(cfg);
  Require(n >= 1, "n must be at least 1");
  Require(d >= 0 && d < n, "accept-all walk requires 0 <= d < n");
  Rng rng(cfg.seed);
  RunResult result;
  BitString x = SampleUniform(n, rng);
  std::uint64_t evaluations = 1;
  Checkpoints checkpoints(cfg.record_trajectory);
  auto record = [&] { result.trajectory.push_back({evaluations, x.ones(), std::nullopt}); };
  if (checkpoints.Due(evaluations)) {
    record();
    checkpoints.Advance(evaluations);
  }
  while (x.ones() <= d && evaluations < cfg.max_evaluations) {
    x = Mutate(x, rng);
    ++evaluations;
    if (checkpoints.Due(evaluations)) {
      record();
      checkpoints.Advance(evaluations);
    }
  }
  if (cfg.record_trajectory && result.trajectory.back().evaluation != evaluations) {
    record();
  }
  result.evaluations = evaluations;
  result.hit_optimum = x.ones() > d;
  result.final_solution = std::move(x);
  return result;
}

}  // namespace robustea
