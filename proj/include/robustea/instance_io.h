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

#ifndef ROBUSTEA_INSTANCE_IO_H_
#define ROBUSTEA_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "robustea/problems.h"

namespace robustea {

// Builder parameters for every family. Unused fields stay empty.
struct InstanceParams {
  Family family = Family::kOneMax;
  int n = 0;
  std::optional<int> k;
  std::optional<int> d;
  std::optional<int> m;
};

// Dispatches to the Build* function of params.family. linear and worstcase
// need explicit weights and are rejected here.
Instance BuildFromParams(const InstanceParams& params);

// Instance files are JSON objects:
//
//   {"family": "onemax", "n": 8, "k": 5, "d": 2}
//   {"family": "thm10_midk", "n": 12, "k": 3, "m": 2}
//   {"family": "linear", "n": 3, "k": 2, "d": 1, "weights": [1, "5/2", 3]}
//   {"family": "worstcase", "n": 2, "k": 1, "m": 2,
//    "weights": [[1, 2], [2, 1]], "optimum": 1}
//
// Rationals are JSON integers or strings "p/q". Deletion-robust weights are
// listed in user order; the instance stores them sorted. "optimum" is
// optional; for families with a closed-form optimum it must agree with it.
Instance ParseInstance(std::string_view json_text);
Instance LoadInstance(const std::string& path);

// Inverse of ParseInstance. Parametric families are written by parameters,
// linear/worstcase with their weights, rationals as "p/q" strings.
std::string SerializeInstance(const Instance& inst);

}  // namespace robustea

#endif  // ROBUSTEA_INSTANCE_IO_H_
