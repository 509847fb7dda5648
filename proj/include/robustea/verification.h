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

#ifndef ROBUSTEA_VERIFICATION_H_
#define ROBUSTEA_VERIFICATION_H_

#include <string>
#include <vector>

namespace robustea {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  // Measured quantities, one line.
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  // Reduced problem sizes and sample counts for a fast smoke run.
  bool quick = false;
  int workers = 1;
};

inline constexpr int kCriterionCount = 10;

// Runs criterion `id` (1 .. kCriterionCount).
CriterionResult RunCriterion(int id, const VerifyOptions& options);
std::vector<CriterionResult> RunAcceptanceSuite(const VerifyOptions& options);

// "PASS [3] name: detail (1.2s)".
std::string FormatCriterion(const CriterionResult& result);

}  // namespace robustea

#endif  // ROBUSTEA_VERIFICATION_H_
