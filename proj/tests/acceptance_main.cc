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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   robustea_acceptance [--quick] [--only ID ...]

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <vector>

#include "robustea/verification.h"

int main(int argc, char** argv) {
  robustea::VerifyOptions options;
  std::vector<int> ids;
  bool collecting = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      options.quick = true;
      collecting = false;
    } else if (std::strcmp(argv[i], "--only") == 0) {
      collecting = true;
    } else if (collecting) {
      const int id = std::atoi(argv[i]);
      if (id < 1 || id > robustea::kCriterionCount) {
        std::cerr << "unknown criterion '" << argv[i] << "'\n";
        return 1;
      }
      ids.push_back(id);
    } else {
      std::cerr << "usage: robustea_acceptance [--quick] [--only ID ...]\n";
      return 1;
    }
  }
  if (ids.empty()) {
    for (int id = 1; id <= robustea::kCriterionCount; ++id) ids.push_back(id);
  }
  bool all = true;
  for (int id : ids) {
    const robustea::CriterionResult r = robustea::RunCriterion(id, options);
    std::cout << robustea::FormatCriterion(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 2;
}
