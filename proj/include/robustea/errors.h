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

#ifndef ROBUSTEA_ERRORS_H_
#define ROBUSTEA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace robustea {

// A documented precondition of an operation was violated (bad n, k, d, m,
// length mismatch, malformed input).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A distance function was evaluated outside the set of solutions it is
// defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The instance has no known optimum, so a run cannot stop on it.
class CensoredModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Brute-force enumeration would exceed its documented cap.
class EnumerationCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// The absorbing set cannot be reached from some transient state.
class SingularChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void Require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace robustea

#endif  // ROBUSTEA_ERRORS_H_
