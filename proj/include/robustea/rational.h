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

#ifndef ROBUSTEA_RATIONAL_H_
#define ROBUSTEA_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace robustea {

// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "-p" or "p/q" with decimal integers and q > 0.
Rational ParseRational(std::string_view text);

// Integers print as plain integers, everything else as "p/q".
std::string FormatRational(const Rational& value);

// num/den in lowest terms; den != 0.
Rational Ratio(long num, long den);

Rational Pow(const Rational& base, unsigned exponent);

long double ToLongDouble(const Rational& value);

inline std::strong_ordering Compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

}  // namespace robustea

#endif  // ROBUSTEA_RATIONAL_H_
