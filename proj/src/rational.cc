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

#include "robustea/rational.h"

#include <cctype>

#include "robustea/errors.h"

namespace robustea {
namespace {

bool IsInteger(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  Require(IsInteger(num), "malformed rational '" + std::string(text) + "'");
  Rational value;
  if (slash == std::string_view::npos) {
    value = Rational(BigInt(std::string(num)), 1);
  } else {
    const std::string_view den = text.substr(slash + 1);
    Require(IsInteger(den) && den.front() != '-',
            "malformed rational '" + std::string(text) + "'");
    BigInt d(std::string{den});
    Require(d != 0, "zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(num)), d);
  }
  value.canonicalize();
  return value;
}

std::string FormatRational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational Ratio(long num, long den) {
  Require(den != 0, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational Pow(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

long double ToLongDouble(const Rational& value) {
  // mpq_get_d truncates to double; refine with one long-double correction.
  const double approx = value.get_d();
  Rational rest = value - Rational(approx);
  return static_cast<long double>(approx) + static_cast<long double>(rest.get_d());
}

}  // namespace robustea
