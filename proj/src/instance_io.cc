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

#include "robustea/instance_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "robustea/errors.h"

namespace robustea {
namespace {

using nlohmann::json;

Rational RationalFromJson(const json& j) {
  if (j.is_number_integer()) return Rational(BigInt(j.dump()), 1);
  if (j.is_string()) return ParseRational(j.get<std::string>());
  throw PreconditionError("rational must be an integer or a \"p/q\" string, got " +
                          j.dump());
}

json RationalToJson(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return FormatRational(r);
}

int IntField(const json& doc, const char* key) {
  Require(doc.contains(key), std::string("instance file: missing field '") + key + "'");
  Require(doc[key].is_number_integer(),
          std::string("instance file: field '") + key + "' must be an integer");
  return doc[key].get<int>();
}

std::optional<int> OptionalInt(const json& doc, const char* key) {
  if (!doc.contains(key)) return std::nullopt;
  return IntField(doc, key);
}

std::vector<Weight> WeightRow(const json& row, int n) {
  Require(row.is_array(), "instance file: weights must be an array");
  Require(static_cast<int>(row.size()) == n,
          "instance file: expected " + std::to_string(n) + " weights, got " +
              std::to_string(row.size()));
  std::vector<Weight> out;
  for (const auto& w : row) out.emplace_back(RationalFromJson(w));
  return out;
}

}  // namespace

Instance BuildFromParams(const InstanceParams& p) {
  auto need = [&](const std::optional<int>& v, const char* name) {
    Require(v.has_value(), std::string("family ") + std::string(FamilyName(p.family)) +
                               " requires " + name);
    return *v;
  };
  switch (p.family) {
    case Family::kOneMax:
      return BuildOneMax(p.n, need(p.k, "k"), need(p.d, "d"));
    case Family::kBinVal:
      return BuildBinVal(p.n, need(p.k, "k"), need(p.d, "d"));
    case Family::kPlateau: {
      const int d = need(p.d, "d");
      Require(!p.k || *p.k == d + 1, "thm8 requires k = d + 1");
      return BuildPlateau(p.n, d);
    }
    case Family::kTrapK1:
      Require(!p.k || *p.k == 1, "thm10_k1 requires k = 1");
      return BuildTrapK1(p.n, p.m.value_or(2));
    case Family::kTrapMidK:
      return BuildTrapMidK(p.n, need(p.k, "k"), need(p.m, "m"));
    case Family::kTrapHighK: {
      const int k = need(p.k, "k");
      Require(!p.m || *p.m == k, "thm10_highk requires m = k");
      return BuildTrapHighK(p.n, k);
    }
    case Family::kLinear:
    case Family::kWorstCase:
      break;
  }
  throw PreconditionError(std::string("family ") + std::string(FamilyName(p.family)) +
                          " needs explicit weights (use an instance file)");
}

Instance ParseInstance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("instance file: malformed JSON: ") + e.what());
  }
  Require(doc.is_object(), "instance file: top level must be an object");
  Require(doc.contains("family") && doc["family"].is_string(),
          "instance file: missing string field 'family'");
  const Family family = ParseFamily(doc["family"].get<std::string>());
  const int n = IntField(doc, "n");
  std::optional<Rational> optimum;
  if (doc.contains("optimum")) optimum = RationalFromJson(doc["optimum"]);

  std::optional<Instance> inst;
  if (family == Family::kLinear) {
    Require(doc.contains("weights"), "instance file: linear family needs 'weights'");
    inst.emplace(BuildLinear(WeightRow(doc["weights"], n), IntField(doc, "k"),
                             IntField(doc, "d")));
  } else if (family == Family::kWorstCase) {
    Require(doc.contains("weights") && doc["weights"].is_array(),
            "instance file: worstcase family needs a 'weights' matrix");
    std::vector<std::vector<Weight>> rows;
    for (const auto& row : doc["weights"]) rows.push_back(WeightRow(row, n));
    if (auto m = OptionalInt(doc, "m")) {
      Require(*m == static_cast<int>(rows.size()),
              "instance file: m disagrees with the number of weight rows");
    }
    return BuildWorst(std::move(rows), IntField(doc, "k"), optimum);
  } else {
    Require(!doc.contains("weights"),
            "instance file: family " + std::string(FamilyName(family)) +
                " is parametric and takes no 'weights'");
    inst.emplace(BuildFromParams(InstanceParams{family, n, OptionalInt(doc, "k"),
                                                OptionalInt(doc, "d"),
                                                OptionalInt(doc, "m")}));
  }
  if (optimum) {
    Require(inst->optimum_value().value == *optimum,
            "instance file: optimum " + FormatRational(*optimum) +
                " disagrees with the closed form " +
                inst->optimum_value().ToString());
  }
  return *inst;
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  Require(in.good(), "cannot open instance file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseInstance(text.str());
}

std::string SerializeInstance(const Instance& inst) {
  json doc;
  doc["family"] = std::string(FamilyName(inst.family()));
  doc["n"] = inst.n();
  doc["k"] = inst.k();
  if (const auto* del = inst.deletion()) {
    doc["d"] = del->d();
    if (del->family() == Family::kLinear) {
      json row = json::array();
      for (const auto& w : del->objective().UserWeights()) row.push_back(RationalToJson(w));
      doc["weights"] = row;
    }
  } else {
    const auto* wc = inst.worst_case();
    doc["m"] = wc->m();
    if (wc->family() == Family::kWorstCase) {
      json matrix = json::array();
      for (const auto& r : wc->objectives()) {
        json row = json::array();
        for (const auto& w : r) row.push_back(RationalToJson(w));
        matrix.push_back(row);
      }
      doc["weights"] = matrix;
      if (wc->optimum_value()) doc["optimum"] = RationalToJson(wc->optimum_value()->value);
    }
  }
  return doc.dump();
}

}  // namespace robustea
