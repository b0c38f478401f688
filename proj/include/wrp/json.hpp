// Copyright 2026 The wrp-srg Authors.
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

// JSON forms of the library's values. Objects use insertion-ordered keys so
// that output is byte-stable.

#ifndef WRP_JSON_HPP_
#define WRP_JSON_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wrp/cyclo.hpp"
#include "wrp/error.hpp"
#include "wrp/field.hpp"
#include "wrp/identities.hpp"
#include "wrp/pds.hpp"
#include "wrp/pfun.hpp"
#include "wrp/plateau.hpp"
#include "wrp/scheme.hpp"

namespace wrp {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are emitted as numbers, larger ones as
// decimal strings.
inline Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(ErrorCode::kParseError, "expected an integer");
}

template <typename T, typename Fn>
Json optional_json(const std::optional<T>& v, Fn&& fn) {
  return v ? fn(*v) : Json(nullptr);
}

inline Json to_json(const FieldSpec& spec) {
  return Json{{"p", spec.p}, {"n", spec.n}, {"modulus", spec.modulus}};
}

inline FieldSpec field_spec_from_json(const Json& j) {
  try {
    FieldSpec spec;
    spec.p = j.at("p").get<int>();
    spec.n = j.at("n").get<int>();
    if (j.contains("modulus") && !j.at("modulus").is_null()) {
      spec.modulus = j.at("modulus").get<std::vector<int>>();
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("field spec: ") + e.what());
  }
}

inline Json to_json(const CycloInt& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"p", a.prime()}, {"coeffs", coeffs}};
}

inline CycloInt cyclo_from_json(const Json& j) {
  try {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(bigint_from_json(c));
    return CycloInt::from_coeffs(j.at("p").get<int>(), std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("cyclo: ") + e.what());
  }
}

inline Json to_json(const TermSpec& t) {
  return Json{{"c_power", t.c_power ? Json(*t.c_power) : Json(nullptr)},
              {"d", t.d}};
}

inline Json to_json(const std::vector<TermSpec>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(to_json(t));
  return out;
}

inline std::vector<TermSpec> terms_from_json(const Json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kParseError, "terms must be a JSON array");
  }
  std::vector<TermSpec> out;
  try {
    for (const auto& item : j) {
      TermSpec t;
      if (item.contains("c_power") && !item.at("c_power").is_null()) {
        t.c_power = item.at("c_power").get<std::int64_t>();
      }
      const std::int64_t d = item.at("d").get<std::int64_t>();
      if (d < 0) throw Error(ErrorCode::kParseError, "d must be nonnegative");
      t.d = static_cast<std::uint64_t>(d);
      out.push_back(t);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("terms: ") + e.what());
  }
  return out;
}

inline Json to_json(const PlateauProfile& prof) {
  Json dual = Json::object();
  for (const auto& [beta, g] : prof.dual) dual[std::to_string(beta)] = g;
  return Json{
      {"s", prof.s ? Json(*prof.s) : Json(nullptr)},
      {"epsilon", prof.epsilon ? Json(*prof.epsilon) : Json(nullptr)},
      {"support", prof.support},
      {"dual", dual},
      {"weakly_regular", prof.weakly_regular},
      {"wrp", prof.wrp ? Json{{"h", prof.wrp->h}, {"l", prof.wrp->l}}
                       : Json(nullptr)},
  };
}

inline Json to_json(const PdsParams& params) {
  return Json{{"v", params.v},
              {"k", params.k},
              {"lambda", params.lambda},
              {"mu", params.mu}};
}

inline PdsParams pds_params_from_json(const Json& j) {
  return PdsParams{j.at("v").get<std::int64_t>(), j.at("k").get<std::int64_t>(),
                   j.at("lambda").get<std::int64_t>(),
                   j.at("mu").get<std::int64_t>()};
}

inline Json to_json(const PdsReport& r) {
  auto params = [](const PdsParams& p) { return to_json(p); };
  Json out{{"selector", r.selector.name()},
           {"set_size", r.set_size},
           {"is_pds", r.is_pds},
           {"measured", optional_json(r.measured, params)},
           {"predicted", optional_json(r.predicted, params)},
           {"match", r.match},
           {"degenerate", r.degenerate}};
  if (r.note) out["note"] = *r.note;
  return out;
}

inline PdsReport pds_report_from_json(const Json& j) {
  try {
    PdsReport r;
    r.selector = SubsetSelector::parse(j.at("selector").get<std::string>());
    r.set_size = j.at("set_size").get<std::int64_t>();
    r.is_pds = j.at("is_pds").get<bool>();
    if (!j.at("measured").is_null()) {
      r.measured = pds_params_from_json(j.at("measured"));
    }
    if (!j.at("predicted").is_null()) {
      r.predicted = pds_params_from_json(j.at("predicted"));
    }
    r.match = j.at("match").get<bool>();
    r.degenerate = j.at("degenerate").get<bool>();
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("report: ") + e.what());
  }
}

inline Json to_json(const SchemeTable& t) {
  Json table = Json::array();
  for (std::size_t i = 0; i < t.relations; ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < t.relations; ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < t.relations; ++k) row.push_back(t.at(i, j, k));
      plane.push_back(row);
    }
    table.push_back(plane);
  }
  return Json{{"relations", t.relations},
              {"class_number", t.relations - 1},
              {"class_sizes", t.class_sizes},
              {"table", table}};
}

inline SchemeTable scheme_table_from_json(const Json& j) {
  try {
    SchemeTable t;
    t.relations = j.at("relations").get<std::size_t>();
    t.class_sizes = j.at("class_sizes").get<std::vector<std::int64_t>>();
    t.entries.assign(t.relations * t.relations * t.relations, 0);
    const Json& table = j.at("table");
    for (std::size_t i = 0; i < t.relations; ++i) {
      for (std::size_t jj = 0; jj < t.relations; ++jj) {
        for (std::size_t k = 0; k < t.relations; ++k) {
          t.entries[(i * t.relations + jj) * t.relations + k] =
              table.at(i).at(jj).at(k).get<std::int64_t>();
        }
      }
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("scheme: ") + e.what());
  }
}

inline Json to_json(const SchemeVerification& v) {
  Json out{{"is_scheme", v.table.has_value()}};
  out["failure"] =
      v.failure ? Json(std::string(to_string(*v.failure))) : Json(nullptr);
  out["witness"] = v.witness;
  if (v.table) {
    const Json table = to_json(*v.table);
    for (const auto& item : table.items()) out[item.key()] = item.value();
  } else {
    out["table"] = nullptr;
  }
  return out;
}

inline SchemeVerification scheme_verification_from_json(const Json& j) {
  try {
    SchemeVerification v;
    if (!j.at("failure").is_null()) {
      auto code = error_code_from_string(j.at("failure").get<std::string>());
      if (!code) throw Error(ErrorCode::kParseError, "unknown failure code");
      v.failure = *code;
    }
    v.witness = j.at("witness").get<std::string>();
    if (j.at("is_scheme").get<bool>()) v.table = scheme_table_from_json(j);
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("scheme: ") + e.what());
  }
}

inline Json to_json(const IdentityReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"holds", c.holds},
                          {"skipped", c.skipped},
                          {"witness", c.witness}});
  }
  return Json{{"all_hold", r.all_hold()}, {"checks", checks}};
}

inline Json to_json(const SchurSpanReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json d = Json::array();
    for (const auto& dj : e.d) d.push_back(dj ? to_json(*dj) : Json(nullptr));
    entries.push_back(Json{{"a", e.a},
                           {"b", e.b},
                           {"in_span", e.in_span},
                           {"c", e.c ? to_json(*e.c) : Json(nullptr)},
                           {"c_expected", to_json(e.c_expected)},
                           {"d", d}});
  }
  return Json{{"holds", r.holds}, {"witness", r.witness}, {"entries", entries}};
}

inline IdentityReport identity_report_from_json(const Json& j) {
  try {
    IdentityReport r;
    for (const auto& c : j.at("checks")) {
      r.checks.push_back(IdentityCheck{c.at("name").get<std::string>(),
                                       c.at("holds").get<bool>(),
                                       c.at("skipped").get<bool>(),
                                       c.at("witness").get<std::string>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("identities: ") + e.what());
  }
}

inline SchurSpanReport schur_span_from_json(const Json& j) {
  try {
    SchurSpanReport r;
    r.holds = j.at("holds").get<bool>();
    r.witness = j.at("witness").get<std::string>();
    for (const auto& e : j.at("entries")) {
      SchurSpanEntry entry;
      entry.a = e.at("a").get<int>();
      entry.b = e.at("b").get<int>();
      entry.in_span = e.at("in_span").get<bool>();
      if (!e.at("c").is_null()) entry.c = bigint_from_json(e.at("c"));
      entry.c_expected = bigint_from_json(e.at("c_expected"));
      for (const auto& d : e.at("d")) {
        entry.d.push_back(d.is_null() ? std::nullopt
                                      : std::optional<BigInt>(bigint_from_json(d)));
      }
      r.entries.push_back(std::move(entry));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("schur span: ") + e.what());
  }
}

}  // namespace wrp

#endif  // WRP_JSON_HPP_
