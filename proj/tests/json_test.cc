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

#include "wrp/json.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace wrp {
namespace {

TEST(JsonTest, BigIntAsNumberOrString) {
  EXPECT_EQ(to_json(BigInt(-5)).dump(), "-5");
  BigInt huge = BigInt(1) << 100;
  EXPECT_TRUE(to_json(huge).is_string());
  EXPECT_EQ(bigint_from_json(to_json(huge)), huge);
  EXPECT_EQ(bigint_from_json(to_json(BigInt(42))), BigInt(42));
  EXPECT_THROW(bigint_from_json(Json(true)), Error);
}

TEST(JsonTest, FieldSpecRoundTrip) {
  FieldSpec spec{3, 2, {1, 0, 1}};
  EXPECT_EQ(to_json(spec).dump(), R"({"p":3,"n":2,"modulus":[1,0,1]})");
  EXPECT_EQ(field_spec_from_json(to_json(spec)), spec);
  EXPECT_EQ(field_spec_from_json(Json::parse(R"({"p":5,"n":1})")),
            (FieldSpec{5, 1, {}}));
  EXPECT_THROW(field_spec_from_json(Json::parse(R"({"p":"x","n":1})")), Error);
}

TEST(JsonTest, TermsRoundTrip) {
  std::vector<TermSpec> terms = {{std::nullopt, 2}, {4, 4}};
  EXPECT_EQ(to_json(terms).dump(),
            R"([{"c_power":null,"d":2},{"c_power":4,"d":4}])");
  EXPECT_EQ(terms_from_json(to_json(terms)), terms);
  EXPECT_EQ(terms_from_json(Json::parse(R"([{"d":3}])")),
            (std::vector<TermSpec>{{std::nullopt, 3}}));
  for (const char* bad : {R"({"d":2})", R"([{"c_power":1}])", R"([{"d":-1}])",
                          R"([{"d":"two"}])"}) {
    try {
      terms_from_json(Json::parse(bad));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << bad;
    }
  }
}

TEST(JsonTest, CycloRoundTrip) {
  auto g = gauss_sum(5) * CycloInt::integer(5, BigInt(1) << 70);
  EXPECT_EQ(cyclo_from_json(to_json(g)), g);
}

TEST(JsonTest, ProfileShape) {
  auto f = from_term_specs(FieldCtx::build(3, 2), oracle::monomial(2));
  auto cert = certify(f);
  auto j = to_json(cert.profile);
  EXPECT_EQ(j["s"], 0);
  EXPECT_EQ(j["epsilon"], -1);
  EXPECT_EQ(j["weakly_regular"], true);
  EXPECT_EQ(j["wrp"]["h"], 2);
  EXPECT_EQ(j["support"].size(), 9u);
  EXPECT_EQ(j["dual"].size(), 9u);
  auto non = certify(from_term_specs(FieldCtx::build(3, 3),
                                     oracle::gf27_non_plateaued_terms()));
  EXPECT_TRUE(to_json(non.profile)["s"].is_null());
  EXPECT_TRUE(to_json(non.profile)["wrp"].is_null());
}

TEST(JsonTest, ReportsRoundTrip) {
  auto f = from_term_specs(FieldCtx::build(5, 2), oracle::monomial(2));
  auto cert = certify(f);
  for (const auto& sel : SubsetSelector::predicted_selectors()) {
    auto r = verify_selector(f, cert.profile, sel, 1);
    EXPECT_EQ(pds_report_from_json(to_json(r)), r);
  }
  auto scheme = verify_scheme(build_classes(f), f.ctx());
  EXPECT_EQ(scheme_verification_from_json(to_json(scheme)), scheme);
  auto g = from_term_specs(FieldCtx::build(3, 2), oracle::monomial(2));
  auto gscheme = verify_scheme(build_classes(g), g.ctx());
  ASSERT_TRUE(gscheme.table);
  auto gj = to_json(gscheme);
  EXPECT_EQ(gj["relations"], 4);
  EXPECT_EQ(gj["class_number"], 3);
  EXPECT_EQ(scheme_verification_from_json(gj), gscheme);
  auto gprof = certify(g).profile;
  auto ids = verify_L_identities(g, gprof);
  EXPECT_EQ(identity_report_from_json(to_json(ids)), ids);
  auto span = verify_schur_span(f, cert.profile);
  EXPECT_EQ(schur_span_from_json(to_json(span)), span);
}

}  // namespace
}  // namespace wrp
