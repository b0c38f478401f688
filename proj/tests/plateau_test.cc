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

#include "wrp/plateau.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"

namespace wrp {
namespace {

using oracle::monomial;

Certification certify_terms(int p, int n, const std::vector<TermSpec>& terms) {
  return certify(from_term_specs(FieldCtx::build(p, n), terms), 0);
}

TEST(PlateauTest, ZeroFunctionIsDegeneratePlateaued) {
  auto ctx = FieldCtx::build(3, 2);
  auto prof = analyze(PFunction::zero(ctx));
  EXPECT_EQ(prof.s, 2);
  EXPECT_EQ(prof.support, (std::vector<std::uint32_t>{0}));
  EXPECT_TRUE(prof.weakly_regular);
  EXPECT_EQ(prof.epsilon, 1);
  EXPECT_EQ(prof.dual, (std::map<std::uint32_t, int>{{0, 0}}));
}

TEST(PlateauTest, SquareTraceOverGf9) {
  auto cert = certify_terms(3, 2, monomial(2));
  const auto& prof = cert.profile;
  EXPECT_EQ(prof.s, 0);
  EXPECT_EQ(prof.support.size(), 9u);
  EXPECT_TRUE(prof.weakly_regular);
  EXPECT_EQ(prof.epsilon, -1);
  ASSERT_TRUE(prof.wrp);
  EXPECT_EQ(prof.wrp->h, 2);
  EXPECT_EQ(prof.wrp->l, 2);
  EXPECT_TRUE(prof.wrp->support_scale_closed);
  EXPECT_TRUE(cert.failures.empty());
}

TEST(PlateauTest, NonPlateauedWitness) {
  auto cert = certify_terms(3, 3, oracle::gf27_non_plateaued_terms());
  EXPECT_FALSE(cert.profile.s);
  EXPECT_FALSE(cert.profile.plateaued());
  EXPECT_FALSE(cert.profile.weakly_regular);
  EXPECT_FALSE(cert.profile.wrp);
  EXPECT_EQ(cert.failures, (std::vector<std::string>{"not plateaued"}));
  auto mags = oracle::walsh_magnitudes(
      from_term_specs(FieldCtx::build(3, 3), oracle::gf27_non_plateaued_terms()));
  std::sort(mags.begin(), mags.end());
  mags.erase(std::unique(mags.begin(), mags.end()), mags.end());
  EXPECT_EQ(mags, (std::vector<long long>{0, 27, 108, 189}));
}

TEST(PlateauTest, PlateauedButNotWeaklyRegular) {
  auto cert = certify_terms(3, 3, monomial(5));
  EXPECT_EQ(cert.profile.s, 1);
  EXPECT_FALSE(cert.profile.weakly_regular);
  EXPECT_FALSE(cert.profile.epsilon);
  EXPECT_EQ(cert.failures, (std::vector<std::string>{"not weakly regular"}));
  EXPECT_THROW(check_wrp(from_term_specs(FieldCtx::build(3, 3), monomial(5)),
                         cert.profile),
               Error);
}

TEST(PlateauTest, LinearFunctionIsBalancedAndRejected) {
  auto cert = certify_terms(3, 2, monomial(1));
  EXPECT_TRUE(cert.profile.balanced);
  EXPECT_EQ(cert.profile.s, 2);
  EXPECT_FALSE(cert.profile.wrp);
  EXPECT_NE(std::find(cert.failures.begin(), cert.failures.end(), "balanced"),
            cert.failures.end());
}

TEST(PlateauTest, NonzeroAtOriginIsRejected) {
  auto ctx = FieldCtx::build(3, 2);
  auto base = from_term_specs(ctx, monomial(2));
  std::vector<int> values = base.values();
  for (auto& v : values) v = (v + 1) % 3;
  PFunction shifted(ctx, values);
  auto prof = analyze(shifted);
  ASSERT_TRUE(prof.weakly_regular);
  auto check = check_wrp_detailed(shifted, prof);
  EXPECT_FALSE(check.evidence);
  EXPECT_EQ(check.failures.front(), "f(0) != 0");
}

TEST(PlateauTest, PredictedLevelCountsMatchMeasured) {
  for (auto [p, n, c] : {std::tuple{3, 2, -1}, {3, 4, -1}, {5, 2, 1}, {7, 2, -1}}) {
    auto ctx = FieldCtx::build(p, n);
    auto terms = c < 0 ? monomial(2) : monomial(2, c);
    auto f = from_term_specs(ctx, terms);
    auto cert = certify(f);
    ASSERT_TRUE(cert.profile.wrp) << p << "^" << n;
    auto predicted = predicted_level_counts(cert.profile);
    EXPECT_EQ(predicted, level_counts(f)) << p << "^" << n;
    std::int64_t total = 0;
    for (auto v : predicted) total += v;
    EXPECT_EQ(total, static_cast<std::int64_t>(ctx.order()));
  }
}

TEST(PlateauTest, OddWeightHasNoHalfWeightFactor) {
  auto cert = certify_terms(3, 3, monomial(2));
  ASSERT_TRUE(cert.profile.wrp);
  EXPECT_EQ(cert.profile.weight(), 3);
  try {
    predicted_level_counts(cert.profile);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParityViolation);
  }
}

// Independent re-derivation of every certified fact: support size, a common
// sign on the whole support, both homogeneity identities, scale closure.
void expect_certificate_holds(const PFunction& f, const Certification& cert) {
  const FieldCtx& ctx = f.ctx();
  const int p = ctx.p();
  const auto& prof = cert.profile;
  auto w = walsh_transform(f, 1);
  auto mags = oracle::walsh_magnitudes(f);
  ASSERT_TRUE(w.satisfies_parseval());
  if (!prof.s) return;
  const long long peak = static_cast<long long>(ipow(p, ctx.n() + *prof.s));
  std::vector<std::uint32_t> support;
  for (std::uint32_t b = 0; b < ctx.order(); ++b) {
    ASSERT_TRUE(mags[b] == 0 || mags[b] == peak);
    if (mags[b] == peak) support.push_back(b);
  }
  EXPECT_EQ(support, prof.support);
  EXPECT_EQ(static_cast<std::uint64_t>(support.size()),
            ipow(p, ctx.n() - *prof.s));
  if (!prof.weakly_regular) return;
  const CycloInt scale = cyclo_pow(gauss_sum(p), ctx.n() + *prof.s);
  for (auto b : support) {
    EXPECT_EQ(w[b], CycloInt::integer(p, *prof.epsilon) * scale *
                        CycloInt::root(p, prof.dual.at(b)));
  }
  if (!prof.wrp) return;
  const int h = prof.wrp->h, l = prof.wrp->l;
  for (int a = 1; a < p; ++a) {
    for (std::uint32_t x = 0; x < ctx.order(); ++x) {
      ASSERT_EQ(f(ctx.scale_index(x, a)), pow_mod(a, h, p) * f(x) % p);
    }
    for (auto b : support) {
      const auto ab = ctx.scale_index(b, a);
      ASSERT_TRUE(std::binary_search(support.begin(), support.end(), ab));
      ASSERT_EQ(prof.dual.at(ab), pow_mod(a, l, p) * prof.dual.at(b) % p);
    }
  }
}

TEST(PlateauTest, CertificatesHoldIndependently) {
  std::vector<std::pair<FieldSpec, std::vector<TermSpec>>> cases = {
      {{3, 2, {}}, monomial(2)},
      {{3, 2, {}}, monomial(4)},
      {{3, 3, {}}, monomial(2)},
      {{3, 3, {}}, monomial(5)},
      {{3, 3, {}}, oracle::gf27_non_plateaued_terms()},
      {{5, 2, {}}, monomial(2)},
      {{5, 2, {}}, monomial(2, 1)},
      {{5, 2, {}}, monomial(6, 3)},
      {{7, 2, {}}, monomial(2)},
      {{3, 4, {}}, monomial(2)},
      {{3, 4, {}}, monomial(10)},
      {{3, 5, {}}, oracle::gf243_plateaued_terms()},
  };
  for (const auto& [spec, terms] : cases) {
    SCOPED_TRACE(std::to_string(spec.p) + "^" + std::to_string(spec.n));
    auto f = from_term_specs(FieldCtx::build(spec), terms);
    expect_certificate_holds(f, certify(f));
  }
}

TEST(PlateauTest, PlateauedNonBentWitnessOverGf243) {
  auto cert = certify_terms(3, 5, oracle::gf243_plateaued_terms());
  EXPECT_EQ(cert.profile.s, 1);
  EXPECT_EQ(cert.profile.weight() % 2, 0);
  EXPECT_EQ(cert.profile.support.size(), 81u);
  EXPECT_EQ(cert.profile.epsilon, -1);
  ASSERT_TRUE(cert.profile.wrp);
  EXPECT_EQ(cert.profile.wrp->h, 2);
}

TEST(PlateauTest, QuadraticMonomialsOverGf243AreBent) {
  for (std::uint64_t d : {2u, 4u, 10u}) {
    auto cert = certify_terms(3, 5, monomial(d));
    EXPECT_EQ(cert.profile.s, 0) << d;
  }
}

}  // namespace
}  // namespace wrp
