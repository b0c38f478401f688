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

#include "wrp/field.hpp"

#include <gtest/gtest.h>

#include <random>
#include <tuple>
#include <vector>

#include "oracles.hpp"

namespace wrp {
namespace {

ErrorCode build_error(int p, int n, std::optional<std::vector<int>> m = {}) {
  try {
    FieldCtx::build(p, n, m);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << p << "," << n;
  return ErrorCode::kParseError;
}

TEST(FieldBuildTest, PrimeFieldUsesModulusX) {
  auto ctx = FieldCtx::build(3, 1);
  EXPECT_EQ(ctx.spec().modulus, (std::vector<int>{0, 1}));
  EXPECT_EQ(ctx.order(), 3u);
  EXPECT_EQ(ctx.mul(ctx.element(2), ctx.element(2)).index(), 1u);
}

// Monic quadratics compared coefficient by coefficient from c0 upward; the
// first one without a root in Z_3 is the default.
TEST(FieldBuildTest, DefaultQuadraticModulusIsSmallestIrreducible) {
  std::vector<int> expected;
  for (int c0 = 0; c0 < 3 && expected.empty(); ++c0) {
    for (int c1 = 0; c1 < 3; ++c1) {
      bool root = false;
      for (int x = 0; x < 3; ++x) root |= (x * x + c1 * x + c0) % 3 == 0;
      if (!root) {
        expected = {c0, c1, 1};
        break;
      }
    }
  }
  EXPECT_EQ(expected, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(FieldCtx::build(3, 2).spec().modulus, expected);
}

TEST(FieldBuildTest, DefaultModuliOfLargerFields) {
  EXPECT_EQ(FieldCtx::build(3, 4).spec().modulus,
            (std::vector<int>{1, 0, 1, 1, 1}));
  EXPECT_EQ(FieldCtx::build(3, 5).spec().modulus,
            (std::vector<int>{1, 0, 0, 0, 2, 1}));
}

TEST(FieldBuildTest, Errors) {
  EXPECT_EQ(build_error(4, 2), ErrorCode::kNotPrime);
  EXPECT_EQ(build_error(9, 1), ErrorCode::kNotPrime);
  EXPECT_EQ(build_error(2, 3), ErrorCode::kEvenCharacteristic);
  EXPECT_EQ(build_error(3, 0), ErrorCode::kInvalidDegree);
  EXPECT_EQ(build_error(3, 25), ErrorCode::kFieldTooLarge);
  EXPECT_EQ(build_error(3, 2, std::vector<int>{2, 0, 1}),  // x^2 - 1
            ErrorCode::kReducibleModulus);
  EXPECT_EQ(build_error(3, 2, std::vector<int>{1, 1}), ErrorCode::kInvalidDegree);
  EXPECT_EQ(build_error(3, 2, std::vector<int>{1, 0, 2}), ErrorCode::kInvalidDegree);
}

TEST(FieldBuildTest, ExplicitModulus) {
  auto ctx = FieldCtx::build(3, 2, std::vector<int>{2, 1, 1});
  EXPECT_EQ(ctx.spec().modulus, (std::vector<int>{2, 1, 1}));
  auto naive = oracle::naive(ctx);
  for (std::uint32_t a = 0; a < 9; ++a) {
    for (std::uint32_t b = 0; b < 9; ++b) {
      EXPECT_EQ(ctx.mul_index(a, b), naive.mul(a, b));
    }
  }
  EXPECT_EQ(FieldCtx::build(ctx.spec()).spec(), ctx.spec());
}

TEST(FieldArithmeticTest, XSquaredIsMinusOneInGf9) {
  auto ctx = FieldCtx::build(3, 2);
  auto x = ctx.from_coeffs({0, 1});
  EXPECT_EQ(ctx.coeffs(ctx.mul(x, x)), (std::vector<int>{2, 0}));
}

TEST(FieldArithmeticTest, MultiplyByZero) {
  auto ctx = FieldCtx::build(5, 2);
  for (std::uint32_t a = 0; a < ctx.order(); ++a) {
    EXPECT_EQ(ctx.mul(ctx.element(a), ctx.zero()), ctx.zero());
  }
}

TEST(FieldArithmeticTest, NonzeroElementsOfGf9HaveOrderDividingEight) {
  auto ctx = FieldCtx::build(3, 2);
  for (std::uint32_t a = 1; a < 9; ++a) {
    EXPECT_EQ(ctx.pow(ctx.element(a), 8), ctx.one()) << a;
  }
}

TEST(FieldArithmeticTest, PrimitiveElementGeneratesTheGroup) {
  for (auto [p, n] : {std::pair{3, 2}, {5, 2}, {3, 4}, {7, 2}}) {
    auto ctx = FieldCtx::build(p, n);
    std::vector<bool> hit(ctx.order(), false);
    auto g = ctx.primitive();
    auto cur = ctx.one();
    for (std::uint32_t i = 0; i + 1 < ctx.order(); ++i) {
      EXPECT_FALSE(hit[cur.index()]);
      hit[cur.index()] = true;
      cur = ctx.mul(cur, g);
    }
    EXPECT_EQ(cur, ctx.one());
  }
}

class FieldAxiomsTest : public ::testing::TestWithParam<std::pair<int, int>> {};

// Exhaustive for every field of order at most 125, with the schoolbook oracle
// as the reference for products.
TEST_P(FieldAxiomsTest, Exhaustive) {
  auto [p, n] = GetParam();
  auto ctx = FieldCtx::build(p, n);
  auto naive = oracle::naive(ctx);
  const std::uint32_t q = ctx.order();
  for (std::uint32_t a = 0; a < q; ++a) {
    EXPECT_EQ(ctx.add_index(a, 0), a);
    EXPECT_EQ(ctx.mul_index(a, 1), a);
    EXPECT_EQ(ctx.add_index(a, ctx.neg_index(a)), 0u);
    if (a != 0) {
      EXPECT_EQ(ctx.mul_index(a, ctx.pow_index(a, q - 2)), 1u);
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      const std::uint32_t ab = ctx.mul_index(a, b);
      ASSERT_EQ(ab, naive.mul(a, b));
      ASSERT_EQ(ctx.add_index(a, b), naive.add(a, b));
      ASSERT_EQ(ctx.sub_index(a, b), naive.sub(a, b));
      ASSERT_EQ(ab, ctx.mul_index(b, a));
      for (std::uint32_t c = 0; c < q; ++c) {
        ASSERT_EQ(ctx.mul_index(ab, c), ctx.mul_index(a, ctx.mul_index(b, c)));
        ASSERT_EQ(ctx.mul_index(a, ctx.add_index(b, c)),
                  ctx.add_index(ab, ctx.mul_index(a, c)));
      }
    }
  }
}

// Trace is Z_p-linear, agrees with the Frobenius definition and the oracle,
// and every fiber has p^{n-1} elements.
TEST_P(FieldAxiomsTest, TraceLinearAndBalanced) {
  auto [p, n] = GetParam();
  auto ctx = FieldCtx::build(p, n);
  auto naive = oracle::naive(ctx);
  std::vector<int> fiber(p, 0);
  for (std::uint32_t a = 0; a < ctx.order(); ++a) {
    const int t = ctx.trace_index(a);
    ASSERT_EQ(t, ctx.trace_by_definition(a));
    ASSERT_EQ(t, naive.trace(a));
    ++fiber[t];
    for (std::uint32_t b = 0; b < ctx.order(); ++b) {
      ASSERT_EQ(ctx.trace_index(ctx.add_index(a, b)),
                (t + ctx.trace_index(b)) % p);
    }
    for (int s = 0; s < p; ++s) {
      ASSERT_EQ(ctx.trace_index(ctx.scale_index(a, s)), t * s % p);
    }
  }
  for (int v : fiber) EXPECT_EQ(v, ctx.order() / p);
}

TEST_P(FieldAxiomsTest, EnumerationRoundTrip) {
  auto [p, n] = GetParam();
  auto ctx = FieldCtx::build(p, n);
  for (std::uint32_t i = 0; i < ctx.order(); ++i) {
    EXPECT_EQ(ctx.element(i).index(), i);
    EXPECT_EQ(ctx.from_coeffs(ctx.coeffs(ctx.element(i))).index(), i);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxiomsTest,
                         ::testing::Values(std::pair{3, 1}, std::pair{3, 2},
                                           std::pair{3, 3}, std::pair{3, 4},
                                           std::pair{5, 1}, std::pair{5, 2},
                                           std::pair{5, 3}, std::pair{7, 1},
                                           std::pair{7, 2}, std::pair{11, 1},
                                           std::pair{11, 2}, std::pair{13, 1}));

TEST(FieldTraceTest, Examples) {
  auto gf9 = FieldCtx::build(3, 2);
  EXPECT_EQ(gf9.trace(gf9.zero()), 0);
  EXPECT_EQ(gf9.trace(gf9.one()), 2);
  auto gf27 = FieldCtx::build(3, 3);
  std::vector<int> fiber(3, 0);
  for (std::uint32_t a = 0; a < 27; ++a) ++fiber[gf27.trace(gf27.element(a))];
  EXPECT_EQ(fiber, (std::vector<int>{9, 9, 9}));
}

TEST(FieldContextTest, CopiesShareIdentityAndRebuildsDoNot) {
  auto a = FieldCtx::build(3, 2);
  auto copy = a;
  auto b = FieldCtx::build(3, 2);
  EXPECT_EQ(copy.id(), a.id());
  EXPECT_NE(a.id(), b.id());
  EXPECT_NO_THROW(copy.mul(a.one(), a.one()));
  try {
    a.mul(a.one(), b.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedFields);
  }
  EXPECT_THROW(a.trace(b.one()), Error);
}

// Above 2^16 elements multiplication falls back to polynomial arithmetic.
TEST(FieldLargeTest, PolynomialFallbackMatchesOracle) {
  auto ctx = FieldCtx::build(3, 11);
  EXPECT_FALSE(ctx.has_log_tables());
  EXPECT_TRUE(FieldCtx::build(3, 10).has_log_tables());
  auto naive = oracle::naive(ctx);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, ctx.order() - 1);
  for (int i = 0; i < 200; ++i) {
    std::uint32_t a = pick(rng), b = pick(rng);
    ASSERT_EQ(ctx.mul_index(a, b), naive.mul(a, b));
    if (i < 10) {
      ASSERT_EQ(ctx.trace_index(a), naive.trace(a));
      ASSERT_EQ(ctx.pow_index(a, ctx.order() - 1), a == 0 ? 0u : 1u);
    }
  }
}

}  // namespace
}  // namespace wrp
