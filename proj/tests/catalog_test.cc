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

#include "wrp/catalog.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "oracles.hpp"

namespace wrp {
namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("wrp_catalog_test_" + name)).string();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CandidateTest, MonomialsComeFirst) {
  auto ctx = FieldCtx::build(3, 4);
  auto c = quadratic_candidates(ctx);
  ASSERT_GE(c.size(), 3u);
  EXPECT_EQ(c[0], oracle::monomial(2));
  EXPECT_EQ(c[1], oracle::monomial(4));
  EXPECT_EQ(c[2], oracle::monomial(10));
  EXPECT_EQ(c[3], oracle::monomial(2, 1));
}

TEST(SearchTest, FirstEntryOverGf9IsSquareTrace) {
  auto entries = search_quadratics(FieldCtx::build(3, 2), 1);
  ASSERT_EQ(entries.size(), 1u);
  const auto& e = entries[0];
  EXPECT_EQ(e.terms, oracle::monomial(2));
  EXPECT_EQ(e.profile.s, 0);
  EXPECT_EQ(e.profile.h, 2);
  EXPECT_NE(e.status, EntryStatus::kRejected);
  EXPECT_EQ(e.reports.size(), 4u);
}

TEST(SearchTest, InvalidBudget) {
  try {
    search_quadratics(FieldCtx::build(3, 2), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidBudget);
  }
}

// Over GF(9), Tr(c x^4) = Tr(c) N(x) depends on c only through Tr(c), so
// the candidate list is guaranteed to repeat functions.
TEST(SearchTest, DeduplicatesByValueTable) {
  for (auto [p, n] : {std::pair{3, 2}, {3, 3}}) {
    auto ctx = FieldCtx::build(p, n);
    auto entries = search_quadratics(ctx, 1000);
    std::set<std::vector<int>> tables;
    for (const auto& e : entries) {
      EXPECT_TRUE(tables.insert(from_term_specs(ctx, e.terms).values()).second);
    }
    if (n == 2) EXPECT_LT(entries.size(), quadratic_candidates(ctx).size());
  }
}

TEST(SearchTest, OrderIndependentOfWorkers) {
  auto ctx = FieldCtx::build(5, 2);
  auto a = search_quadratics(ctx, 12, 1);
  auto b = search_quadratics(ctx, 12, 5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].same_verdicts(b[i]));
}

TEST(SearchTest, FindsPlateauedNonBentOverGf243) {
  auto entries = search_quadratics(FieldCtx::build(3, 5), 30);
  const CatalogEntry* hit = nullptr;
  for (const auto& e : entries) {
    if (e.profile.s && *e.profile.s >= 1 && e.profile.h &&
        (5 + *e.profile.s) % 2 == 0) {
      hit = &e;
      break;
    }
  }
  ASSERT_NE(hit, nullptr);
  EXPECT_EQ(hit->terms, oracle::gf243_plateaued_terms());
  EXPECT_EQ(hit->status, EntryStatus::kCertified);
  EXPECT_TRUE(hit->has_mismatch());
}

TEST(CatalogIoTest, EmptyCatalog) {
  auto path = temp_path("empty.ndjson");
  auto summary = write_catalog({}, path);
  EXPECT_EQ(summary, CatalogSummary{});
  EXPECT_EQ(std::filesystem::file_size(path), 0u);
  EXPECT_TRUE(read_catalog(path).empty());
}

TEST(CatalogIoTest, OneEntryOneLine) {
  auto path = temp_path("one.ndjson");
  auto entry = run_pipeline(FieldCtx::build(3, 2), oracle::monomial(2));
  write_catalog({entry}, path);
  auto lines = read_lines(path);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].rfind(R"({"version":"catalog_v1","field":)", 0), 0u);
  auto back = read_catalog(path);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], entry);
}

TEST(CatalogIoTest, SearchRoundTripAndRecheck) {
  auto ctx = FieldCtx::build(3, 2);
  auto entries = search_quadratics(ctx, 10);
  auto path = temp_path("gf9.ndjson");
  auto summary = write_catalog(entries, path);
  EXPECT_EQ(summary.total, static_cast<std::int64_t>(entries.size()));
  EXPECT_EQ(summary.certified + summary.degenerate + summary.rejected, summary.total);
  for (const auto& line : read_lines(path)) {
    EXPECT_EQ(Json::parse(line)["version"], "catalog_v1");
  }
  auto back = read_catalog(path);
  EXPECT_EQ(back, entries);
  for (const auto& e : back) {
    auto fresh = run_pipeline(FieldCtx::build(e.field), e.terms, 1);
    EXPECT_TRUE(fresh.same_verdicts(e));
  }
}

TEST(CatalogIoTest, Errors) {
  try {
    write_catalog({}, "/nonexistent-dir/x.ndjson");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoFailure);
  }
  EXPECT_THROW(read_catalog("/nonexistent-dir/x.ndjson"), Error);
  auto path = temp_path("bad.ndjson");
  std::ofstream(path) << "{\"version\":\"catalog_v0\"}\n";
  try {
    read_catalog(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
  std::ofstream(path) << "not json\n";
  EXPECT_THROW(read_catalog(path), Error);
}

TEST(PipelineTest, StatusClassification) {
  auto rejected = run_pipeline(FieldCtx::build(3, 2), oracle::monomial(1));
  EXPECT_EQ(rejected.status, EntryStatus::kRejected);
  EXPECT_FALSE(rejected.identities);
  EXPECT_EQ(rejected.reports.size(), 4u);
  auto odd = run_pipeline(FieldCtx::build(3, 3), oracle::monomial(2));
  EXPECT_EQ(odd.status, EntryStatus::kDegenerate);
  auto empty_level = run_pipeline(FieldCtx::build(5, 2), oracle::monomial(2));
  EXPECT_EQ(empty_level.status, EntryStatus::kDegenerate);
  auto bent = run_pipeline(FieldCtx::build(5, 2), oracle::monomial(2, 1));
  EXPECT_EQ(bent.status, EntryStatus::kCertified);
  EXPECT_TRUE(bent.identities->all_hold());
  EXPECT_TRUE(bent.schur_span->holds);
  // Only the squares0 report disagrees with its closed form.
  int mismatched = 0;
  for (const auto& r : bent.reports) mismatched += !r.match;
  EXPECT_EQ(mismatched, 1);
  EXPECT_FALSE(bent.reports[3].match);
  EXPECT_TRUE(bent.has_mismatch());
}

}  // namespace
}  // namespace wrp
