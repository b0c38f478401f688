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

// Quadratic-form search, the end-to-end verification pipeline, and the
// newline-delimited JSON catalog format.

#ifndef WRP_CATALOG_HPP_
#define WRP_CATALOG_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wrp/error.hpp"
#include "wrp/field.hpp"
#include "wrp/identities.hpp"
#include "wrp/json.hpp"
#include "wrp/numtheory.hpp"
#include "wrp/parallel.hpp"
#include "wrp/pds.hpp"
#include "wrp/pfun.hpp"
#include "wrp/plateau.hpp"
#include "wrp/scheme.hpp"

namespace wrp {

inline constexpr std::string_view kCatalogVersion = "catalog_v1";

enum class EntryStatus { kCertified, kDegenerate, kRejected };

constexpr std::string_view to_string(EntryStatus status) {
  switch (status) {
    case EntryStatus::kCertified: return "certified";
    case EntryStatus::kDegenerate: return "degenerate";
    case EntryStatus::kRejected: return "rejected";
  }
  return "unknown";
}

inline EntryStatus entry_status_from_string(std::string_view name) {
  for (auto s : {EntryStatus::kCertified, EntryStatus::kDegenerate,
                 EntryStatus::kRejected}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorCode::kParseError, "unknown status " + std::string(name));
}

struct ProfileSummary {
  std::optional<int> s;
  std::optional<int> epsilon;
  std::optional<int> h;
  std::optional<int> l;
  bool balanced = false;
  bool weakly_regular = false;
  std::int64_t support_size = 0;

  friend bool operator==(const ProfileSummary&, const ProfileSummary&) = default;
};

inline ProfileSummary summarize(const PlateauProfile& profile) {
  ProfileSummary out;
  out.s = profile.s;
  out.epsilon = profile.epsilon;
  if (profile.wrp) {
    out.h = profile.wrp->h;
    out.l = profile.wrp->l;
  }
  out.balanced = profile.balanced;
  out.weakly_regular = profile.weakly_regular;
  out.support_size = static_cast<std::int64_t>(profile.support.size());
  return out;
}

// rejected: not WRP. degenerate: WRP, but n + s is odd or some selected set
// is empty or all of F*. certified: everything else.
struct CatalogEntry {
  FieldSpec field;
  std::vector<TermSpec> terms;
  EntryStatus status = EntryStatus::kRejected;
  std::vector<std::string> flags;
  ProfileSummary profile;
  std::vector<PdsReport> reports;
  std::optional<IdentityReport> identities;
  std::optional<SchemeVerification> scheme;
  std::optional<SchurSpanReport> schur_span;
  std::int64_t elapsed_us = 0;

  // A certified entry whose brute-force results contradict a closed form or
  // an identity.
  bool has_mismatch() const {
    if (status != EntryStatus::kCertified) return false;
    for (const auto& r : reports) {
      if (!r.match) return true;
    }
    if (identities && !identities->all_hold()) return true;
    if (scheme && !scheme->table) return true;
    if (schur_span && !schur_span->holds) return true;
    return false;
  }

  // Equality ignoring timing.
  bool same_verdicts(const CatalogEntry& other) const {
    CatalogEntry a = *this;
    a.elapsed_us = other.elapsed_us;
    return a == other;
  }

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// Runs certification, the four selector reports, the identity audit, the
// scheme check and the Schur-span check on one function.
inline CatalogEntry run_pipeline(const PFunction& f,
                                 std::vector<TermSpec> terms,
                                 unsigned workers = 0) {
  const auto start = std::chrono::steady_clock::now();
  CatalogEntry entry;
  entry.field = f.ctx().spec();
  entry.terms = std::move(terms);

  Certification cert = certify(f, workers);
  const PlateauProfile& profile = cert.profile;
  entry.profile = summarize(profile);
  entry.flags = cert.failures;

  for (const auto& sel : SubsetSelector::predicted_selectors()) {
    entry.reports.push_back(verify_selector(f, profile, sel, workers));
  }
  entry.scheme = verify_scheme(build_classes(f), f.ctx(), workers);

  if (!profile.wrp) {
    entry.status = EntryStatus::kRejected;
  } else {
    bool degenerate = false;
    if (profile.weight() % 2 != 0) {
      entry.flags.push_back("n+s odd");
      degenerate = true;
    }
    for (const auto& r : entry.reports) {
      if (r.degenerate) {
        entry.flags.push_back("degenerate subset " + r.selector.name());
        degenerate = true;
      }
    }
    try {
      entry.identities = verify_L_identities(f, profile, workers);
    } catch (const Error& e) {
      entry.flags.push_back("identities: " + std::string(to_string(e.code())));
    }
    try {
      entry.schur_span = verify_schur_span(f, profile, workers);
    } catch (const Error& e) {
      entry.flags.push_back("schur span: " + std::string(to_string(e.code())));
    }
    entry.status = degenerate ? EntryStatus::kDegenerate : EntryStatus::kCertified;
  }

  entry.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return entry;
}

inline CatalogEntry run_pipeline(const FieldCtx& ctx,
                                 const std::vector<TermSpec>& terms,
                                 unsigned workers = 0) {
  return run_pipeline(from_term_specs(ctx, terms), terms, workers);
}

// Candidate quadratic forms sum_i Tr(c_i x^{p^i + 1}) in search order:
// monomials with c = 1, monomials with c = g^1..g^5, then two-term forms.
// Exponents use i in [0, n/2]; larger i repeat these functions.
inline std::vector<std::vector<TermSpec>> quadratic_candidates(
    const FieldCtx& ctx) {
  const int half = ctx.n() / 2;
  const std::int64_t max_power =
      std::min<std::int64_t>(5, static_cast<std::int64_t>(ctx.order()) - 2);
  std::vector<std::uint64_t> exps;
  for (int i = 0; i <= half; ++i) {
    exps.push_back(ipow(static_cast<std::uint64_t>(ctx.p()),
                        static_cast<unsigned>(i)) + 1);
  }
  std::vector<std::optional<std::int64_t>> coeffs{std::nullopt};
  for (std::int64_t c = 1; c <= max_power; ++c) coeffs.push_back(c);

  std::vector<std::vector<TermSpec>> out;
  for (auto d : exps) out.push_back({TermSpec{std::nullopt, d}});
  for (std::int64_t c = 1; c <= max_power; ++c) {
    for (auto d : exps) out.push_back({TermSpec{c, d}});
  }
  for (std::size_t a = 0; a < exps.size(); ++a) {
    for (std::size_t b = a + 1; b < exps.size(); ++b) {
      for (const auto& ca : coeffs) {
        for (const auto& cb : coeffs) {
          out.push_back({TermSpec{ca, exps[a]}, TermSpec{cb, exps[b]}});
        }
      }
    }
  }
  return out;
}

// Runs the pipeline on up to `budget` distinct candidates (duplicates by
// value table are skipped and do not count). Entries reach `sink` in
// enumeration order.
inline void search_quadratics(const FieldCtx& ctx, std::int64_t budget,
                              const std::function<void(CatalogEntry)>& sink,
                              unsigned workers = 0) {
  if (budget < 1) {
    throw Error(ErrorCode::kInvalidBudget, "budget must be at least 1");
  }
  workers = resolve_workers(workers);
  std::set<std::vector<int>> seen;
  std::vector<std::pair<PFunction, std::vector<TermSpec>>> batch;
  std::int64_t emitted = 0;

  auto flush = [&] {
    std::vector<std::optional<CatalogEntry>> results(batch.size());
    parallel_for(batch.size(), workers, [&](std::size_t i) {
      results[i] = run_pipeline(batch[i].first, batch[i].second, 1);
    });
    for (auto& r : results) sink(std::move(*r));
    emitted += static_cast<std::int64_t>(batch.size());
    batch.clear();
  };

  const std::size_t batch_size = std::max<std::size_t>(1, 4 * workers);
  for (auto& terms : quadratic_candidates(ctx)) {
    if (emitted + static_cast<std::int64_t>(batch.size()) >= budget) break;
    PFunction f = from_term_specs(ctx, terms);
    if (!seen.insert(f.values()).second) continue;
    batch.emplace_back(std::move(f), std::move(terms));
    if (batch.size() >= batch_size) flush();
  }
  if (!batch.empty()) flush();
}

inline std::vector<CatalogEntry> search_quadratics(const FieldCtx& ctx,
                                                   std::int64_t budget,
                                                   unsigned workers = 0) {
  std::vector<CatalogEntry> out;
  search_quadratics(
      ctx, budget, [&](CatalogEntry e) { out.push_back(std::move(e)); },
      workers);
  return out;
}

struct CatalogSummary {
  std::int64_t certified = 0;
  std::int64_t degenerate = 0;
  std::int64_t rejected = 0;
  std::int64_t total = 0;
  std::int64_t mismatches = 0;

  void add(const CatalogEntry& e) {
    ++total;
    switch (e.status) {
      case EntryStatus::kCertified: ++certified; break;
      case EntryStatus::kDegenerate: ++degenerate; break;
      case EntryStatus::kRejected: ++rejected; break;
    }
    if (e.has_mismatch()) ++mismatches;
  }

  friend bool operator==(const CatalogSummary&, const CatalogSummary&) = default;
};

inline Json to_json(const CatalogSummary& s) {
  return Json{{"certified", s.certified},
              {"degenerate", s.degenerate},
              {"rejected", s.rejected},
              {"total", s.total},
              {"mismatches", s.mismatches}};
}

inline Json to_json(const ProfileSummary& s) {
  auto opt = [](const std::optional<int>& v) {
    return v ? Json(*v) : Json(nullptr);
  };
  return Json{{"s", opt(s.s)},
              {"epsilon", opt(s.epsilon)},
              {"h", opt(s.h)},
              {"l", opt(s.l)},
              {"balanced", s.balanced},
              {"weakly_regular", s.weakly_regular},
              {"support_size", s.support_size}};
}

// `with_timing` false drops the only nondeterministic field.
inline Json to_json(const CatalogEntry& e, bool with_timing = true) {
  Json reports = Json::array();
  for (const auto& r : e.reports) reports.push_back(to_json(r));
  Json out{{"version", std::string(kCatalogVersion)},
           {"field", to_json(e.field)},
           {"terms", to_json(e.terms)},
           {"status", std::string(to_string(e.status))},
           {"flags", e.flags},
           {"profile", to_json(e.profile)},
           {"reports", reports},
           {"identities", e.identities ? to_json(*e.identities) : Json(nullptr)},
           {"scheme", e.scheme ? to_json(*e.scheme) : Json(nullptr)},
           {"schur_span", e.schur_span ? to_json(*e.schur_span) : Json(nullptr)}};
  if (with_timing) out["timing"] = Json{{"elapsed_us", e.elapsed_us}};
  return out;
}

inline CatalogEntry catalog_entry_from_json(const Json& j) {
  try {
    if (j.at("version").get<std::string>() != kCatalogVersion) {
      throw Error(ErrorCode::kParseError, "unsupported catalog version");
    }
    CatalogEntry e;
    e.field = field_spec_from_json(j.at("field"));
    e.terms = terms_from_json(j.at("terms"));
    e.status = entry_status_from_string(j.at("status").get<std::string>());
    e.flags = j.at("flags").get<std::vector<std::string>>();
    const Json& prof = j.at("profile");
    auto opt = [&](const char* key) -> std::optional<int> {
      const Json& v = prof.at(key);
      return v.is_null() ? std::nullopt : std::optional<int>(v.get<int>());
    };
    e.profile.s = opt("s");
    e.profile.epsilon = opt("epsilon");
    e.profile.h = opt("h");
    e.profile.l = opt("l");
    e.profile.balanced = prof.at("balanced").get<bool>();
    e.profile.weakly_regular = prof.at("weakly_regular").get<bool>();
    e.profile.support_size = prof.at("support_size").get<std::int64_t>();
    for (const auto& r : j.at("reports")) {
      e.reports.push_back(pds_report_from_json(r));
    }
    if (!j.at("identities").is_null()) {
      e.identities = identity_report_from_json(j.at("identities"));
    }
    if (!j.at("scheme").is_null()) {
      e.scheme = scheme_verification_from_json(j.at("scheme"));
    }
    if (!j.at("schur_span").is_null()) {
      e.schur_span = schur_span_from_json(j.at("schur_span"));
    }
    if (j.contains("timing")) {
      e.elapsed_us = j.at("timing").at("elapsed_us").get<std::int64_t>();
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kParseError, std::string("catalog entry: ") + ex.what());
  }
}

inline CatalogSummary write_catalog(const std::vector<CatalogEntry>& entries,
                                    const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot open " + path);
  CatalogSummary summary;
  for (const auto& e : entries) {
    out << to_json(e).dump() << '\n';
    summary.add(e);
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed for " + path);
  return summary;
}

inline std::vector<CatalogEntry> read_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path);
  std::vector<CatalogEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::kParseError,
                  path + ":" + std::to_string(lineno) + ": " + ex.what());
    }
    out.push_back(catalog_entry_from_json(j));
  }
  return out;
}

}  // namespace wrp

#endif  // WRP_CATALOG_HPP_
