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

// Command-line front end: analyze, verify, identities, scheme, search,
// recheck. Exit status 0 means every requested check passed, 1 means a check
// found a mismatch, 2 means bad usage or input.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wrp/wrp.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string field;
  std::string terms;
  unsigned parallel = 0;
  bool json = false;
  std::vector<std::string> selectors;
  std::int64_t budget = 50;
  std::string out;
  std::string catalog;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

wrp::FieldCtx parse_field(const std::string& text) {
  if (text.empty()) throw UsageError("--field is required");
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--field: '" + item + "' is not an integer");
    }
  }
  if (parts.size() < 2) throw UsageError("--field expects p,n[,modulus...]");
  std::optional<std::vector<int>> modulus;
  if (parts.size() > 2) modulus.emplace(parts.begin() + 2, parts.end());
  return wrp::FieldCtx::build(parts[0], parts[1], modulus);
}

std::vector<wrp::TermSpec> parse_terms(const std::string& text) {
  if (text.empty()) throw UsageError("--terms is required");
  wrp::Json j;
  try {
    j = wrp::Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw wrp::Error(wrp::ErrorCode::kParseError, e.what());
  }
  return wrp::terms_from_json(j);
}

std::string field_label(const wrp::FieldCtx& ctx) {
  std::string out = "GF(" + std::to_string(ctx.p()) + "^" +
                    std::to_string(ctx.n()) + ") modulus [";
  const auto& m = ctx.spec().modulus;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += (i ? "," : "") + std::to_string(m[i]);
  }
  return out + "]";
}

std::string opt_text(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

std::string params_text(const std::optional<wrp::PdsParams>& p) {
  return p ? p->to_string() : "-";
}

void print_row(const std::string& key, const std::string& value) {
  std::cout << std::left << std::setw(16) << key << value << '\n';
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? " " : "") + std::to_string(v[i]);
  }
  return out;
}

void emit(const wrp::Json& j) { std::cout << j.dump(2) << '\n'; }

wrp::Json header(const wrp::FieldCtx& ctx,
                 const std::vector<wrp::TermSpec>& terms) {
  return wrp::Json{{"field", wrp::to_json(ctx.spec())},
                   {"terms", wrp::to_json(terms)}};
}

// Certification shared by the per-function subcommands.
struct Subject {
  wrp::FieldCtx ctx;
  std::vector<wrp::TermSpec> terms;
  wrp::PFunction f;
  wrp::Certification cert;
};

Subject load_subject(const Options& opt) {
  wrp::FieldCtx ctx = parse_field(opt.field);
  auto terms = parse_terms(opt.terms);
  wrp::PFunction f = wrp::from_term_specs(ctx, terms);
  wrp::Certification cert = wrp::certify(f, opt.parallel);
  return Subject{ctx, std::move(terms), std::move(f), std::move(cert)};
}

void require_wrp(const Subject& s) {
  if (!s.cert.profile.wrp) {
    std::string why;
    for (const auto& f : s.cert.failures) why += (why.empty() ? "" : "; ") + f;
    throw wrp::Error(wrp::ErrorCode::kNotWrpCertified, why);
  }
}

int run_analyze(const Options& opt) {
  Subject s = load_subject(opt);
  const auto& prof = s.cert.profile;
  const auto counts = wrp::level_counts(s.f);
  std::optional<std::vector<std::int64_t>> predicted;
  std::string predicted_note;
  if (prof.wrp) {
    try {
      predicted = wrp::predicted_level_counts(prof);
    } catch (const wrp::Error& e) {
      predicted_note = std::string(wrp::to_string(e.code()));
    }
  }
  if (opt.json) {
    wrp::Json out = header(s.ctx, s.terms);
    out["profile"] = wrp::to_json(prof);
    out["wrp_failures"] = s.cert.failures;
    out["level_counts"] = counts;
    out["predicted_level_counts"] =
        predicted ? wrp::Json(*predicted) : wrp::Json(nullptr);
    emit(out);
    return kExitPass;
  }
  print_row("field", field_label(s.ctx));
  print_row("balanced", prof.balanced ? "yes" : "no");
  print_row("s", opt_text(prof.s));
  print_row("epsilon", opt_text(prof.epsilon));
  print_row("weakly regular", prof.weakly_regular ? "yes" : "no");
  print_row("support size", std::to_string(prof.support.size()));
  if (prof.wrp) {
    print_row("WRP", "h=" + std::to_string(prof.wrp->h) +
                         " l=" + std::to_string(prof.wrp->l));
  } else {
    std::string why;
    for (const auto& f : s.cert.failures) why += (why.empty() ? "" : "; ") + f;
    print_row("WRP", "no (" + why + ")");
  }
  print_row("level counts", join(counts));
  if (predicted) {
    print_row("predicted", join(*predicted));
  } else if (!predicted_note.empty()) {
    print_row("predicted", "- (" + predicted_note + ")");
  }
  return kExitPass;
}

int run_verify(const Options& opt) {
  Subject s = load_subject(opt);
  require_wrp(s);
  wrp::half_weight_factor(s.cert.profile);  // surfaces ParityViolation
  std::vector<wrp::SubsetSelector> selectors;
  if (opt.selectors.empty()) {
    selectors = wrp::SubsetSelector::predicted_selectors();
  } else {
    for (const auto& name : opt.selectors) {
      selectors.push_back(wrp::SubsetSelector::parse(name));
    }
  }
  std::vector<wrp::PdsReport> reports;
  bool mismatch = false;
  for (const auto& sel : selectors) {
    reports.push_back(wrp::verify_selector(s.f, s.cert.profile, sel, opt.parallel));
    const auto& r = reports.back();
    if (sel.kind != wrp::SelectorKind::kLevel && !r.match) mismatch = true;
  }
  if (opt.json) {
    wrp::Json out = header(s.ctx, s.terms);
    wrp::Json arr = wrp::Json::array();
    for (const auto& r : reports) arr.push_back(wrp::to_json(r));
    out["reports"] = arr;
    out["all_match"] = !mismatch;
    emit(out);
  } else {
    std::cout << std::left << std::setw(12) << "selector" << std::setw(6)
              << "size" << std::setw(6) << "pds" << std::setw(24)
              << "measured" << std::setw(24) << "predicted" << "match\n";
    for (const auto& r : reports) {
      std::cout << std::left << std::setw(12) << r.selector.name()
                << std::setw(6) << r.set_size << std::setw(6)
                << (r.is_pds ? "yes" : "no") << std::setw(24)
                << params_text(r.measured) << std::setw(24)
                << params_text(r.predicted) << (r.match ? "yes" : "NO");
      if (r.note) std::cout << "  (" << *r.note << ")";
      std::cout << '\n';
    }
  }
  return mismatch ? kExitMismatch : kExitPass;
}

int run_identities(const Options& opt) {
  Subject s = load_subject(opt);
  require_wrp(s);
  auto report = wrp::verify_L_identities(s.f, s.cert.profile, opt.parallel);
  if (opt.json) {
    wrp::Json out = header(s.ctx, s.terms);
    out["identities"] = wrp::to_json(report);
    emit(out);
  } else {
    for (const auto& c : report.checks) {
      std::string verdict = c.skipped ? "skipped" : c.holds ? "holds" : "FAILS";
      std::cout << std::left << std::setw(28) << c.name << std::setw(9)
                << verdict << c.witness << '\n';
    }
  }
  return report.all_hold() ? kExitPass : kExitMismatch;
}

int run_scheme(const Options& opt) {
  Subject s = load_subject(opt);
  auto classes = wrp::build_classes(s.f);
  auto verification = wrp::verify_scheme(classes, s.ctx, opt.parallel);
  std::optional<wrp::SchurSpanReport> span;
  if (s.cert.profile.wrp) {
    span = wrp::verify_schur_span(s.f, s.cert.profile, opt.parallel);
  }
  const bool ok = verification.table.has_value() && (!span || span->holds);
  if (opt.json) {
    wrp::Json out = header(s.ctx, s.terms);
    out["scheme"] = wrp::to_json(verification);
    out["schur_span"] = span ? wrp::to_json(*span) : wrp::Json(nullptr);
    emit(out);
    return ok ? kExitPass : kExitMismatch;
  }
  print_row("relations", std::to_string(classes.relation_count()));
  print_row("class number", std::to_string(classes.class_number()));
  print_row("class sizes", join(classes.sizes()));
  if (verification.table) {
    const auto& t = *verification.table;
    print_row("scheme", "yes");
    for (std::size_t k = 0; k < t.relations; ++k) {
      std::cout << "p_ij^" << k << ":\n";
      for (std::size_t i = 0; i < t.relations; ++i) {
        std::cout << "  ";
        for (std::size_t j = 0; j < t.relations; ++j) {
          std::cout << std::right << std::setw(6) << t.at(i, j, k);
        }
        std::cout << '\n';
      }
    }
  } else {
    print_row("scheme", "NO (" + std::string(wrp::to_string(*verification.failure)) +
                            ": " + verification.witness + ")");
  }
  if (span) {
    print_row("schur span", span->holds ? "holds" : "FAILS (" + span->witness + ")");
  } else {
    print_row("schur span", "- (not WRP)");
  }
  return ok ? kExitPass : kExitMismatch;
}

void print_entry_row(std::size_t index, const wrp::CatalogEntry& e) {
  std::cout << std::right << std::setw(5) << index << "  " << std::left
            << std::setw(11) << wrp::to_string(e.status) << std::setw(4)
            << opt_text(e.profile.s) << std::setw(5)
            << opt_text(e.profile.epsilon)
            << std::setw(9) << (e.has_mismatch() ? "MISMATCH" : "-")
            << wrp::to_json(e.terms).dump() << '\n';
}

int run_search(const Options& opt) {
  wrp::FieldCtx ctx = parse_field(opt.field);
  std::vector<wrp::CatalogEntry> entries;
  if (!opt.json) {
    std::cout << std::right << std::setw(5) << "#" << "  " << std::left
              << std::setw(11) << "status" << std::setw(4) << "s"
              << std::setw(5) << "eps" << std::setw(9) << "finding"
              << "terms\n";
  }
  wrp::search_quadratics(
      ctx, opt.budget,
      [&](wrp::CatalogEntry e) {
        if (!opt.json) print_entry_row(entries.size(), e);
        entries.push_back(std::move(e));
      },
      opt.parallel);
  wrp::CatalogSummary summary;
  if (!opt.out.empty()) {
    summary = wrp::write_catalog(entries, opt.out);
  } else {
    for (const auto& e : entries) summary.add(e);
  }
  if (opt.json) {
    wrp::Json arr = wrp::Json::array();
    for (const auto& e : entries) arr.push_back(wrp::to_json(e, false));
    wrp::Json out{{"field", wrp::to_json(ctx.spec())},
                  {"budget", opt.budget},
                  {"summary", wrp::to_json(summary)},
                  {"entries", arr}};
    emit(out);
  } else {
    std::cout << "certified " << summary.certified << ", degenerate "
              << summary.degenerate << ", rejected " << summary.rejected
              << ", total " << summary.total << ", mismatches "
              << summary.mismatches << '\n';
  }
  return summary.mismatches > 0 ? kExitMismatch : kExitPass;
}

int run_recheck(const Options& opt) {
  auto stored = wrp::read_catalog(opt.catalog);
  wrp::Json rows = wrp::Json::array();
  bool drift = false;
  std::int64_t mismatches = 0;
  for (std::size_t i = 0; i < stored.size(); ++i) {
    const auto& old = stored[i];
    auto fresh = wrp::run_pipeline(wrp::FieldCtx::build(old.field), old.terms,
                                   opt.parallel);
    const bool same = fresh.same_verdicts(old);
    drift = drift || !same;
    if (fresh.has_mismatch()) ++mismatches;
    rows.push_back(wrp::Json{{"index", i},
                             {"status", std::string(wrp::to_string(fresh.status))},
                             {"identical", same},
                             {"mismatch", fresh.has_mismatch()}});
    if (!opt.json) {
      std::cout << std::right << std::setw(5) << i << "  " << std::left
                << std::setw(11) << wrp::to_string(fresh.status)
                << std::setw(12) << (same ? "identical" : "CHANGED")
                << (fresh.has_mismatch() ? "MISMATCH" : "-") << '\n';
    }
  }
  if (opt.json) {
    emit(wrp::Json{{"catalog", opt.catalog},
                   {"entries", rows},
                   {"identical", !drift},
                   {"mismatches", mismatches}});
  } else {
    std::cout << stored.size() << " entries, "
              << (drift ? "verdicts changed" : "verdicts identical") << ", "
              << mismatches << " mismatches\n";
  }
  return drift || mismatches > 0 ? kExitMismatch : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly regular plateaued functions, partial difference sets "
               "and association schemes"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool function_input) {
    cmd->add_option("--field", opt.field, "p,n[,modulus coefficients, low first]")
        ->required();
    if (function_input) {
      cmd->add_option("--terms", opt.terms,
                      R"(JSON array of {"c_power": int|null, "d": int})")
          ->required();
    }
    cmd->add_option("--parallel", opt.parallel, "worker threads, 0 = all cores");
    cmd->add_flag("--json", opt.json, "machine-readable output");
  };

  auto* analyze = app.add_subcommand("analyze", "Walsh profile and WRP check");
  add_common(analyze, true);
  auto* verify = app.add_subcommand("verify", "PDS/SRG verification of subsets");
  add_common(verify, true);
  verify->add_option("--selector", opt.selectors,
                     "zero, squares, nonsquares, squares0 or level:j");
  auto* identities = app.add_subcommand("identities", "group-ring identity audit");
  add_common(identities, true);
  auto* scheme = app.add_subcommand("scheme", "association scheme check");
  add_common(scheme, true);
  auto* search = app.add_subcommand("search", "catalog search over quadratic forms");
  add_common(search, false);
  search->add_option("--budget", opt.budget, "maximum number of candidates");
  search->add_option("--out", opt.out, "catalog file to write");
  auto* recheck = app.add_subcommand("recheck", "re-verify a catalog file");
  recheck->add_option("catalog", opt.catalog, "catalog file")->required();
  recheck->add_option("--parallel", opt.parallel, "worker threads, 0 = all cores");
  recheck->add_flag("--json", opt.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(opt);
    if (verify->parsed()) return run_verify(opt);
    if (identities->parsed()) return run_identities(opt);
    if (scheme->parsed()) return run_scheme(opt);
    if (search->parsed()) return run_search(opt);
    if (recheck->parsed()) return run_recheck(opt);
  } catch (const wrp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
