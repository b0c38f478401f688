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

// Candidate partial difference sets cut out of a p-ary function, brute-force
// PDS and strongly-regular-graph verifiers, and the closed-form parameter
// predictions for weakly regular plateaued functions.

#ifndef WRP_PDS_HPP_
#define WRP_PDS_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wrp/error.hpp"
#include "wrp/field.hpp"
#include "wrp/numtheory.hpp"
#include "wrp/parallel.hpp"
#include "wrp/pfun.hpp"
#include "wrp/plateau.hpp"

namespace wrp {

enum class SelectorKind {
  kLevel,                 // D_{f,j}, may contain 0
  kZeroPunctured,         // f(x) = 0, x != 0
  kSquares,               // f(x) a nonzero square
  kSquaresWithZeroLevel,  // f(x) a square or 0, x != 0
  kNonSquares,            // f(x) a non-square
};

struct SubsetSelector {
  SelectorKind kind = SelectorKind::kZeroPunctured;
  int level = 0;  // only for kLevel

  static SubsetSelector level_set(int j) { return {SelectorKind::kLevel, j}; }
  static SubsetSelector zero_punctured() {
    return {SelectorKind::kZeroPunctured, 0};
  }
  static SubsetSelector squares() { return {SelectorKind::kSquares, 0}; }
  static SubsetSelector squares_with_zero() {
    return {SelectorKind::kSquaresWithZeroLevel, 0};
  }
  static SubsetSelector nonsquares() { return {SelectorKind::kNonSquares, 0}; }

  // The four selectors that come with a parameter prediction.
  static std::vector<SubsetSelector> predicted_selectors() {
    return {zero_punctured(), squares(), nonsquares(), squares_with_zero()};
  }

  std::string name() const {
    switch (kind) {
      case SelectorKind::kLevel: return "level:" + std::to_string(level);
      case SelectorKind::kZeroPunctured: return "zero";
      case SelectorKind::kSquares: return "squares";
      case SelectorKind::kSquaresWithZeroLevel: return "squares0";
      case SelectorKind::kNonSquares: return "nonsquares";
    }
    return "?";
  }

  static SubsetSelector parse(std::string_view text) {
    if (text == "zero") return zero_punctured();
    if (text == "squares") return squares();
    if (text == "squares0") return squares_with_zero();
    if (text == "nonsquares") return nonsquares();
    if (text.rfind("level:", 0) == 0) {
      try {
        return level_set(std::stoi(std::string(text.substr(6))));
      } catch (const std::exception&) {
      }
    }
    throw Error(ErrorCode::kParseError,
                "unknown selector '" + std::string(text) + "'");
  }

  friend bool operator==(const SubsetSelector&,
                         const SubsetSelector&) = default;
};

// (v, k, lambda, mu). Signed so that closed-form predictions evaluated outside
// their hypotheses stay representable.
struct PdsParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  // k(k - lambda - 1) = (v - k - 1) mu.
  bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }

  std::string to_string() const {
    return "(" + std::to_string(v) + ", " + std::to_string(k) + ", " +
           std::to_string(lambda) + ", " + std::to_string(mu) + ")";
  }

  friend bool operator==(const PdsParams&, const PdsParams&) = default;
};

inline std::vector<std::uint32_t> build_subset(const PFunction& f,
                                               const SubsetSelector& sel) {
  const FieldCtx& ctx = f.ctx();
  const int p = ctx.p();
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < ctx.order(); ++x) {
    const int v = f(x);
    bool keep = false;
    switch (sel.kind) {
      case SelectorKind::kLevel:
        keep = v == mod(sel.level, p);
        break;
      case SelectorKind::kZeroPunctured:
        keep = x != 0 && v == 0;
        break;
      case SelectorKind::kSquares:
        keep = x != 0 && v != 0 && quadratic_character(v, p) == 1;
        break;
      case SelectorKind::kSquaresWithZeroLevel:
        keep = x != 0 && (v == 0 || quadratic_character(v, p) == 1);
        break;
      case SelectorKind::kNonSquares:
        keep = x != 0 && v != 0 && quadratic_character(v, p) == -1;
        break;
    }
    if (keep) out.push_back(x);
  }
  return out;
}

namespace detail {

inline std::vector<std::uint32_t> checked_difference_set(
    std::vector<std::uint32_t> d, const FieldCtx& ctx) {
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  if (!d.empty() && d.back() >= ctx.order()) {
    throw Error(ErrorCode::kMixedFields, "subset index out of range");
  }
  if (!d.empty() && d.front() == 0) {
    throw Error(ErrorCode::kContainsIdentity, "0 lies in the subset");
  }
  for (std::uint32_t x : d) {
    if (!std::binary_search(d.begin(), d.end(), ctx.neg_index(x))) {
      throw Error(ErrorCode::kNotSymmetric,
                  "subset is not closed under negation (element " +
                      std::to_string(x) + ")");
    }
  }
  return d;
}

}  // namespace detail

// Brute-force PDS test by difference counting. For D = F* the mu condition is
// vacuous and mu is reported equal to lambda; for D empty, (v, 0, 0, 0).
inline std::optional<PdsParams> verify_pds(std::vector<std::uint32_t> d,
                                           const FieldCtx& ctx) {
  d = detail::checked_difference_set(std::move(d), ctx);
  const std::uint32_t q = ctx.order();
  std::vector<std::int64_t> hist(q, 0);
  std::vector<char> member(q, 0);
  for (std::uint32_t g : d) member[g] = 1;
  for (std::uint32_t g : d) {
    for (std::uint32_t h : d) ++hist[ctx.sub_index(g, h)];
  }
  if (hist[0] != static_cast<std::int64_t>(d.size())) {
    throw std::logic_error("difference histogram lost the diagonal");
  }
  std::optional<std::int64_t> lambda, mu;
  for (std::uint32_t x = 1; x < q; ++x) {
    auto& slot = member[x] ? lambda : mu;
    if (slot && *slot != hist[x]) return std::nullopt;
    slot = hist[x];
  }
  PdsParams out{q, static_cast<std::int64_t>(d.size()), lambda.value_or(0), 0};
  out.mu = mu.value_or(out.lambda);
  return out;
}

// Builds Cay(G, D) and checks strong regularity vertex by vertex with
// bitset neighbourhoods.
inline std::optional<PdsParams> verify_srg(std::vector<std::uint32_t> d,
                                           const FieldCtx& ctx,
                                           unsigned workers = 0) {
  d = detail::checked_difference_set(std::move(d), ctx);
  const std::uint32_t q = ctx.order();
  const std::size_t words = (q + 63) / 64;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(q) * words, 0);
  for (std::uint32_t g = 0; g < q; ++g) {
    for (std::uint32_t x : d) {
      std::uint32_t h = ctx.sub_index(g, x);  // g - h = x
      adj[g * words + h / 64] |= std::uint64_t{1} << (h % 64);
    }
  }
  auto row = [&](std::uint32_t g) { return adj.data() + g * words; };
  auto adjacent = [&](std::uint32_t g, std::uint32_t h) {
    return (row(g)[h / 64] >> (h % 64)) & 1;
  };

  // Per-vertex summary: degree and the set of common-neighbour counts seen
  // on adjacent / non-adjacent later vertices (-1 = none seen, -2 = varied).
  struct Summary {
    std::int64_t degree = 0;
    std::int64_t lambda = -1;
    std::int64_t mu = -1;
  };
  auto merge = [](std::int64_t& slot, std::int64_t value) {
    if (slot == -1) {
      slot = value;
    } else if (slot != value) {
      slot = -2;
    }
  };
  std::vector<Summary> summaries(q);
  parallel_for(q, workers, [&](std::size_t gi) {
    const auto g = static_cast<std::uint32_t>(gi);
    Summary s;
    for (std::size_t w = 0; w < words; ++w) s.degree += std::popcount(row(g)[w]);
    for (std::uint32_t h = g + 1; h < q; ++h) {
      std::int64_t common = 0;
      for (std::size_t w = 0; w < words; ++w) {
        common += std::popcount(row(g)[w] & row(h)[w]);
      }
      merge(adjacent(g, h) ? s.lambda : s.mu, common);
    }
    summaries[g] = s;
  });

  std::int64_t degree = summaries[0].degree;
  std::int64_t lambda = -1, mu = -1;
  for (const auto& s : summaries) {
    if (s.degree != degree) return std::nullopt;
    if (s.lambda == -2 || s.mu == -2) return std::nullopt;
    if (s.lambda >= 0) merge(lambda, s.lambda);
    if (s.mu >= 0) merge(mu, s.mu);
    if (lambda == -2 || mu == -2) return std::nullopt;
  }
  PdsParams out{q, degree, lambda < 0 ? 0 : lambda, 0};
  out.mu = mu < 0 ? out.lambda : mu;
  return out;
}

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t require_integer(const Rational& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw Error(ErrorCode::kNonIntegralPrediction,
                std::string(what) + " evaluates to the non-integer " + r.str());
  }
  return static_cast<std::int64_t>(boost::multiprecision::numerator(r));
}

}  // namespace detail

// Closed-form (v, k, lambda, mu) for a selector of a WRP function with n + s
// even. The formulas are evaluated exactly as printed; the brute-force
// verifiers adjudicate.
inline PdsParams predicted_params(const PlateauProfile& profile,
                                  const SubsetSelector& sel) {
  if (sel.kind == SelectorKind::kLevel) {
    throw Error(ErrorCode::kUnsupportedSelector,
                "level sets have no parameter prediction");
  }
  if (!profile.wrp) {
    throw Error(ErrorCode::kNotWrpCertified, "profile carries no WRP evidence");
  }
  using detail::Rational;
  const Rational root(half_weight_factor(profile));  // sqrt(p*)^{n+s-2}
  require_origin_in_support(profile);
  const std::int64_t p = profile.p;
  const Rational v(big_pow(p, static_cast<unsigned>(profile.n)));
  const Rational pn1 = v / p;        // p^{n-1}
  const Rational pn2 = v / (p * p);  // p^{n-2}
  const Rational e(*profile.epsilon * quadratic_character(-1, p));
  const Rational quarter = pn2 * (p - 1) * (p - 1) / 4;

  Rational k, lambda, mu;
  switch (sel.kind) {
    case SelectorKind::kZeroPunctured:
      k = pn1 + e * (p - 1) * root - 1;
      lambda = pn2 + e * (p - 1) * root - 2;
      mu = pn2 + e * root;
      break;
    case SelectorKind::kSquares:
    case SelectorKind::kNonSquares:
      k = Rational(p - 1, 2) * (pn1 - e * root);
      lambda = quarter - e * Rational(p - 3, 2) * root;
      mu = quarter - e * Rational(p - 1, 2) * root;
      break;
    case SelectorKind::kSquaresWithZeroLevel:
      k = Rational(p + 1, 2) * pn1 + e * Rational(p - 1, 2) * root - 1;
      lambda = quarter - 2 + e * Rational(p - 1, 2) * root;
      mu = quarter + e * Rational(p - 1, 2) * root;
      break;
    case SelectorKind::kLevel:
      break;
  }
  return PdsParams{detail::require_integer(v, "v"),
                   detail::require_integer(k, "k"),
                   detail::require_integer(lambda, "lambda"),
                   detail::require_integer(mu, "mu")};
}

// Measured and predicted parameters agree. lambda is only compared when the
// measured set is nonempty and mu only when its complement in F* is nonempty;
// otherwise the corresponding count is vacuous.
inline bool params_consistent(const PdsParams& measured,
                              const PdsParams& predicted) {
  if (measured.v != predicted.v || measured.k != predicted.k) return false;
  if (measured.k > 0 && measured.lambda != predicted.lambda) return false;
  if (measured.k < measured.v - 1 && measured.mu != predicted.mu) return false;
  return true;
}

struct PdsReport {
  SubsetSelector selector;
  std::int64_t set_size = 0;
  bool is_pds = false;
  std::optional<PdsParams> measured;
  std::optional<PdsParams> predicted;
  bool match = false;
  bool degenerate = false;
  // Why `predicted` or `measured` is missing, when it is.
  std::optional<std::string> note;

  friend bool operator==(const PdsReport&, const PdsReport&) = default;
};

// Builds the selected subset, verifies it both as a PDS and as a Cayley SRG
// (which must agree), and compares against the closed-form prediction.
inline PdsReport verify_selector(const PFunction& f,
                                 const PlateauProfile& profile,
                                 const SubsetSelector& sel,
                                 unsigned workers = 0) {
  PdsReport report;
  report.selector = sel;
  auto subset = build_subset(f, sel);
  report.set_size = static_cast<std::int64_t>(subset.size());
  try {
    report.measured = verify_pds(subset, f.ctx());
    auto graph = verify_srg(subset, f.ctx(), workers);
    if (graph != report.measured) {
      throw std::logic_error("PDS and Cayley-graph verifiers disagree on " +
                             sel.name());
    }
  } catch (const Error& e) {
    report.note = std::string(to_string(e.code()));
  }
  report.is_pds = report.measured.has_value();
  if (report.measured) {
    const auto& m = *report.measured;
    report.degenerate = m.k == 0 || m.k == m.v - 1;
  }
  if (sel.kind != SelectorKind::kLevel) {
    try {
      report.predicted = predicted_params(profile, sel);
    } catch (const Error& e) {
      if (!report.note) report.note = std::string(to_string(e.code()));
    }
  }
  report.match = report.measured && report.predicted &&
                 params_consistent(*report.measured, *report.predicted);
  return report;
}

}  // namespace wrp

#endif  // WRP_PDS_HPP_
