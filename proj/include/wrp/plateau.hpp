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

// Plateau classification: amplitude s, Walsh support, weak regularity with
// sign epsilon and dual g, and membership in the homogeneous class (WRP).

#ifndef WRP_PLATEAU_HPP_
#define WRP_PLATEAU_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wrp/cyclo.hpp"
#include "wrp/error.hpp"
#include "wrp/numtheory.hpp"
#include "wrp/pfun.hpp"

namespace wrp {

struct WrpEvidence {
  int h = 0;  // f(a x) = a^h f(x)
  int l = 0;  // g(a b) = a^l g(b) on the support
  bool support_scale_closed = false;

  friend bool operator==(const WrpEvidence&, const WrpEvidence&) = default;
};

struct PlateauProfile {
  int p = 0;
  int n = 0;
  bool balanced = false;
  std::optional<int> s;
  std::vector<std::uint32_t> support;  // ascending element indices
  std::optional<int> epsilon;
  std::map<std::uint32_t, int> dual;  // g on the support
  bool weakly_regular = false;
  std::optional<WrpEvidence> wrp;

  bool plateaued() const { return s.has_value(); }
  bool in_support(std::uint32_t beta) const {
    return std::binary_search(support.begin(), support.end(), beta);
  }
  // n + s, defined for plateaued profiles.
  int weight() const { return n + s.value(); }

  friend bool operator==(const PlateauProfile&,
                         const PlateauProfile&) = default;
};

inline PlateauProfile analyze(const WalshSpectrum& spectrum) {
  const FieldCtx& ctx = spectrum.ctx();
  PlateauProfile prof;
  prof.p = ctx.p();
  prof.n = ctx.n();
  prof.balanced = is_balanced(spectrum);

  std::optional<BigInt> level;
  bool two_valued = true;
  for (std::uint32_t b = 0; b < ctx.order(); ++b) {
    const CycloInt& m = spectrum.magnitude_sq(b);
    if (m.is_zero()) continue;
    prof.support.push_back(b);
    auto v = m.as_integer();
    if (!v || (level && *level != *v)) {
      two_valued = false;
    } else {
      level = v;
    }
  }
  if (!two_valued || !level) {
    return prof;
  }
  // level = p^{n+s} with 0 <= s <= n.
  int s = -1;
  for (int e = prof.n; e <= 2 * prof.n; ++e) {
    if (big_pow(prof.p, e) == *level) {
      s = e - prof.n;
      break;
    }
  }
  if (s < 0) return prof;
  prof.s = s;

  const CycloInt scale =
      cyclo_pow(gauss_sum(prof.p), static_cast<unsigned>(prof.n + s));
  std::optional<int> sign;
  std::map<std::uint32_t, int> dual;
  for (std::uint32_t b : prof.support) {
    auto match = match_scaled_root(spectrum[b], scale);
    if (!match || (sign && *sign != match->sign)) {
      return prof;
    }
    sign = match->sign;
    dual[b] = match->exponent;
  }
  prof.epsilon = sign;
  prof.dual = std::move(dual);
  prof.weakly_regular = true;
  return prof;
}

inline PlateauProfile analyze(const PFunction& f, unsigned workers = 0) {
  return analyze(walsh_transform(f, workers));
}

struct WrpCheck {
  std::optional<WrpEvidence> evidence;
  std::vector<std::string> failures;  // empty iff evidence is present
};

// Smallest admissible exponent e with value(a * x) = a^e value(x) for all
// a in Z_p^* and all x in `domain`.
template <typename Value>
std::optional<int> find_homogeneity_exponent(
    const FieldCtx& ctx, const std::vector<std::uint32_t>& domain,
    Value&& value) {
  const int p = ctx.p();
  for (int e : admissible_homogeneity_exponents(p)) {
    bool holds = true;
    for (int a = 1; a < p && holds; ++a) {
      const std::int64_t ae = pow_mod(a, static_cast<std::uint64_t>(e), p);
      for (std::uint32_t x : domain) {
        auto scaled = value(ctx.scale_index(x, a));
        auto base = value(x);
        if (!scaled || !base || *scaled != (ae * *base) % p) {
          holds = false;
          break;
        }
      }
    }
    if (holds) return e;
  }
  return std::nullopt;
}

inline WrpCheck check_wrp_detailed(const PFunction& f,
                                   const PlateauProfile& profile) {
  if (!profile.weakly_regular) {
    throw Error(ErrorCode::kProfileNotWeaklyRegular,
                "WRP membership needs a weakly regular profile");
  }
  const FieldCtx& ctx = f.ctx();
  WrpCheck out;
  if (f(0) != 0) out.failures.push_back("f(0) != 0");
  if (profile.balanced) out.failures.push_back("balanced");

  std::vector<std::uint32_t> everything(ctx.order());
  for (std::uint32_t x = 0; x < ctx.order(); ++x) everything[x] = x;
  auto h = find_homogeneity_exponent(
      ctx, everything, [&](std::uint32_t x) -> std::optional<int> {
        return f(x);
      });
  if (!h) out.failures.push_back("no homogeneity exponent h");

  std::vector<char> member(ctx.order(), 0);
  for (std::uint32_t b : profile.support) member[b] = 1;
  bool closed = true;
  for (std::uint32_t b = 0; b < ctx.order() && closed; ++b) {
    for (int z = 1; z < ctx.p(); ++z) {
      if (member[ctx.scale_index(b, z)] != member[b]) {
        closed = false;
        break;
      }
    }
  }
  if (!closed) out.failures.push_back("support not closed under Z_p^* scaling");

  std::optional<int> l;
  if (closed) {
    l = find_homogeneity_exponent(
        ctx, profile.support, [&](std::uint32_t b) -> std::optional<int> {
          auto it = profile.dual.find(b);
          if (it == profile.dual.end()) return std::nullopt;
          return it->second;
        });
    if (!l) out.failures.push_back("no dual homogeneity exponent l");
  }
  if (out.failures.empty()) out.evidence = WrpEvidence{*h, *l, closed};
  return out;
}

inline std::optional<WrpEvidence> check_wrp(const PFunction& f,
                                            const PlateauProfile& profile) {
  return check_wrp_detailed(f, profile).evidence;
}

struct Certification {
  PlateauProfile profile;             // wrp filled in on success
  std::vector<std::string> failures;  // empty iff profile.wrp is present
};

// analyze followed by the WRP membership check.
inline Certification certify(const PFunction& f, unsigned workers = 0) {
  Certification out{analyze(f, workers), {}};
  if (!out.profile.plateaued()) {
    out.failures.push_back("not plateaued");
  } else if (!out.profile.weakly_regular) {
    out.failures.push_back("not weakly regular");
  } else {
    auto check = check_wrp_detailed(f, out.profile);
    out.profile.wrp = check.evidence;
    out.failures = std::move(check.failures);
  }
  return out;
}

// sqrt(p*)^{n+s-2} as an integer; n + s must be even.
inline std::int64_t half_weight_factor(const PlateauProfile& profile) {
  if (!profile.s) {
    throw Error(ErrorCode::kProfileNotWeaklyRegular, "profile not plateaued");
  }
  int w = profile.weight();
  if (w % 2 != 0) {
    throw Error(ErrorCode::kParityViolation,
                "n + s = " + std::to_string(w) + " is odd");
  }
  return static_cast<std::int64_t>(
      p_star_pow(profile.p, static_cast<unsigned>((w - 2) / 2)));
}

// Checks that W(0) = eps * sqrt(p*)^{n+s}, the standing assumption behind the
// level-count and PDS parameter formulas.
inline void require_origin_in_support(const PlateauProfile& profile) {
  if (!profile.weakly_regular) {
    throw Error(ErrorCode::kProfileNotWeaklyRegular,
                "profile is not weakly regular");
  }
  auto it = profile.dual.find(0);
  if (it == profile.dual.end()) {
    throw Error(ErrorCode::kZeroNotInSupport, "W(0) = 0");
  }
  if (it->second != 0) {
    throw Error(ErrorCode::kDualNonzeroAtOrigin,
                "W(0) carries the phase xi^" + std::to_string(it->second));
  }
}

// Closed-form level counts N_f(j) for weakly regular f with n+s even.
inline std::vector<std::int64_t> predicted_level_counts(
    const PlateauProfile& profile) {
  const std::int64_t sq = half_weight_factor(profile);
  require_origin_in_support(profile);
  const std::int64_t p = profile.p;
  const std::int64_t base =
      static_cast<std::int64_t>(ipow(p, static_cast<unsigned>(profile.n - 1)));
  const std::int64_t signed_sq =
      *profile.epsilon * quadratic_character(-1, p) * sq;
  std::vector<std::int64_t> out(p, base - signed_sq);
  out[0] = base + (p - 1) * signed_sq;
  return out;
}

}  // namespace wrp

#endif  // WRP_PLATEAU_HPP_
