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

// p-ary functions GF(p^n) -> Z_p stored as value tables, and their exact
// Walsh spectra W_f(b) = sum_x xi^{f(x) - Tr(b x)}.

#ifndef WRP_PFUN_HPP_
#define WRP_PFUN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrp/cyclo.hpp"
#include "wrp/error.hpp"
#include "wrp/field.hpp"
#include "wrp/numtheory.hpp"
#include "wrp/parallel.hpp"

namespace wrp {

class PFunction {
 public:
  PFunction(FieldCtx ctx, std::vector<int> values)
      : ctx_(std::move(ctx)), values_(std::move(values)) {
    if (values_.size() != ctx_.order()) {
      throw Error(ErrorCode::kInvalidDegree,
                  "value table length must equal p^n");
    }
    for (int v : values_) {
      if (v < 0 || v >= ctx_.p()) {
        throw Error(ErrorCode::kInvalidDegree, "values must lie in [0, p)");
      }
    }
  }

  static PFunction zero(const FieldCtx& ctx) {
    return PFunction(ctx, std::vector<int>(ctx.order(), 0));
  }

  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(std::uint32_t index) const { return values_[index]; }
  int at(const FieldElement& x) const {
    ctx_.coeffs(x);  // context check
    return values_[x.index()];
  }

  friend bool operator==(const PFunction& a, const PFunction& b) {
    return a.ctx_.id() == b.ctx_.id() && a.values_ == b.values_;
  }

 private:
  FieldCtx ctx_;
  std::vector<int> values_;
};

// One summand Tr(coefficient * x^exponent).
struct TraceTerm {
  FieldElement coefficient;
  std::uint64_t exponent;
};

// The CLI form of a trace term: coefficient g^c_power for the field's
// primitive element g, or 1 when c_power is absent.
struct TermSpec {
  std::optional<std::int64_t> c_power;
  std::uint64_t d = 1;

  friend bool operator==(const TermSpec&, const TermSpec&) = default;
};

// f(x) = sum_i Tr(c_i x^{d_i}), evaluated at every field element.
inline PFunction from_trace_poly(const FieldCtx& ctx,
                                 const std::vector<TraceTerm>& terms) {
  for (const auto& t : terms) {
    if (t.exponent == 0) {
      throw Error(ErrorCode::kExponentZero,
                  "trace terms need exponent >= 1 so that f(0) = 0");
    }
    ctx.coeffs(t.coefficient);  // context check
  }
  const int p = ctx.p();
  std::vector<int> values(ctx.order(), 0);
  for (std::uint32_t x = 0; x < ctx.order(); ++x) {
    int sum = 0;
    for (const auto& t : terms) {
      std::uint32_t mono = ctx.pow_index(x, t.exponent);
      sum += ctx.trace_index(ctx.mul_index(t.coefficient.index(), mono));
    }
    values[x] = sum % p;
  }
  return PFunction(ctx, std::move(values));
}

inline std::vector<TraceTerm> resolve_terms(const FieldCtx& ctx,
                                            const std::vector<TermSpec>& specs) {
  std::vector<TraceTerm> out;
  out.reserve(specs.size());
  const std::int64_t group = static_cast<std::int64_t>(ctx.order()) - 1;
  for (const auto& s : specs) {
    FieldElement c = ctx.one();
    if (s.c_power) {
      c = ctx.pow(ctx.primitive(),
                  static_cast<std::uint64_t>(mod(*s.c_power, group)));
    }
    out.push_back(TraceTerm{c, s.d});
  }
  return out;
}

inline PFunction from_term_specs(const FieldCtx& ctx,
                                 const std::vector<TermSpec>& specs) {
  return from_trace_poly(ctx, resolve_terms(ctx, specs));
}

// N_f(j) = #{x : f(x) = j} for j in Z_p.
inline std::vector<std::int64_t> level_counts(const PFunction& f) {
  std::vector<std::int64_t> counts(f.ctx().p(), 0);
  for (int v : f.values()) ++counts[v];
  return counts;
}

class WalshSpectrum {
 public:
  WalshSpectrum(FieldCtx ctx, std::vector<CycloInt> table)
      : ctx_(std::move(ctx)), table_(std::move(table)) {
    magnitudes_.reserve(table_.size());
    for (const auto& w : table_) magnitudes_.push_back(mag_sq(w));
  }

  const FieldCtx& ctx() const { return ctx_; }
  std::size_t size() const { return table_.size(); }
  const CycloInt& operator[](std::uint32_t beta) const { return table_[beta]; }
  const std::vector<CycloInt>& values() const { return table_; }
  const CycloInt& magnitude_sq(std::uint32_t beta) const {
    return magnitudes_[beta];
  }
  // |W(beta)|^2 as a rational integer, when it is one.
  std::optional<BigInt> integer_magnitude_sq(std::uint32_t beta) const {
    return magnitudes_[beta].as_integer();
  }

  // sum_beta |W(beta)|^2 == p^{2n}, evaluated in Z[xi_p].
  bool satisfies_parseval() const {
    CycloInt total(ctx_.p());
    for (const auto& m : magnitudes_) total += m;
    return total == CycloInt::integer(
                        ctx_.p(), big_pow(ctx_.p(), 2 * ctx_.n()));
  }

 private:
  FieldCtx ctx_;
  std::vector<CycloInt> table_;
  std::vector<CycloInt> magnitudes_;
};

// Direct O(p^{2n}) evaluation. Each W(beta) is accumulated as a histogram of
// exponents of xi before conversion, so the per-x cost is one field
// multiplication and one trace lookup.
inline WalshSpectrum walsh_transform(const PFunction& f, unsigned workers = 0) {
  const FieldCtx& ctx = f.ctx();
  const int p = ctx.p();
  const std::uint32_t q = ctx.order();
  std::vector<CycloInt> table(q, CycloInt(p));
  parallel_for(q, workers, [&](std::size_t b) {
    std::vector<std::int64_t> hist(p, 0);
    const auto beta = static_cast<std::uint32_t>(b);
    for (std::uint32_t x = 0; x < q; ++x) {
      int e = f(x) - ctx.trace_index(ctx.mul_index(beta, x));
      if (e < 0) e += p;
      ++hist[e];
    }
    std::vector<BigInt> coeffs(p);
    for (int j = 0; j < p; ++j) coeffs[j] = hist[j];
    table[b] = CycloInt::from_coeffs(p, std::move(coeffs));
  });
  WalshSpectrum spectrum(ctx, std::move(table));
  if (!spectrum.satisfies_parseval()) {
    throw Error(ErrorCode::kParsevalViolation,
                "Walsh spectrum violates Parseval; arithmetic is broken");
  }
  return spectrum;
}

inline bool is_balanced(const WalshSpectrum& spectrum) {
  return spectrum[0].is_zero();
}

}  // namespace wrp

#endif  // WRP_PFUN_HPP_
