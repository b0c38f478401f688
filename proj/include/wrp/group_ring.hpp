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

// Elements of the group ring Z[xi_p][(GF(p^n), +)].

#ifndef WRP_GROUP_RING_HPP_
#define WRP_GROUP_RING_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wrp/cyclo.hpp"
#include "wrp/error.hpp"
#include "wrp/field.hpp"
#include "wrp/parallel.hpp"
#include "wrp/pfun.hpp"

namespace wrp {

class GroupRingElement {
 public:
  explicit GroupRingElement(FieldCtx ctx)
      : ctx_(std::move(ctx)), coeffs_(ctx_.order(), CycloInt(ctx_.p())) {}

  // Sum of the group elements in `set`.
  static GroupRingElement indicator(const FieldCtx& ctx,
                                    const std::vector<std::uint32_t>& set) {
    GroupRingElement out(ctx);
    const CycloInt one = CycloInt::integer(ctx.p(), 1);
    for (std::uint32_t x : set) out.coeffs_.at(x) += one;
    return out;
  }

  // c * [x].
  static GroupRingElement delta(const FieldCtx& ctx, std::uint32_t x,
                                const CycloInt& c) {
    GroupRingElement out(ctx);
    out.coeffs_.at(x) = c;
    return out;
  }

  // The whole group, i.e. sum of all elements.
  static GroupRingElement all_ones(const FieldCtx& ctx) {
    GroupRingElement out(ctx);
    const CycloInt one = CycloInt::integer(ctx.p(), 1);
    for (auto& c : out.coeffs_) c = one;
    return out;
  }

  const FieldCtx& ctx() const { return ctx_; }
  std::size_t size() const { return coeffs_.size(); }
  const CycloInt& operator[](std::uint32_t x) const { return coeffs_[x]; }
  void set(std::uint32_t x, CycloInt c) { coeffs_.at(x) = std::move(c); }
  const std::vector<CycloInt>& coeffs() const { return coeffs_; }

  GroupRingElement& operator+=(const GroupRingElement& b) {
    same_field(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& b) {
    same_field(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    return *this;
  }
  GroupRingElement& operator*=(const CycloInt& c) {
    for (auto& a : coeffs_) {
      if (!a.is_zero()) a = a * c;
    }
    return *this;
  }
  GroupRingElement& operator*=(const BigInt& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  // this += c * b.
  void add_scaled(const GroupRingElement& b, const CycloInt& c) {
    same_field(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!b.coeffs_[i].is_zero()) coeffs_[i].add_product(b.coeffs_[i], c);
    }
  }

  friend GroupRingElement operator+(GroupRingElement a,
                                    const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a,
                                    const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator*(GroupRingElement a, const CycloInt& c) {
    return a *= c;
  }
  friend GroupRingElement operator*(GroupRingElement a, const BigInt& c) {
    return a *= c;
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.ctx_.id() == b.ctx_.id() && a.coeffs_ == b.coeffs_;
  }

  void same_field(const GroupRingElement& b) const {
    if (ctx_.id() != b.ctx_.id()) {
      throw Error(ErrorCode::kMixedFields,
                  "group ring elements over different fields");
    }
  }

  // First index where the two elements differ, or size() when equal.
  std::size_t first_difference(const GroupRingElement& b) const {
    same_field(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!(coeffs_[i] == b.coeffs_[i])) return i;
    }
    return coeffs_.size();
  }

 private:
  FieldCtx ctx_;
  std::vector<CycloInt> coeffs_;
};

// (a * b)(x) = sum_y a(y) b(x - y). Parallel over x; each x is owned by one
// worker, so the result does not depend on the worker count.
inline GroupRingElement convolve(const GroupRingElement& a,
                                 const GroupRingElement& b,
                                 unsigned workers = 0) {
  a.same_field(b);
  const FieldCtx& ctx = a.ctx();
  std::vector<std::uint32_t> support;
  for (std::uint32_t y = 0; y < a.size(); ++y) {
    if (!a[y].is_zero()) support.push_back(y);
  }
  std::vector<CycloInt> out(ctx.order(), CycloInt(ctx.p()));
  parallel_for(ctx.order(), workers, [&](std::size_t xi) {
    const auto x = static_cast<std::uint32_t>(xi);
    CycloInt acc(ctx.p());
    for (std::uint32_t y : support) {
      const CycloInt& bz = b[ctx.sub_index(x, y)];
      if (!bz.is_zero()) acc.add_product(a[y], bz);
    }
    out[x] = std::move(acc);
  });
  GroupRingElement result(ctx);
  for (std::uint32_t x = 0; x < ctx.order(); ++x) result.set(x, std::move(out[x]));
  return result;
}

// L_t = sum_j D_{f,j} xi^{j t}: coefficient xi^{t f(x)} at x.
inline GroupRingElement build_L(const PFunction& f, std::int64_t t) {
  const FieldCtx& ctx = f.ctx();
  GroupRingElement out(ctx);
  for (std::uint32_t x = 0; x < ctx.order(); ++x) {
    out.set(x, CycloInt::root(ctx.p(), t * f(x)));
  }
  return out;
}

}  // namespace wrp

#endif  // WRP_GROUP_RING_HPP_
