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

// The p-class translation scheme on GF(p^n) induced by the level sets of a
// p-ary function: A_0 = {0}, A_1 = {x != 0 : f(x) = 0} and
// A_j = {x != 0 : f(x) = j - 1} for 2 <= j <= p.

#ifndef WRP_SCHEME_HPP_
#define WRP_SCHEME_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wrp/error.hpp"
#include "wrp/group_ring.hpp"
#include "wrp/identities.hpp"
#include "wrp/parallel.hpp"
#include "wrp/pds.hpp"
#include "wrp/pfun.hpp"
#include "wrp/plateau.hpp"

namespace wrp {

struct SchemeClasses {
  std::vector<std::vector<std::uint32_t>> classes;

  std::size_t relation_count() const { return classes.size(); }
  // Number of non-identity relations.
  std::size_t class_number() const { return classes.size() - 1; }
  std::vector<std::int64_t> sizes() const {
    std::vector<std::int64_t> out;
    for (const auto& c : classes) out.push_back(static_cast<std::int64_t>(c.size()));
    return out;
  }
};

inline SchemeClasses build_classes(const PFunction& f) {
  const int p = f.ctx().p();
  SchemeClasses out;
  out.classes.assign(p + 1, {});
  out.classes[0].push_back(0);
  for (std::uint32_t x = 1; x < f.ctx().order(); ++x) {
    out.classes[f(x) + 1].push_back(x);
  }
  return out;
}

// Intersection numbers p_ij^k, indexed 0..d in each slot.
struct SchemeTable {
  std::size_t relations = 0;
  std::vector<std::int64_t> class_sizes;
  std::vector<std::int64_t> entries;  // (i * relations + j) * relations + k

  std::int64_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return entries[(i * relations + j) * relations + k];
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < relations; ++i) {
      for (std::size_t j = 0; j < relations; ++j) {
        for (std::size_t k = 0; k < relations; ++k) {
          if (at(i, j, k) != at(j, i, k)) return false;
        }
      }
    }
    return true;
  }

  // sum_k p_ij^k |A_k| = |A_i| |A_j| for every i, j.
  bool satisfies_product_counts() const {
    for (std::size_t i = 0; i < relations; ++i) {
      for (std::size_t j = 0; j < relations; ++j) {
        std::int64_t total = 0;
        for (std::size_t k = 0; k < relations; ++k) {
          total += at(i, j, k) * class_sizes[k];
        }
        if (total != class_sizes[i] * class_sizes[j]) return false;
      }
    }
    return true;
  }

  friend bool operator==(const SchemeTable&, const SchemeTable&) = default;
};

struct SchemeVerification {
  std::optional<SchemeTable> table;
  std::optional<ErrorCode> failure;  // EmptyClass, NotSymmetric, NotConstantOnClass
  std::string witness;

  friend bool operator==(const SchemeVerification&,
                         const SchemeVerification&) = default;
};

// Checks the translation-scheme axioms on the difference form: for every
// x in A_k the count #{z in A_i : x - z in A_j} depends only on (i, j, k).
inline SchemeVerification verify_scheme(const SchemeClasses& classes,
                                        const FieldCtx& ctx,
                                        unsigned workers = 0) {
  const std::size_t r = classes.relation_count();
  const std::uint32_t q = ctx.order();
  std::vector<int> class_of(q, -1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::uint32_t x : classes.classes[i]) {
      if (x >= q || class_of[x] != -1) {
        throw std::invalid_argument("scheme classes do not partition the field");
      }
      class_of[x] = static_cast<int>(i);
    }
  }
  if (std::count(class_of.begin(), class_of.end(), -1) != 0 ||
      classes.classes[0] != std::vector<std::uint32_t>{0}) {
    throw std::invalid_argument(
        "scheme classes must partition the field with A_0 = {0}");
  }

  SchemeVerification out;
  for (std::size_t i = 0; i < r; ++i) {
    if (classes.classes[i].empty()) {
      out.failure = ErrorCode::kEmptyClass;
      out.witness = "class " + std::to_string(i) + " is empty";
      return out;
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::uint32_t x : classes.classes[i]) {
      if (class_of[ctx.neg_index(x)] != static_cast<int>(i)) {
        out.failure = ErrorCode::kNotSymmetric;
        out.witness = "class " + std::to_string(i) + " is not closed under -x";
        return out;
      }
    }
  }

  const std::size_t cells = r * r;
  std::vector<std::int64_t> per_x(static_cast<std::size_t>(q) * cells, 0);
  parallel_for(q, workers, [&](std::size_t xi) {
    const auto x = static_cast<std::uint32_t>(xi);
    std::int64_t* row = per_x.data() + xi * cells;
    for (std::uint32_t z = 0; z < q; ++z) {
      ++row[class_of[z] * r + class_of[ctx.sub_index(x, z)]];
    }
  });

  SchemeTable table;
  table.relations = r;
  table.class_sizes = classes.sizes();
  table.entries.assign(r * cells, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const std::uint32_t first = classes.classes[k].front();
    const std::int64_t* ref = per_x.data() + first * cells;
    for (std::uint32_t x : classes.classes[k]) {
      const std::int64_t* row = per_x.data() + static_cast<std::size_t>(x) * cells;
      for (std::size_t cell = 0; cell < cells; ++cell) {
        if (row[cell] != ref[cell]) {
          out.failure = ErrorCode::kNotConstantOnClass;
          out.witness = "i=" + std::to_string(cell / r) +
                        ",j=" + std::to_string(cell % r) +
                        ",k=" + std::to_string(k) + " x=" +
                        std::to_string(first) + " gives " +
                        std::to_string(ref[cell]) + ", x'=" +
                        std::to_string(x) + " gives " +
                        std::to_string(row[cell]);
          return out;
        }
      }
    }
    for (std::size_t cell = 0; cell < cells; ++cell) {
      table.entries[cell * r + k] = ref[cell];
    }
  }
  out.table = std::move(table);
  return out;
}

struct SchurSpanEntry {
  int a = 0;
  int b = 0;
  bool in_span = false;
  std::optional<BigInt> c;  // absent when D_{f(0)} = {0} hides it
  BigInt c_expected;
  std::vector<std::optional<BigInt>> d;

  friend bool operator==(const SchurSpanEntry&, const SchurSpanEntry&) = default;
};

struct SchurSpanReport {
  std::vector<SchurSpanEntry> entries;
  bool holds = true;
  std::string witness;

  void throw_if_violated() const {
    if (!holds) throw Error(ErrorCode::kNotInSpan, witness);
  }

  friend bool operator==(const SchurSpanReport&, const SchurSpanReport&) = default;
};

// For all a, b in Z_p, decomposes p^2 D_{f,a} D_{f,b} over [0], D_{f,j} and
// compares the [0] coefficient with p^n (p delta_{a-b} - 1).
inline SchurSpanReport verify_schur_span(const PFunction& f,
                                         const PlateauProfile& profile,
                                         unsigned workers = 0) {
  if (!profile.wrp) {
    throw Error(ErrorCode::kNotWrpCertified, "profile carries no WRP evidence");
  }
  const FieldCtx& ctx = f.ctx();
  const int p = ctx.p();
  const BigInt pn = big_pow(p, static_cast<unsigned>(ctx.n()));
  std::vector<GroupRingElement> level;
  for (int j = 0; j < p; ++j) {
    level.push_back(GroupRingElement::indicator(
        ctx, build_subset(f, SubsetSelector::level_set(j))));
  }
  SchurSpanReport report;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      SchurSpanEntry entry;
      entry.a = a;
      entry.b = b;
      entry.c_expected = pn * (p * (a == b ? 1 : 0) - 1);
      GroupRingElement product =
          convolve(level[a], level[b], workers) * BigInt(p * p);
      std::string why;
      auto parts = decompose_in_level_span(product, f, &why);
      const std::string ab = "a=" + std::to_string(a) + ",b=" + std::to_string(b);
      if (parts) {
        entry.in_span = true;
        if (parts->c_identified) entry.c = parts->c;
        entry.d = parts->d;
        if (report.holds && entry.c && *entry.c != entry.c_expected) {
          report.holds = false;
          report.witness = ab + " c=" + parts->c.str() + " expected " +
                           entry.c_expected.str();
        }
      } else if (report.holds) {
        report.holds = false;
        report.witness = ab + " " + why;
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace wrp

#endif  // WRP_SCHEME_HPP_
