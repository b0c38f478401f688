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

// Arithmetic in GF(p^n) for odd primes p.
//
// Elements are enumerated by the base-p value of their coefficient vector
// over the power basis 1, x, ..., x^{n-1} (coefficient 0 least significant),
// so index 0 is zero and index 1 is one. A FieldCtx is immutable; copies share
// the same tables and the same identity, and elements from distinct contexts
// never mix.

#ifndef WRP_FIELD_HPP_
#define WRP_FIELD_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrp/error.hpp"
#include "wrp/numtheory.hpp"

namespace wrp {

struct FieldSpec {
  int p = 0;
  int n = 0;
  // Monic modulus, low-degree coefficient first, length n + 1.
  std::vector<int> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

using Poly = std::vector<std::int64_t>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int poly_degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

// a mod m over Z_p; m monic.
inline Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  for (auto& c : a) c = mod(c, p);
  poly_trim(a);
  int dm = poly_degree(m);
  std::int64_t lead_inv = inverse_mod(m.back(), p);
  while (poly_degree(a) >= dm) {
    int shift = poly_degree(a) - dm;
    std::int64_t factor = (a.back() * lead_inv) % p;
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = mod(a[shift + i] - factor * m[i], p);
    }
    poly_trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m,
                        std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(r), m, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m,
                        std::int64_t p) {
  Poly result = poly_mod(Poly{1}, m, p);
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

inline Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // Make b monic before reducing so poly_mod's monic assumption is not needed.
    std::int64_t inv = inverse_mod(b.back(), p);
    for (auto& c : b) c = (c * inv) % p;
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: a monic m of degree n is irreducible iff gcd(x^{p^i} - x, m) = 1
// for 1 <= i <= n/2.
inline bool is_irreducible(const Poly& m, std::int64_t p) {
  int n = poly_degree(m);
  if (n <= 0) return false;
  if (n == 1) return true;
  Poly x_pow = poly_mod(Poly{0, 1}, m, p);
  for (int i = 1; i <= n / 2; ++i) {
    x_pow = poly_powmod(x_pow, static_cast<std::uint64_t>(p), m, p);
    Poly diff = x_pow;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod(diff[1] - 1, p);
    poly_trim(diff);
    if (diff.empty()) return false;  // x^{p^i} = x: m divides it
    if (poly_degree(poly_gcd(diff, m, p)) > 0) return false;
  }
  return true;
}

inline std::uint64_t next_field_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace detail

class FieldCtx;

class FieldElement {
 public:
  std::uint32_t index() const { return index_; }
  std::uint64_t field_id() const { return field_id_; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend class FieldCtx;
  FieldElement(std::uint64_t field_id, std::uint32_t index)
      : field_id_(field_id), index_(index) {}

  std::uint64_t field_id_;
  std::uint32_t index_;
};

class FieldCtx {
 public:
  // Log/antilog tables are built up to this order.
  static constexpr std::uint64_t kLogTableLimit = 1u << 16;
  static constexpr std::uint64_t kMaxOrder = 1u << 31;

  // Builds GF(p^n). Without a modulus, picks the lexicographically smallest
  // monic irreducible of degree n, comparing coefficients low degree first.
  static FieldCtx build(int p, int n,
                        std::optional<std::vector<int>> modulus = std::nullopt) {
    if (p == 2) {
      throw Error(ErrorCode::kEvenCharacteristic, "p = 2 is not supported");
    }
    if (!is_prime(p)) {
      throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
    }
    if (n < 1) {
      throw Error(ErrorCode::kInvalidDegree, "degree must be positive");
    }
    BigInt order = big_pow(p, static_cast<unsigned>(n));
    if (order > BigInt(kMaxOrder)) {
      throw Error(ErrorCode::kFieldTooLarge, "p^n exceeds 2^31");
    }
    std::vector<int> chosen;
    if (modulus) {
      chosen = *modulus;
      if (static_cast<int>(chosen.size()) != n + 1 || chosen.back() != 1) {
        throw Error(ErrorCode::kInvalidDegree,
                    "modulus must be monic of degree n");
      }
      for (int c : chosen) {
        if (c < 0 || c >= p) {
          throw Error(ErrorCode::kInvalidDegree,
                      "modulus coefficients must lie in [0, p)");
        }
      }
      detail::Poly m(chosen.begin(), chosen.end());
      if (!detail::is_irreducible(m, p)) {
        throw Error(ErrorCode::kReducibleModulus,
                    "modulus is reducible over Z_p");
      }
    } else {
      chosen = smallest_irreducible(p, n);
    }
    return FieldCtx(FieldSpec{p, n, std::move(chosen)});
  }

  static FieldCtx build(const FieldSpec& spec) {
    return build(spec.p, spec.n, spec.modulus.empty()
                                     ? std::nullopt
                                     : std::optional(spec.modulus));
  }

  const FieldSpec& spec() const { return impl_->spec; }
  int p() const { return impl_->spec.p; }
  int n() const { return impl_->spec.n; }
  std::uint32_t order() const { return impl_->q; }
  std::uint64_t id() const { return impl_->id; }
  bool has_log_tables() const { return !impl_->exp.empty(); }

  FieldElement element(std::uint32_t index) const {
    if (index >= impl_->q) {
      throw Error(ErrorCode::kMixedFields, "element index out of range");
    }
    return FieldElement(impl_->id, index);
  }
  FieldElement zero() const { return FieldElement(impl_->id, 0); }
  FieldElement one() const { return FieldElement(impl_->id, 1); }
  // Smallest primitive element under the enumeration order.
  FieldElement primitive() const {
    return FieldElement(impl_->id, impl_->primitive);
  }

  FieldElement from_coeffs(const std::vector<int>& coeffs) const {
    std::uint64_t index = 0;
    for (int i = n() - 1; i >= 0; --i) {
      int c = i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
      index = index * p() + static_cast<std::uint64_t>(mod(c, p()));
    }
    return FieldElement(impl_->id, static_cast<std::uint32_t>(index));
  }

  std::vector<int> coeffs(const FieldElement& a) const {
    check(a);
    return coeffs_of(a.index());
  }

  FieldElement add(const FieldElement& a, const FieldElement& b) const {
    check(a, b);
    return wrap(add_index(a.index(), b.index()));
  }
  FieldElement sub(const FieldElement& a, const FieldElement& b) const {
    check(a, b);
    return wrap(sub_index(a.index(), b.index()));
  }
  FieldElement neg(const FieldElement& a) const {
    check(a);
    return wrap(neg_index(a.index()));
  }
  FieldElement mul(const FieldElement& a, const FieldElement& b) const {
    check(a, b);
    return wrap(mul_index(a.index(), b.index()));
  }
  FieldElement pow(const FieldElement& a, std::uint64_t e) const {
    check(a);
    return wrap(pow_index(a.index(), e));
  }
  // Tr(a) = a + a^p + ... + a^{p^{n-1}}, returned as an element of Z_p.
  int trace(const FieldElement& a) const {
    check(a);
    return trace_index(a.index());
  }

  // Unchecked index kernels for the exhaustive loops.

  std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = impl_->spec.p;
    std::uint32_t result = 0, place = 1;
    while (a != 0 || b != 0) {
      std::uint32_t d = a % p + b % p;
      if (d >= p) d -= p;
      result += d * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return result;
  }

  std::uint32_t sub_index(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = impl_->spec.p;
    std::uint32_t result = 0, place = 1;
    while (a != 0 || b != 0) {
      std::uint32_t da = a % p, db = b % p;
      std::uint32_t d = da >= db ? da - db : da + p - db;
      result += d * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return result;
  }

  std::uint32_t neg_index(std::uint32_t a) const { return sub_index(0, a); }

  // Multiplication by the prime-subfield scalar s (any integer, taken mod p).
  std::uint32_t scale_index(std::uint32_t a, std::int64_t s) const {
    const std::uint32_t p = impl_->spec.p;
    std::uint32_t k = static_cast<std::uint32_t>(mod(s, p));
    std::uint32_t result = 0, place = 1;
    while (a != 0) {
      result += ((a % p) * k % p) * place;
      a /= p;
      place *= p;
    }
    return result;
  }

  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    const Impl& im = *impl_;
    if (!im.exp.empty()) return im.exp[im.log[a] + im.log[b]];
    return poly_mul_index(a, b);
  }

  std::uint32_t pow_index(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e > 0) {
      if (e & 1) result = mul_index(result, a);
      a = mul_index(a, a);
      e >>= 1;
    }
    return result;
  }

  int trace_index(std::uint32_t a) const {
    const Impl& im = *impl_;
    if (!im.trace.empty()) return im.trace[a];
    return trace_by_basis(a);
  }

  std::vector<int> coeffs_of(std::uint32_t index) const {
    std::vector<int> out(n(), 0);
    for (int i = 0; i < n(); ++i) {
      out[i] = static_cast<int>(index % p());
      index /= p();
    }
    return out;
  }

  // Trace of a computed straight from the Frobenius-orbit definition, without
  // the basis shortcut. Test and audit use only.
  int trace_by_definition(std::uint32_t a) const {
    std::uint32_t sum = 0, term = a;
    for (int i = 0; i < n(); ++i) {
      sum = add_index(sum, term);
      term = pow_index(term, static_cast<std::uint64_t>(p()));
    }
    if (sum >= static_cast<std::uint32_t>(p())) {
      throw Error(ErrorCode::kReducibleModulus,
                  "trace left the prime subfield; modulus is broken");
    }
    return static_cast<int>(sum);
  }

 private:
  struct Impl {
    FieldSpec spec;
    std::uint64_t id = 0;
    std::uint32_t q = 0;
    std::uint32_t primitive = 1;
    detail::Poly modulus;
    std::vector<std::uint32_t> log;  // log[a] for a != 0
    std::vector<std::uint32_t> exp;  // length 2(q - 1)
    std::vector<int> basis_trace;    // Tr(x^i)
    std::vector<int> trace;          // Tr(a) by index
  };

  explicit FieldCtx(FieldSpec spec) {
    auto im = std::make_shared<Impl>();
    im->id = detail::next_field_id();
    im->q = static_cast<std::uint32_t>(ipow(spec.p, spec.n));
    im->modulus.assign(spec.modulus.begin(), spec.modulus.end());
    im->spec = std::move(spec);
    impl_ = im;

    im->primitive = find_primitive();
    if (im->q <= kLogTableLimit) build_log_tables(*im);

    const int p = im->spec.p;
    im->basis_trace.resize(im->spec.n);
    std::uint32_t basis = 1;
    for (int i = 0; i < im->spec.n; ++i) {
      im->basis_trace[i] = trace_by_definition(basis);
      basis *= p;
    }
    if (im->q <= (1u << 22)) {
      im->trace.resize(im->q);
      for (std::uint32_t a = 0; a < im->q; ++a) {
        im->trace[a] = trace_by_basis(a);
      }
    }
  }

  static std::vector<int> smallest_irreducible(int p, int n) {
    // Candidate number c enumerates (c_0, ..., c_{n-1}) with c_0 as the most
    // significant digit, which is low-degree-first lexicographic order.
    std::uint64_t count = ipow(p, n);
    for (std::uint64_t c = 0; c < count; ++c) {
      detail::Poly m(n + 1, 0);
      std::uint64_t rest = c;
      for (int i = n - 1; i >= 0; --i) {
        m[i] = static_cast<std::int64_t>(rest % p);
        rest /= p;
      }
      m[n] = 1;
      if (detail::is_irreducible(m, p)) return {m.begin(), m.end()};
    }
    throw Error(ErrorCode::kReducibleModulus, "no irreducible found");
  }

  detail::Poly poly_of(std::uint32_t index) const {
    detail::Poly out(n(), 0);
    for (int i = 0; i < n(); ++i) {
      out[i] = index % p();
      index /= p();
    }
    detail::poly_trim(out);
    return out;
  }

  std::uint32_t index_of(const detail::Poly& a) const {
    std::uint64_t index = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
      index = index * p() + static_cast<std::uint64_t>(a[i]);
    }
    return static_cast<std::uint32_t>(index);
  }

  std::uint32_t poly_mul_index(std::uint32_t a, std::uint32_t b) const {
    return index_of(
        detail::poly_mulmod(poly_of(a), poly_of(b), impl_->modulus, p()));
  }

  int trace_by_basis(std::uint32_t a) const {
    std::int64_t sum = 0;
    for (int i = 0; a != 0; ++i) {
      sum += static_cast<std::int64_t>(a % p()) * impl_->basis_trace[i];
      a /= p();
    }
    return static_cast<int>(sum % p());
  }

  std::uint32_t find_primitive() const {
    const std::uint32_t q = impl_->q;
    const std::int64_t group = static_cast<std::int64_t>(q) - 1;
    auto factors = prime_factors(group);
    for (std::uint32_t g = 1; g < q; ++g) {
      bool generator = true;
      for (auto r : factors) {
        if (pow_index(g, static_cast<std::uint64_t>(group / r)) == 1) {
          generator = false;
          break;
        }
      }
      if (generator) return g;
    }
    throw Error(ErrorCode::kReducibleModulus,
                "no primitive element; modulus is not irreducible");
  }

  void build_log_tables(Impl& im) const {
    const std::uint32_t group = im.q - 1;
    std::vector<std::uint32_t> exp(2 * static_cast<std::size_t>(group));
    std::vector<std::uint32_t> log(im.q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k < group; ++k) {
      exp[k] = x;
      log[x] = k;
      x = poly_mul_index(x, im.primitive);
    }
    if (x != 1) {
      throw Error(ErrorCode::kReducibleModulus,
                  "primitive element order differs from p^n - 1");
    }
    for (std::uint32_t k = 0; k < group; ++k) exp[group + k] = exp[k];
    im.log = std::move(log);
    im.exp = std::move(exp);
  }

  void check(const FieldElement& a) const {
    if (a.field_id() != impl_->id) {
      throw Error(ErrorCode::kMixedFields,
                  "element belongs to a different field context");
    }
  }
  void check(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
  }
  FieldElement wrap(std::uint32_t index) const {
    return FieldElement(impl_->id, index);
  }

  std::shared_ptr<const Impl> impl_;
};

}  // namespace wrp

#endif  // WRP_FIELD_HPP_
