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

// Exact arithmetic in Z[xi_p], xi_p = exp(2 pi i / p).
//
// A value is stored as (a_0, ..., a_{p-1}) meaning sum a_j xi^j, normalized so
// that a_{p-1} = 0 (subtract a_{p-1} * (1 + xi + ... + xi^{p-1}), which is 0).
// After normalization equal values have equal coefficient lists.

#ifndef WRP_CYCLO_HPP_
#define WRP_CYCLO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrp/error.hpp"
#include "wrp/numtheory.hpp"

namespace wrp {

class CycloInt {
 public:
  // Zero of Z[xi_p].
  explicit CycloInt(int p) : p_(p), coeffs_(static_cast<std::size_t>(p)) {}

  static CycloInt from_coeffs(int p, std::vector<BigInt> coeffs) {
    if (static_cast<int>(coeffs.size()) > p) {
      throw Error(ErrorCode::kMixedPrimes, "too many coefficients for p");
    }
    coeffs.resize(p);
    CycloInt out(p, std::move(coeffs));
    out.canonicalize();
    return out;
  }

  static CycloInt integer(int p, const BigInt& c) {
    CycloInt out(p);
    out.coeffs_[0] = c;
    return out;
  }

  // xi^j.
  static CycloInt root(int p, std::int64_t j) {
    CycloInt out(p);
    out.coeffs_[mod(j, p)] = 1;
    out.canonicalize();
    return out;
  }

  int prime() const { return p_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  // The rational integer this value equals, if it is one.
  std::optional<BigInt> as_integer() const {
    for (int j = 1; j < p_; ++j) {
      if (coeffs_[j] != 0) return std::nullopt;
    }
    return coeffs_[0];
  }

  CycloInt& operator+=(const CycloInt& b) {
    same_prime(b);
    for (int j = 0; j < p_; ++j) coeffs_[j] += b.coeffs_[j];
    return *this;
  }

  CycloInt& operator-=(const CycloInt& b) {
    same_prime(b);
    for (int j = 0; j < p_; ++j) coeffs_[j] -= b.coeffs_[j];
    return *this;
  }

  CycloInt& operator*=(const BigInt& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  // Adds c * xi^j in place.
  void add_root(std::int64_t j, const BigInt& c) {
    int slot = static_cast<int>(mod(j, p_));
    if (slot == p_ - 1) {
      for (int i = 0; i < p_ - 1; ++i) coeffs_[i] -= c;
    } else {
      coeffs_[slot] += c;
    }
  }

  // this += a * b without materializing the product.
  void add_product(const CycloInt& a, const CycloInt& b) {
    same_prime(a);
    a.same_prime(b);
    for (int i = 0; i < p_; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; j < p_; ++j) {
        if (b.coeffs_[j] == 0) continue;
        int k = i + j;
        if (k >= p_) k -= p_;
        coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    canonicalize();
  }

  // Multiplication by xi^j.
  CycloInt rotated(std::int64_t j) const {
    std::vector<BigInt> raw(p_);
    for (int i = 0; i < p_; ++i) raw[mod(i + j, p_)] = coeffs_[i];
    CycloInt out(p_, std::move(raw));
    out.canonicalize();
    return out;
  }

  // Complex conjugation: xi^j -> xi^{-j}.
  CycloInt conj() const {
    std::vector<BigInt> raw(p_);
    for (int i = 0; i < p_; ++i) raw[mod(-i, p_)] = coeffs_[i];
    CycloInt out(p_, std::move(raw));
    out.canonicalize();
    return out;
  }

  // Galois automorphism xi -> xi^t, t a unit mod p.
  CycloInt galois(std::int64_t t) const {
    std::vector<BigInt> raw(p_);
    for (int i = 0; i < p_; ++i) raw[mod(i * t, p_)] = coeffs_[i];
    CycloInt out(p_, std::move(raw));
    out.canonicalize();
    return out;
  }

  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator-(CycloInt a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend CycloInt operator*(CycloInt a, const BigInt& c) { return a *= c; }
  friend CycloInt operator*(const BigInt& c, CycloInt a) { return a *= c; }

  friend CycloInt operator*(const CycloInt& a, const CycloInt& b) {
    a.same_prime(b);
    const int p = a.p_;
    std::vector<BigInt> raw(p);
    for (int i = 0; i < p; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; j < p; ++j) {
        if (b.coeffs_[j] == 0) continue;
        int k = i + j;
        if (k >= p) k -= p;
        raw[k] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    CycloInt out(p, std::move(raw));
    out.canonicalize();
    return out;
  }

  CycloInt& operator*=(const CycloInt& b) { return *this = *this * b; }

  friend bool operator==(const CycloInt& a, const CycloInt& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::string out = "[";
    for (int j = 0; j < p_; ++j) {
      if (j) out += ",";
      out += coeffs_[j].str();
    }
    return out + "]";
  }

 private:
  CycloInt(int p, std::vector<BigInt> coeffs)
      : p_(p), coeffs_(std::move(coeffs)) {}

  void canonicalize() {
    BigInt top = coeffs_[p_ - 1];
    if (top == 0) return;
    for (auto& c : coeffs_) c -= top;
  }

  void same_prime(const CycloInt& b) const {
    if (p_ != b.p_) {
      throw Error(ErrorCode::kMixedPrimes,
                  "operands live in Z[xi_" + std::to_string(p_) +
                      "] and Z[xi_" + std::to_string(b.p_) + "]");
    }
  }

  int p_;
  std::vector<BigInt> coeffs_;
};

// |a|^2 = a * conj(a).
inline CycloInt mag_sq(const CycloInt& a) { return a * a.conj(); }

// Quadratic Gauss sum G = sum_{t=1}^{p-1} eta_0(t) xi^t; G^2 = p*.
inline CycloInt gauss_sum(int p) {
  CycloInt g(p);
  for (int t = 1; t < p; ++t) g.add_root(t, quadratic_character(t, p));
  return g;
}

inline CycloInt cyclo_pow(CycloInt base, unsigned e) {
  CycloInt result = CycloInt::integer(base.prime(), 1);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

struct ScaledRootMatch {
  int sign = 1;   // epsilon, +1 or -1
  int exponent = 0;  // j in Z_p

  friend bool operator==(const ScaledRootMatch&,
                         const ScaledRootMatch&) = default;
};

// Finds (eps, j) with a = eps * scale * xi^j by scanning all 2p candidates.
// The pair is unique whenever scale != 0, since the 2p values eps * xi^j are
// distinct units.
inline std::optional<ScaledRootMatch> match_scaled_root(const CycloInt& a,
                                                        const CycloInt& scale) {
  if (scale.is_zero()) {
    throw Error(ErrorCode::kZeroArgument, "scale must be nonzero");
  }
  const int p = scale.prime();
  if (a.prime() != p) {
    throw Error(ErrorCode::kMixedPrimes, "operands use different primes");
  }
  for (int j = 0; j < p; ++j) {
    CycloInt candidate = scale.rotated(j);
    if (candidate == a) return ScaledRootMatch{1, j};
    if (-candidate == a) return ScaledRootMatch{-1, j};
  }
  return std::nullopt;
}

}  // namespace wrp

#endif  // WRP_CYCLO_HPP_
