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

// Small-integer number theory shared by the field and cyclotomic layers.

#ifndef WRP_NUMTHEORY_HPP_
#define WRP_NUMTHEORY_HPP_

#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wrp/error.hpp"

namespace wrp {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Least nonnegative residue of a modulo m (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

constexpr std::int64_t pow_mod(std::int64_t base, std::uint64_t e,
                               std::int64_t m) {
  std::int64_t result = 1 % m;
  std::int64_t b = mod(base, m);
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

// Inverse of a modulo m; requires gcd(a, m) = 1.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = mod(a, m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    throw Error(ErrorCode::kZeroArgument, "element is not invertible");
  }
  return mod(s0, m);
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

inline BigInt big_pow(std::int64_t base, unsigned e) {
  return boost::multiprecision::pow(BigInt(base), e);
}

// The quadratic character eta_0 of Z_p^*: +1 on squares, -1 on non-squares.
inline int quadratic_character(std::int64_t a, std::int64_t p) {
  if (mod(a, p) == 0) {
    throw Error(ErrorCode::kZeroArgument,
                "quadratic character is undefined at 0");
  }
  return pow_mod(a, static_cast<std::uint64_t>((p - 1) / 2), p) == 1 ? 1 : -1;
}

// p* = eta_0(-1) p.
inline std::int64_t p_star(std::int64_t p) {
  return quadratic_character(-1, p) * p;
}

// (p*)^e as an exact integer.
inline BigInt p_star_pow(std::int64_t p, unsigned e) {
  return big_pow(p_star(p), e);
}

// Even exponents h in [2, p-1] with gcd(h-1, p-1) = 1, ascending.
inline std::vector<int> admissible_homogeneity_exponents(int p) {
  std::vector<int> out;
  for (int h = 2; h <= p - 1; h += 2) {
    if (std::gcd(h - 1, p - 1) == 1) out.push_back(h);
  }
  return out;
}

}  // namespace wrp

#endif  // WRP_NUMTHEORY_HPP_
