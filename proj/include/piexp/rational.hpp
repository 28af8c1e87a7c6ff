/*
 * Copyright 2026 The piexp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace piexp {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Canonical num/den (reduced, positive denominator). Throws on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "p/q", "-p/q" (surrounding whitespace allowed) into canonical form.
Rational parse_rational(std::string_view text);

/// "p" for integers, otherwise "p/q" with q > 0.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& x) { return x.is_zero(); }

/// Element of the prime field F_p, p = 2^61 - 1. Used for fast rank
/// certificates: vectors independent mod p are independent over Q.
struct ModP {
  static constexpr std::uint64_t modulus = (std::uint64_t{1} << 61) - 1;

  std::uint64_t v = 0;

  constexpr ModP() = default;
  constexpr ModP(int x)  // NOLINT(google-explicit-constructor): Eigen needs Scalar(0)
      : v(x >= 0 ? std::uint64_t(x) % modulus : modulus - std::uint64_t(-std::int64_t(x)) % modulus) {}

  static constexpr ModP raw(std::uint64_t x) {
    ModP r;
    r.v = x % modulus;
    return r;
  }

  friend constexpr ModP operator+(ModP a, ModP b) {
    std::uint64_t s = a.v + b.v;
    return raw(s >= modulus ? s - modulus : s);
  }
  friend constexpr ModP operator-(ModP a, ModP b) { return raw(a.v >= b.v ? a.v - b.v : a.v + modulus - b.v); }
  friend constexpr ModP operator-(ModP a) { return raw(a.v == 0 ? 0 : modulus - a.v); }
  friend constexpr ModP operator*(ModP a, ModP b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a.v) * b.v;
    std::uint64_t lo = static_cast<std::uint64_t>(p & modulus);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    return raw(s >= modulus ? s - modulus : s);
  }
  ModP inverse() const;
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }
  friend constexpr bool operator==(ModP a, ModP b) { return a.v == b.v; }
  friend std::ostream& operator<<(std::ostream& os, ModP a) { return os << a.v; }
};

inline bool is_zero(const ModP& x) { return x.v == 0; }

/// Reduction Z_(p) -> F_p. Returns false when p divides the denominator.
bool reduce_mod_p(const Rational& x, ModP& out);

}  // namespace piexp

namespace Eigen {
template <>
struct NumTraits<piexp::ModP> : GenericNumTraits<piexp::ModP> {
  using Real = piexp::ModP;
  using NonInteger = piexp::ModP;
  using Nested = piexp::ModP;
  enum {
    IsInteger = 0,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return piexp::ModP(0); }
  static inline Real dummy_precision() { return piexp::ModP(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
