// Copyright 2026 The surd Authors
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

#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "surd/bigint.hpp"

namespace surd {

/// Exact signed rational in canonical form: the denominator is positive,
/// gcd(|num|, den) == 1, the sign lives on the numerator, and zero is 0/1.
///
/// Every constructor and arithmetic operator re-establishes the canonical
/// form, so structural equality is value equality.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt value) : num_(std::move(value)) {}

  /// Throws std::domain_error when `den` is zero.
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

Rational abs(const Rational& a);

/// a^k by repeated squaring; a^0 == 1 (including 0^0).
Rational pow(const Rational& a, unsigned k);

/// Canonical text form: "p/q", or "p" when q == 1, with an optional '-'.
std::string to_string(const Rational& a);

/// Mixed-number display form, e.g. "3 3/7", "-1 1/2", "4", "1/3".
std::string to_mixed_string(const Rational& a);

/// Accepts "p", "-p", "p/q", "-p/q" (q may also carry the sign, e.g. "6/-8").
/// Malformed text throws std::invalid_argument; a zero denominator throws
/// std::domain_error.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& a);

}  // namespace surd
