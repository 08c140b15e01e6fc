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

#include "surd/rational.hpp"

#include <ostream>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace surd {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational pow(const Rational& a, unsigned k) {
  Rational result = 1;
  Rational base = a;
  while (k != 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

std::string to_string(const Rational& a) {
  if (a.is_integer()) return a.num().str();
  return a.num().str() + "/" + a.den().str();
}

std::string to_mixed_string(const Rational& a) {
  BigInt mag = boost::multiprecision::abs(a.num());
  BigInt whole = mag / a.den();
  BigInt part = mag % a.den();
  std::string out = a.sign() < 0 ? "-" : "";
  if (part == 0) return out + whole.str();
  if (whole != 0) out += whole.str() + " ";
  return out + part.str() + "/" + a.den().str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << to_string(a); }

}  // namespace surd
