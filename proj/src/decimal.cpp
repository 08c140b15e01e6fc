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

#include "surd/decimal.hpp"

#include <stdexcept>

namespace surd {

BigInt DecimalApprox::scaled_magnitude() const {
  BigInt v = integer_part * pow10(scale);
  if (!fraction_digits.empty()) v += parse_bigint(fraction_digits);
  return v;
}

Rational DecimalApprox::value() const {
  BigInt mag = scaled_magnitude();
  return Rational(sign < 0 ? BigInt(-mag) : mag, pow10(scale));
}

DecimalApprox decimal_from_scaled(int sign, const BigInt& scaled, unsigned digits) {
  const BigInt unit = pow10(digits);
  DecimalApprox d;
  d.scale = digits;
  d.integer_part = scaled / unit;
  std::string frac = BigInt(scaled % unit).str();
  d.fraction_digits = std::string(digits - frac.size(), '0') + frac;
  d.sign = (scaled == 0) ? 1 : (sign < 0 ? -1 : 1);
  return d;
}

DecimalApprox to_decimal(const Rational& a, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("decimal scale must be at least 1");
  BigInt mag = boost::multiprecision::abs(a.num());
  // floor(|num| * 10^p / den) is exactly p steps of long division.
  BigInt scaled = mag * pow10(digits) / a.den();
  return decimal_from_scaled(a.sign(), scaled, digits);
}

DecimalApprox truncate(const DecimalApprox& d, unsigned digits) {
  if (digits > d.scale) throw std::invalid_argument("cannot extend a truncated decimal");
  DecimalApprox out = d;
  out.fraction_digits.resize(digits);
  out.scale = digits;
  if (out.integer_part == 0 && out.fraction_digits.find_first_not_of('0') == std::string::npos) {
    out.sign = 1;
  }
  return out;
}

std::string to_string(const DecimalApprox& d) {
  std::string out = d.sign < 0 ? "-" : "";
  out += d.integer_part.str();
  if (d.scale != 0) out += "." + d.fraction_digits;
  return out;
}

}  // namespace surd
