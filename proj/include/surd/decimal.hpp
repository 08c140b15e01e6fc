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

#include <string>

#include "surd/bigint.hpp"
#include "surd/rational.hpp"

namespace surd {

/// Decimal expansion truncated toward zero to exactly `scale` fraction
/// digits. A value that truncates to zero is always reported with sign +1.
struct DecimalApprox {
  int sign = 1;
  BigInt integer_part = 0;
  std::string fraction_digits;  // exactly `scale` characters, zero-padded
  unsigned scale = 0;

  /// |value| * 10^scale as an integer.
  BigInt scaled_magnitude() const;
  /// The represented (truncated) value as an exact rational.
  Rational value() const;

  friend bool operator==(const DecimalApprox&, const DecimalApprox&) = default;
};

/// Throws std::invalid_argument when `digits` is zero.
DecimalApprox to_decimal(const Rational& a, unsigned digits);

/// Builds a DecimalApprox from a non-negative scaled integer v = |x| * 10^digits.
DecimalApprox decimal_from_scaled(int sign, const BigInt& scaled, unsigned digits);

/// Drops trailing fraction digits; `digits` must not exceed d.scale.
DecimalApprox truncate(const DecimalApprox& d, unsigned digits);

/// e.g. "3.142857", "-0.00694".
std::string to_string(const DecimalApprox& d);

}  // namespace surd
