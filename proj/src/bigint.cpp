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

#include "surd/bigint.hpp"

#include <stdexcept>

namespace surd {

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  BigInt m = abs(v);
  return static_cast<std::size_t>(boost::multiprecision::msb(m)) + 1;
}

BigInt pow10(unsigned exponent) {
  BigInt r = 1;
  BigInt base = 10;
  while (exponent != 0) {
    if (exponent & 1u) r *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return r;
}

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  BigInt v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    v *= 10;
    v += c - '0';
  }
  return negative ? BigInt(-v) : v;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace surd
