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

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace surd {

using BigInt = boost::multiprecision::cpp_int;

// Number of significant bits in |v|; zero has bit length 0.
std::size_t bit_length(const BigInt& v);

BigInt pow10(unsigned exponent);

// Parses an optionally '-'-prefixed decimal integer. Anything else
// (empty input, '+', whitespace, non-digits) throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& v);

}  // namespace surd
