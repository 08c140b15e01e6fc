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

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "surd/bigint.hpp"
#include "surd/decimal.hpp"
#include "surd/rational.hpp"
#include "surd/roots.hpp"

namespace surd {

/// Truncated p-digit decimal of the true d-th root of N, from the integer
/// floor root of N * 10^(d*p). Never touches the Newton family, so it can
/// serve as an oracle for it.
DecimalApprox decimal_oracle_root(const BigInt& radicand, Degree degree, unsigned digits);

struct ErrorRow {
  std::size_t index = 0;
  Rational approximant;
  DecimalApprox abs_error;    // |x_n - oracle|, truncated; may be off by one unit at scale p
  unsigned correct_digits = 0;
  std::size_t num_bits = 0;
  std::size_t den_bits = 0;
};

/// Leading fraction digits of the two truncated expansions that agree;
/// 0 when the integer parts (or signs) differ.
unsigned matching_digits(const DecimalApprox& a, const DecimalApprox& b);

std::vector<ErrorRow> error_table(const ApproximationReport& report, unsigned digits);

enum class Method { SeriesMorouziSeeded, PureNewtonFromFloor };
std::string_view to_string(Method m);

struct MethodRun {
  Method method = Method::SeriesMorouziSeeded;
  std::vector<IterationRecord> records;
  std::vector<ErrorRow> errors;
};

struct ComparisonTable {
  RootProblem problem;
  unsigned digits = 0;
  std::array<MethodRun, 2> runs;
};

/// Plain Newton from the floor seed: x_1 = a + r/(d a^{d-1}), then the same
/// neglect steps as the series. Perfect powers stop at the seed.
std::vector<IterationRecord> pure_newton_run(const BigInt& radicand, Degree degree,
                                             long long corrections);

/// Both runs share the floor seed. Requires corrections >= 1 and digits >= 1
/// (std::invalid_argument otherwise).
ComparisonTable compare_methods(const BigInt& radicand, Degree degree, long long corrections,
                                unsigned digits);

/// p^2 - N q^2 for x = p/q in lowest terms.
BigInt pell_form(const Rational& x, const BigInt& radicand);

}  // namespace surd
