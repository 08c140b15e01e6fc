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
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "surd/bigint.hpp"
#include "surd/rational.hpp"

namespace surd {

enum class Degree : int { Square = 2, Cube = 3 };

/// Throws std::invalid_argument for anything other than 2 or 3.
Degree to_degree(int d);
inline int exponent(Degree d) { return static_cast<int>(d); }

struct RootProblem {
  BigInt radicand;
  Degree degree = Degree::Square;
};

/// N = a^d + r with a^d <= N < (a+1)^d.
struct FloorRoot {
  BigInt root;
  BigInt remainder;
};

enum class BoundSide { Below, Above, Exact };
enum class StepRule { FloorSeed, MorouziFirst, NewtonNeglect };

std::string_view to_string(BoundSide b);
std::string_view to_string(StepRule r);

struct IterationRecord {
  std::size_t index = 0;
  Rational approximant;
  Rational correction;  // zero at index 0
  Rational residual;    // N - x^d, signed
  BoundSide bound = BoundSide::Exact;
  StepRule rule = StepRule::FloorSeed;
};

/// Terms written as signs[n] / (d_1 * ... * d_n) when every ratio is an
/// integer; ratios are kept exact otherwise.
struct UnitChain {
  std::vector<int> signs;
  std::vector<Rational> ratios;
  bool all_integral = true;
};

struct ApproximationReport {
  RootProblem problem;
  std::vector<IterationRecord> records;
  std::optional<UnitChain> chain;

  const Rational& final_approximant() const { return records.back().approximant; }
};

/// Raised by unit_chain when a zero correction follows a nonzero one.
class DegenerateChainError : public std::domain_error {
 public:
  explicit DegenerateChainError(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Integer binary search; no floating point. Negative N throws
/// std::domain_error, a degree outside {2, 3} std::invalid_argument.
FloorRoot floor_root(const BigInt& radicand, Degree degree);

/// r/(2a+1) for squares, r/(3a^2+3a+1) for cubes; zero when r == 0.
Rational morouzi_first_correction(const FloorRoot& fr, Degree degree);

/// a + morouzi_first_correction: a lower bound, exact for perfect powers.
Rational morouzi_approx(const BigInt& radicand, Degree degree);

/// N - x^d.
Rational residual(const BigInt& radicand, const Rational& x, Degree degree);

BoundSide classify_bound(const Rational& residual);

/// x + (N - x^d) / (d x^{d-1}): the continuation step obtained by dropping
/// the unknown correction from its own denominator. Throws
/// std::domain_error when x <= 0.
Rational newton_neglect_step(const Rational& x, const BigInt& radicand, Degree degree);

/// Floor seed, then the first correction, then `corrections - 1` neglect
/// steps. A perfect d-th power stops at the seed with bound Exact.
/// A negative count throws std::invalid_argument.
ApproximationReport baudhayana_series(const BigInt& radicand, Degree degree, long long corrections);

/// Ratios of successive corrections: d_1 = 1/|e_1|, d_n = |e_{n-1}|/|e_n|.
UnitChain unit_chain(const ApproximationReport& report);

enum class CircleMode { Gross, Subtle };

struct CircleResult {
  CircleMode mode = CircleMode::Gross;
  Rational area;
  Rational circumference;
};

std::string_view to_string(CircleMode m);

/// Gross uses 3 for pi. Subtle uses morouzi_approx(10, 2) = 22/7 in place
/// of sqrt(10). Non-positive radii throw std::domain_error.
CircleResult brahmagupta_circle(const Rational& radius, CircleMode mode);

}  // namespace surd
