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

#include "surd/roots.hpp"

#include <string>

namespace surd {

namespace {

BigInt ipow(const BigInt& base, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

void require_supported(Degree degree) {
  if (degree != Degree::Square && degree != Degree::Cube) {
    throw std::invalid_argument("unsupported degree " + std::to_string(exponent(degree)));
  }
}

}  // namespace

Degree to_degree(int d) {
  if (d == 2) return Degree::Square;
  if (d == 3) return Degree::Cube;
  throw std::invalid_argument("unsupported degree " + std::to_string(d) + " (expected 2 or 3)");
}

std::string_view to_string(BoundSide b) {
  switch (b) {
    case BoundSide::Below: return "Below";
    case BoundSide::Above: return "Above";
    case BoundSide::Exact: return "Exact";
  }
  return "?";
}

std::string_view to_string(StepRule r) {
  switch (r) {
    case StepRule::FloorSeed: return "FloorSeed";
    case StepRule::MorouziFirst: return "MorouziFirst";
    case StepRule::NewtonNeglect: return "NewtonNeglect";
  }
  return "?";
}

std::string_view to_string(CircleMode m) { return m == CircleMode::Gross ? "gross" : "subtle"; }

DegenerateChainError::DegenerateChainError(std::size_t index)
    : std::domain_error("degenerate unit chain: correction " + std::to_string(index) + " is zero"),
      index_(index) {}

FloorRoot floor_root(const BigInt& radicand, Degree degree) {
  require_supported(degree);
  if (radicand < 0) throw std::domain_error("negative radicand " + radicand.str());
  const int d = exponent(degree);

  // Invariant: lo^d <= N < hi^d.
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bit_length(radicand) / d + 1);
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) >> 1;
    if (ipow(mid, d) <= radicand) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return {lo, radicand - ipow(lo, d)};
}

Rational morouzi_first_correction(const FloorRoot& fr, Degree degree) {
  require_supported(degree);
  if (fr.remainder == 0) return 0;
  const BigInt& a = fr.root;
  // The unknown complement is replaced by 1 in its own denominator.
  BigInt divisor = degree == Degree::Square ? BigInt(2 * a + 1) : BigInt(3 * a * a + 3 * a + 1);
  return Rational(fr.remainder, std::move(divisor));
}

Rational morouzi_approx(const BigInt& radicand, Degree degree) {
  const FloorRoot fr = floor_root(radicand, degree);
  return Rational(fr.root) + morouzi_first_correction(fr, degree);
}

Rational residual(const BigInt& radicand, const Rational& x, Degree degree) {
  return Rational(radicand) - pow(x, static_cast<unsigned>(exponent(degree)));
}

BoundSide classify_bound(const Rational& residual) {
  switch (residual.sign()) {
    case 1: return BoundSide::Below;
    case -1: return BoundSide::Above;
    default: return BoundSide::Exact;
  }
}

Rational newton_neglect_step(const Rational& x, const BigInt& radicand, Degree degree) {
  require_supported(degree);
  if (x.sign() <= 0) throw std::domain_error("continuation step needs x > 0, got " + to_string(x));
  const int d = exponent(degree);
  Rational slope = Rational(d) * pow(x, static_cast<unsigned>(d - 1));
  return x + residual(radicand, x, degree) / slope;
}

ApproximationReport baudhayana_series(const BigInt& radicand, Degree degree, long long corrections) {
  if (corrections < 0) {
    throw std::invalid_argument("iteration count must be non-negative, got " +
                                std::to_string(corrections));
  }
  const FloorRoot fr = floor_root(radicand, degree);

  ApproximationReport report;
  report.problem = {radicand, degree};

  IterationRecord seed;
  seed.index = 0;
  seed.approximant = Rational(fr.root);
  seed.correction = 0;
  seed.residual = Rational(fr.remainder);
  seed.bound = classify_bound(seed.residual);
  seed.rule = StepRule::FloorSeed;
  report.records.push_back(seed);
  if (fr.remainder == 0) return report;

  const int d = exponent(degree);
  for (long long n = 1; n <= corrections; ++n) {
    const IterationRecord& prev = report.records.back();
    IterationRecord rec;
    rec.index = static_cast<std::size_t>(n);
    if (n == 1) {
      rec.correction = morouzi_first_correction(fr, degree);
      rec.rule = StepRule::MorouziFirst;
    } else {
      rec.correction =
          prev.residual / (Rational(d) * pow(prev.approximant, static_cast<unsigned>(d - 1)));
      rec.rule = StepRule::NewtonNeglect;
    }
    rec.approximant = prev.approximant + rec.correction;
    rec.residual = residual(radicand, rec.approximant, degree);
    rec.bound = classify_bound(rec.residual);
    report.records.push_back(std::move(rec));
  }
  return report;
}

UnitChain unit_chain(const ApproximationReport& report) {
  if (report.records.size() < 2) {
    throw std::invalid_argument("unit chain needs at least one correction");
  }
  UnitChain chain;
  Rational previous = 1;
  for (std::size_t n = 1; n < report.records.size(); ++n) {
    const Rational& eps = report.records[n].correction;
    if (eps.is_zero()) throw DegenerateChainError(n);
    const Rational magnitude = abs(eps);
    Rational ratio = previous / magnitude;
    chain.all_integral = chain.all_integral && ratio.is_integer();
    chain.signs.push_back(eps.sign());
    chain.ratios.push_back(std::move(ratio));
    previous = magnitude;
  }
  return chain;
}

CircleResult brahmagupta_circle(const Rational& radius, CircleMode mode) {
  if (radius.sign() <= 0) throw std::domain_error("radius must be positive, got " + to_string(radius));
  const Rational pi = mode == CircleMode::Gross ? Rational(3) : morouzi_approx(10, Degree::Square);
  return {mode, pi * radius * radius, pi * Rational(2) * radius};
}

}  // namespace surd
