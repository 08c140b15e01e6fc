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

#include "surd/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace surd {

DecimalApprox decimal_oracle_root(const BigInt& radicand, Degree degree, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("oracle needs at least one digit");
  const int d = exponent(degree);
  const BigInt scaled = radicand * pow10(static_cast<unsigned>(d) * digits);
  const FloorRoot fr = floor_root(scaled, degree);
  return decimal_from_scaled(1, fr.root, digits);
}

unsigned matching_digits(const DecimalApprox& a, const DecimalApprox& b) {
  if (a.sign != b.sign || a.integer_part != b.integer_part) return 0;
  unsigned n = 0;
  const std::size_t len = std::min(a.fraction_digits.size(), b.fraction_digits.size());
  while (n < len && a.fraction_digits[n] == b.fraction_digits[n]) ++n;
  return n;
}

namespace {

std::vector<ErrorRow> rows_against(const std::vector<IterationRecord>& records,
                                   const DecimalApprox& oracle) {
  const unsigned digits = oracle.scale;
  const Rational reference = oracle.value();
  std::vector<ErrorRow> rows;
  rows.reserve(records.size());
  for (const IterationRecord& rec : records) {
    ErrorRow row;
    row.index = rec.index;
    row.approximant = rec.approximant;
    row.abs_error = to_decimal(abs(rec.approximant - reference), digits);
    row.correct_digits = matching_digits(to_decimal(rec.approximant, digits), oracle);
    row.num_bits = bit_length(rec.approximant.num());
    row.den_bits = bit_length(rec.approximant.den());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<ErrorRow> error_table(const ApproximationReport& report, unsigned digits) {
  const DecimalApprox oracle =
      decimal_oracle_root(report.problem.radicand, report.problem.degree, digits);
  return rows_against(report.records, oracle);
}

std::string_view to_string(Method m) {
  return m == Method::SeriesMorouziSeeded ? "SeriesMorouziSeeded" : "PureNewtonFromFloor";
}

std::vector<IterationRecord> pure_newton_run(const BigInt& radicand, Degree degree,
                                             long long corrections) {
  if (corrections < 0) throw std::invalid_argument("iteration count must be non-negative");
  const FloorRoot fr = floor_root(radicand, degree);

  std::vector<IterationRecord> records;
  IterationRecord seed;
  seed.approximant = Rational(fr.root);
  seed.residual = Rational(fr.remainder);
  seed.bound = classify_bound(seed.residual);
  seed.rule = StepRule::FloorSeed;
  records.push_back(seed);
  if (fr.remainder == 0) return records;

  for (long long n = 1; n <= corrections; ++n) {
    const IterationRecord& prev = records.back();
    IterationRecord rec;
    rec.index = static_cast<std::size_t>(n);
    rec.approximant = newton_neglect_step(prev.approximant, radicand, degree);
    rec.correction = rec.approximant - prev.approximant;
    rec.residual = residual(radicand, rec.approximant, degree);
    rec.bound = classify_bound(rec.residual);
    rec.rule = StepRule::NewtonNeglect;
    records.push_back(std::move(rec));
  }
  return records;
}

ComparisonTable compare_methods(const BigInt& radicand, Degree degree, long long corrections,
                                unsigned digits) {
  if (corrections < 1) throw std::invalid_argument("comparison needs at least one iteration");
  if (digits == 0) throw std::invalid_argument("comparison needs at least one digit");

  ComparisonTable table;
  table.problem = {radicand, degree};
  table.digits = digits;
  const DecimalApprox oracle = decimal_oracle_root(radicand, degree, digits);

  MethodRun& series = table.runs[0];
  series.method = Method::SeriesMorouziSeeded;
  series.records = baudhayana_series(radicand, degree, corrections).records;
  series.errors = rows_against(series.records, oracle);

  MethodRun& newton = table.runs[1];
  newton.method = Method::PureNewtonFromFloor;
  newton.records = pure_newton_run(radicand, degree, corrections);
  newton.errors = rows_against(newton.records, oracle);
  return table;
}

BigInt pell_form(const Rational& x, const BigInt& radicand) {
  return x.num() * x.num() - radicand * x.den() * x.den();
}

}  // namespace surd
