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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "surd/analysis.hpp"

using surd::BigInt;
using surd::BoundSide;
using surd::Degree;
using surd::Rational;

namespace {

// Digit-by-digit extraction: for each position pick the largest digit that
// keeps prefix^d <= N * 10^(d*k). Independent of the bisection oracle.
std::string digit_by_digit_root(long long n, int d, unsigned digits) {
  auto power = [d](const BigInt& v) { return d == 2 ? BigInt(v * v) : BigInt(v * v * v); };
  BigInt prefix = 0;
  while (power(prefix + 1) <= n) ++prefix;
  std::string out = prefix.str() + ".";
  BigInt target = n;
  for (unsigned k = 1; k <= digits; ++k) {
    target *= d == 2 ? 100 : 1000;
    prefix *= 10;
    int digit = 9;
    while (power(prefix + digit) > target) --digit;
    prefix += digit;
    out += static_cast<char>('0' + digit);
  }
  return out;
}

bool is_square(long long n) {
  long long a = 0;
  while (a * a < n) ++a;
  return a * a == n;
}

}  // namespace

TEST_CASE("oracle values") {
  CHECK(digit_by_digit_root(2, 2, 6) == "1.414213");
  CHECK(surd::to_string(surd::decimal_oracle_root(2, Degree::Square, 6)) == "1.414213");
  CHECK(digit_by_digit_root(10, 2, 6) == "3.162277");
  CHECK(surd::to_string(surd::decimal_oracle_root(10, Degree::Square, 6)) == "3.162277");
  CHECK(surd::to_string(surd::decimal_oracle_root(8, Degree::Cube, 3)) == "2.000");
  CHECK(surd::to_string(surd::decimal_oracle_root(0, Degree::Square, 2)) == "0.00");
  CHECK_THROWS_AS(surd::decimal_oracle_root(2, Degree::Square, 0), std::invalid_argument);
  CHECK_THROWS_AS(surd::decimal_oracle_root(-2, Degree::Square, 4), std::domain_error);
}

TEST_CASE("oracle agrees with digit-by-digit extraction") {
  for (long long n = 0; n <= 400; n += 3) {
    for (int d : {2, 3}) {
      const auto oracle = surd::decimal_oracle_root(n, surd::to_degree(d), 25);
      REQUIRE(surd::to_string(oracle) == digit_by_digit_root(n, d, 25));
    }
  }
}

TEST_CASE("oracle sandwich and prefix stability") {
  for (long long n : {2LL, 3LL, 5LL, 10LL, 145LL, 1748LL, 999999LL, 123456789LL}) {
    for (int d : {2, 3}) {
      const Degree deg = surd::to_degree(d);
      for (unsigned p = 1; p <= 40; p += 3) {
        const auto oracle = surd::decimal_oracle_root(n, deg, p);
        const BigInt v = oracle.scaled_magnitude();
        const BigInt target = BigInt(n) * surd::pow10(static_cast<unsigned>(d) * p);
        const BigInt lo = d == 2 ? BigInt(v * v) : BigInt(v * v * v);
        const BigInt hi = d == 2 ? BigInt((v + 1) * (v + 1)) : BigInt((v + 1) * (v + 1) * (v + 1));
        CHECK(lo <= target);
        CHECK(target < hi);
        CHECK(surd::truncate(surd::decimal_oracle_root(n, deg, p + 1), p) == oracle);
      }
    }
  }
}

TEST_CASE("matching digits") {
  const auto a = surd::to_decimal(Rational(577, 408), 10);
  const auto b = surd::decimal_oracle_root(2, Degree::Square, 10);
  CHECK(surd::matching_digits(a, b) == 5);
  CHECK(surd::matching_digits(b, b) == 10);
  CHECK(surd::matching_digits(surd::to_decimal(Rational(3, 2), 4), surd::to_decimal(Rational(5, 2), 4)) == 0);
}

TEST_CASE("error table for the square root of two") {
  const auto report = surd::baudhayana_series(2, Degree::Square, 3);
  const auto at7 = surd::error_table(report, 7);
  REQUIRE(at7.size() == 4);
  // 577/408 - 1.4142135 = 0.00000218627...
  CHECK(surd::to_string(at7[3].abs_error).rfind("0.0000021", 0) == 0);

  const auto at10 = surd::error_table(report, 10);
  CHECK(at10[3].correct_digits == 5);
  CHECK(at10[3].approximant == Rational(577, 408));
  CHECK(at10[3].num_bits == 10);
  CHECK(at10[3].den_bits == 9);
  CHECK(at10[0].correct_digits == 0);
  for (const auto& row : at10) {
    CHECK(row.correct_digits <= 10);
    CHECK(row.abs_error.sign == 1);
  }
}

TEST_CASE("error table for a perfect square") {
  const auto rows = surd::error_table(surd::baudhayana_series(9, Degree::Square, 3), 8);
  REQUIRE(rows.size() == 1);
  CHECK(surd::to_string(rows[0].abs_error) == "0.00000000");
  CHECK(rows[0].correct_digits == 8);
}

TEST_CASE("error table consistency with bounds") {
  const unsigned p = 15;
  for (long long n = 2; n <= 300; ++n) {
    for (int d : {2, 3}) {
      const Degree deg = surd::to_degree(d);
      const auto report = surd::baudhayana_series(n, deg, 3);
      const auto rows = surd::error_table(report, p);
      const Rational oracle = surd::decimal_oracle_root(n, deg, p).value();
      const Rational ulp(BigInt(1), surd::pow10(p));
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& rec = report.records[k];
        REQUIRE(rows[k].correct_digits <= p);
        if (rec.bound == BoundSide::Above) REQUIRE(rec.approximant > oracle);
        if (rec.bound == BoundSide::Below) REQUIRE(rec.approximant <= oracle + ulp);
      }
    }
  }
}

TEST_CASE("correct digits grow along the series") {
  for (long long n = 2; n <= 2000; ++n) {
    if (is_square(n)) continue;
    CAPTURE(n);
    const auto rows = surd::error_table(surd::baudhayana_series(n, Degree::Square, 4), 30);
    // From record 2 on the approximants fall towards the root from above.
    for (std::size_t k = 3; k < rows.size(); ++k) {
      REQUIRE(rows[k].correct_digits >= rows[k - 1].correct_digits);
    }
  }
}

TEST_CASE("crossing the root can cost a truncated digit") {
  // sqrt(156) = 12.48999...; 12.48 sits below it, 12.490... above.
  const auto rows = surd::error_table(surd::baudhayana_series(156, Degree::Square, 2), 10);
  CHECK(rows[1].approximant == Rational(312, 25));
  CHECK(rows[1].correct_digits == 2);
  CHECK(rows[2].correct_digits == 1);
  CHECK(abs(rows[2].approximant - Rational(156) / rows[2].approximant) <
        abs(rows[1].approximant - Rational(156) / rows[1].approximant));
}

TEST_CASE("denominators grow quadratically") {
  const auto report = surd::baudhayana_series(2, Degree::Square, 4);
  const std::vector<long long> dens{1, 3, 12, 408, 470832};
  for (std::size_t k = 0; k < dens.size(); ++k) {
    CHECK(report.records[k].approximant.den() == dens[k]);
  }
  CHECK(report.records[4].approximant == Rational(665857, 470832));
}

TEST_CASE("method comparison") {
  auto table = surd::compare_methods(2, Degree::Square, 1, 7);
  CHECK(table.runs[0].method == surd::Method::SeriesMorouziSeeded);
  CHECK(table.runs[1].method == surd::Method::PureNewtonFromFloor);
  CHECK(table.runs[0].records[1].approximant == Rational(4, 3));
  CHECK(table.runs[0].records[1].bound == BoundSide::Below);
  CHECK(table.runs[1].records[1].approximant == Rational(3, 2));
  CHECK(table.runs[1].records[1].bound == BoundSide::Above);

  table = surd::compare_methods(2, Degree::Square, 2, 7);
  CHECK(table.runs[1].records[2].approximant == Rational(17, 12));
  CHECK(table.runs[0].records[2].approximant == table.runs[1].records[2].approximant);

  table = surd::compare_methods(145, Degree::Square, 1, 12);
  CHECK(table.runs[0].records[1].approximant == Rational(301, 25));
  CHECK(table.runs[0].records[1].bound == BoundSide::Below);
  CHECK(table.runs[1].records[1].approximant == Rational(289, 24));
  CHECK(table.runs[1].records[1].bound == BoundSide::Above);

  table = surd::compare_methods(9, Degree::Square, 3, 5);
  for (const auto& run : table.runs) {
    REQUIRE(run.records.size() == 1);
    CHECK(run.records[0].approximant == Rational(3));
    CHECK(run.errors[0].correct_digits == 5);
  }

  CHECK_THROWS_AS(surd::compare_methods(2, Degree::Square, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(surd::compare_methods(2, Degree::Square, 2, 0), std::invalid_argument);
}

TEST_CASE("comparison runs share the seed") {
  for (long long n = 0; n <= 200; ++n) {
    for (int d : {2, 3}) {
      const auto table = surd::compare_methods(n, surd::to_degree(d), 3, 10);
      const auto& s = table.runs[0];
      const auto& p = table.runs[1];
      REQUIRE(s.records.size() == p.records.size());
      REQUIRE(s.records[0].approximant == p.records[0].approximant);
      REQUIRE(surd::to_string(s.errors[0].abs_error) == surd::to_string(p.errors[0].abs_error));
      REQUIRE(s.errors.size() == s.records.size());
    }
  }
}

TEST_CASE("cube comparison uses the cubic Newton seed") {
  const auto table = surd::compare_methods(1748, Degree::Cube, 1, 10);
  CHECK(table.runs[0].records[1].approximant == Rational(5648, 469));
  // 12 + 20 / (3 * 144)
  CHECK(table.runs[1].records[1].approximant == Rational(12) + Rational(20, 432));
}

TEST_CASE("pell form") {
  CHECK(surd::pell_form(Rational(577, 408), 2) == 1);
  CHECK(surd::pell_form(Rational(17, 12), 2) == 1);
  CHECK(surd::pell_form(Rational(3), 9) == 0);
  CHECK(surd::pell_form(Rational(665857, 470832), 2) == 1);
  CHECK(surd::pell_form(Rational(4, 3), 2) == -2);
}
