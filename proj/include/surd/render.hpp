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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "surd/analysis.hpp"
#include "surd/roots.hpp"

namespace surd::render {

using nlohmann::json;

// JSON schema. Every big number (radicand, rationals, decimals) is a string;
// small counters (n, degree, bit sizes, digit counts) are native integers.

json to_json(const RootProblem& problem);
json to_json(const IterationRecord& rec);
json to_json(const UnitChain& chain);
json to_json(const ErrorRow& row);
json to_json(const DecimalApprox& d);

/// {problem, records, chain?, errors?}
json report_to_json(const ApproximationReport& report, const std::vector<ErrorRow>* errors);
json comparison_to_json(const ComparisonTable& table);
json circle_to_json(const Rational& radius, const CircleResult& result);

/// Inverse of report_to_json for the report part (problem, records, chain).
/// Throws std::invalid_argument on schema violations.
ApproximationReport report_from_json(const json& j);
std::vector<ErrorRow> errors_from_json(const json& j);

BoundSide bound_from_string(const std::string& s);
StepRule rule_from_string(const std::string& s);

/// "+1/3 +1/(3·4) −1/(3·4·34)"; with ascii, '*' and '-' replace '·' and '−'.
/// Non-integral chains list the exact terms followed by their ratios.
std::string render_chain(const UnitChain& chain, bool ascii);

/// Column-aligned plain-text table, columns separated by at least two spaces.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

void print_series_table(std::ostream& os, const ApproximationReport& report,
                        const std::vector<ErrorRow>* errors, bool ascii);
void print_comparison_table(std::ostream& os, const ComparisonTable& table);

}  // namespace surd::render
