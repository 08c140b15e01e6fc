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

#include "surd/render.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace surd::render {

json to_json(const RootProblem& problem) {
  return {{"radicand", problem.radicand.str()}, {"degree", exponent(problem.degree)}};
}

json to_json(const IterationRecord& rec) {
  return {{"n", rec.index},
          {"epsilon", to_string(rec.correction)},
          {"x", to_string(rec.approximant)},
          {"residual", to_string(rec.residual)},
          {"bound", std::string(to_string(rec.bound))},
          {"rule", std::string(to_string(rec.rule))}};
}

json to_json(const UnitChain& chain) {
  json ratios = json::array();
  for (const Rational& r : chain.ratios) ratios.push_back(to_string(r));
  return {{"signs", chain.signs}, {"ratios", ratios}, {"all_integral", chain.all_integral}};
}

json to_json(const DecimalApprox& d) { return to_string(d); }

json to_json(const ErrorRow& row) {
  return {{"n", row.index},
          {"approximant", to_string(row.approximant)},
          {"abs_error", to_string(row.abs_error)},
          {"correct_digits", row.correct_digits},
          {"num_bits", row.num_bits},
          {"den_bits", row.den_bits}};
}

namespace {

json records_to_json(const std::vector<IterationRecord>& records) {
  json out = json::array();
  for (const IterationRecord& rec : records) out.push_back(to_json(rec));
  return out;
}

json errors_to_json(const std::vector<ErrorRow>& rows) {
  json out = json::array();
  for (const ErrorRow& row : rows) out.push_back(to_json(row));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

// Rationals must arrive in canonical text form.
Rational rational_field(const json& j, const char* key) {
  const std::string text = string_field(j, key);
  Rational r = parse_rational(text);
  if (to_string(r) != text) {
    throw std::invalid_argument("non-canonical rational '" + text + "' in field '" + key + "'");
  }
  return r;
}

DecimalApprox parse_decimal(const std::string& text) {
  std::string_view body = text;
  int sign = 1;
  if (!body.empty() && body.front() == '-') {
    sign = -1;
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  if (dot == std::string_view::npos || dot + 1 >= body.size()) {
    throw std::invalid_argument("not a truncated decimal: '" + text + "'");
  }
  const std::string_view frac = body.substr(dot + 1);
  if (frac.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not a truncated decimal: '" + text + "'");
  }
  const BigInt whole = parse_bigint(body.substr(0, dot));
  const auto scale = static_cast<unsigned>(frac.size());
  return decimal_from_scaled(sign, whole * pow10(scale) + parse_bigint(frac), scale);
}

}  // namespace

json report_to_json(const ApproximationReport& report, const std::vector<ErrorRow>* errors) {
  json out = {{"problem", to_json(report.problem)}, {"records", records_to_json(report.records)}};
  if (report.chain) out["chain"] = to_json(*report.chain);
  if (errors != nullptr) out["errors"] = errors_to_json(*errors);
  return out;
}

json comparison_to_json(const ComparisonTable& table) {
  json methods = json::array();
  for (const MethodRun& run : table.runs) {
    methods.push_back({{"method", std::string(to_string(run.method))},
                       {"records", records_to_json(run.records)},
                       {"errors", errors_to_json(run.errors)}});
  }
  return {{"problem", to_json(table.problem)}, {"digits", table.digits}, {"methods", methods}};
}

json circle_to_json(const Rational& radius, const CircleResult& result) {
  return {{"radius", to_string(radius)},
          {"mode", std::string(to_string(result.mode))},
          {"area", to_string(result.area)},
          {"circumference", to_string(result.circumference)}};
}

BoundSide bound_from_string(const std::string& s) {
  for (BoundSide b : {BoundSide::Below, BoundSide::Above, BoundSide::Exact}) {
    if (s == to_string(b)) return b;
  }
  throw std::invalid_argument("unknown bound '" + s + "'");
}

StepRule rule_from_string(const std::string& s) {
  for (StepRule r : {StepRule::FloorSeed, StepRule::MorouziFirst, StepRule::NewtonNeglect}) {
    if (s == to_string(r)) return r;
  }
  throw std::invalid_argument("unknown rule '" + s + "'");
}

ApproximationReport report_from_json(const json& j) {
  ApproximationReport report;
  const json& problem = field(j, "problem");
  report.problem.radicand = parse_bigint(string_field(problem, "radicand"));
  report.problem.degree = to_degree(field(problem, "degree").get<int>());

  const json& records = field(j, "records");
  if (!records.is_array()) throw std::invalid_argument("'records' must be an array");
  for (const json& r : records) {
    IterationRecord rec;
    rec.index = field(r, "n").get<std::size_t>();
    rec.correction = rational_field(r, "epsilon");
    rec.approximant = rational_field(r, "x");
    rec.residual = rational_field(r, "residual");
    rec.bound = bound_from_string(string_field(r, "bound"));
    rec.rule = rule_from_string(string_field(r, "rule"));
    report.records.push_back(std::move(rec));
  }

  if (j.contains("chain")) {
    const json& c = j.at("chain");
    UnitChain chain;
    chain.signs = field(c, "signs").get<std::vector<int>>();
    for (const json& ratio : field(c, "ratios")) {
      if (!ratio.is_string()) throw std::invalid_argument("chain ratios must be strings");
      chain.ratios.push_back(parse_rational(ratio.get<std::string>()));
    }
    chain.all_integral = field(c, "all_integral").get<bool>();
    report.chain = std::move(chain);
  }
  return report;
}

std::vector<ErrorRow> errors_from_json(const json& j) {
  std::vector<ErrorRow> rows;
  for (const json& e : field(j, "errors")) {
    ErrorRow row;
    row.index = field(e, "n").get<std::size_t>();
    row.approximant = rational_field(e, "approximant");
    row.abs_error = parse_decimal(string_field(e, "abs_error"));
    row.correct_digits = field(e, "correct_digits").get<unsigned>();
    row.num_bits = field(e, "num_bits").get<std::size_t>();
    row.den_bits = field(e, "den_bits").get<std::size_t>();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_chain(const UnitChain& chain, bool ascii) {
  const std::string times = ascii ? "*" : "·";
  const std::string minus = ascii ? "-" : "−";
  std::string out;
  if (chain.all_integral) {
    std::string product;
    for (std::size_t n = 0; n < chain.ratios.size(); ++n) {
      if (n != 0) product += times;
      product += to_string(chain.ratios[n]);
      if (!out.empty()) out += ' ';
      out += chain.signs[n] < 0 ? minus : "+";
      out += n == 0 ? "1/" + product : "1/(" + product + ")";
    }
    return out;
  }
  // Reconstruct the exact terms: |e_n| = |e_{n-1}| / d_n.
  Rational magnitude = 1;
  std::string ratios;
  for (std::size_t n = 0; n < chain.ratios.size(); ++n) {
    magnitude /= chain.ratios[n];
    if (!out.empty()) out += ' ';
    out += chain.signs[n] < 0 ? minus : "+";
    out += to_string(magnitude);
    ratios += (n == 0 ? "" : ", ") + to_string(chain.ratios[n]);
  }
  return out + " (ratios " + ratios + ")";
}

void TextTable::print(std::ostream& os) const {
  std::vector<std::size_t> widths(header_.size(), 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  };
  measure(header_);
  for (const auto& row : rows_) measure(row);

  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    os << line << '\n';
  };
  emit(header_);
  for (const auto& row : rows_) emit(row);
}

void print_series_table(std::ostream& os, const ApproximationReport& report,
                        const std::vector<ErrorRow>* errors, bool ascii) {
  const std::size_t corrections = report.records.size() - 1;
  os << "N = " << report.problem.radicand << ", degree " << exponent(report.problem.degree) << ", "
     << corrections << (corrections == 1 ? " correction" : " corrections") << "\n\n";

  TextTable table({"n", "epsilon", "x", "mixed", "residual", "bound", "rule"});
  for (const IterationRecord& rec : report.records) {
    table.add_row({std::to_string(rec.index), to_string(rec.correction), to_string(rec.approximant),
                   to_mixed_string(rec.approximant), to_string(rec.residual),
                   std::string(to_string(rec.bound)), std::string(to_string(rec.rule))});
  }
  table.print(os);

  if (report.chain) {
    os << "\nchain  " << report.records.front().approximant << ' '
       << render_chain(*report.chain, ascii) << '\n';
  }

  if (errors != nullptr) {
    os << '\n';
    TextTable err({"n", "x", "abs_error", "correct_digits", "num_bits", "den_bits"});
    for (const ErrorRow& row : *errors) {
      err.add_row({std::to_string(row.index), to_string(row.approximant), to_string(row.abs_error),
                   std::to_string(row.correct_digits), std::to_string(row.num_bits),
                   std::to_string(row.den_bits)});
    }
    err.print(os);
  }
}

void print_comparison_table(std::ostream& os, const ComparisonTable& table) {
  os << "N = " << table.problem.radicand << ", degree " << exponent(table.problem.degree) << ", "
     << table.digits << " digits\n\n";
  TextTable out({"method", "n", "x", "bound", "abs_error", "correct_digits", "num_bits", "den_bits"});
  for (const MethodRun& run : table.runs) {
    for (std::size_t i = 0; i < run.records.size(); ++i) {
      const IterationRecord& rec = run.records[i];
      const ErrorRow& row = run.errors[i];
      out.add_row({std::string(to_string(run.method)), std::to_string(rec.index),
                   to_string(rec.approximant), std::string(to_string(rec.bound)),
                   to_string(row.abs_error), std::to_string(row.correct_digits),
                   std::to_string(row.num_bits), std::to_string(row.den_bits)});
    }
  }
  out.print(os);
}

}  // namespace surd::render
