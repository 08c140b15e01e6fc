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

#include "surd/cli.hpp"

#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "surd/analysis.hpp"
#include "surd/render.hpp"
#include "surd/roots.hpp"

namespace surd::cli {

namespace {

enum class Format { Table, Json };

struct Options {
  Format format = Format::Table;
  bool ascii = false;

  std::string number;
  int degree = 2;
  long long iters = 3;
  long long max_iters = 64;
  unsigned digits = 10;
  bool chain = false;
  std::string mode = "subtle";
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BigInt parse_radicand(const std::string& text) {
  BigInt n = parse_bigint(text);
  if (n < 0) throw std::domain_error("radicand must be non-negative, got " + text);
  return n;
}

void check_cap(const Options& opt) {
  if (opt.iters > opt.max_iters) {
    throw UsageError("--iters " + std::to_string(opt.iters) + " exceeds the cap of " +
                     std::to_string(opt.max_iters) + " (raise it with --max-iters)");
  }
}

void emit(std::ostream& out, const render::json& j) { out << j.dump(2) << '\n'; }

int cmd_root(const Options& opt, std::ostream& out) {
  const BigInt n = parse_radicand(opt.number);
  const Degree degree = to_degree(opt.degree);
  const FloorRoot fr = floor_root(n, degree);
  const Rational correction = morouzi_first_correction(fr, degree);
  const Rational x = Rational(fr.root) + correction;
  const BoundSide bound = classify_bound(residual(n, x, degree));

  if (opt.format == Format::Json) {
    emit(out, {{"problem", render::to_json(RootProblem{n, degree})},
               {"floor_root", {{"root", fr.root.str()}, {"remainder", fr.remainder.str()}}},
               {"correction", to_string(correction)},
               {"approximant", to_string(x)},
               {"bound", std::string(to_string(bound))}});
    return kOk;
  }
  std::string shown = to_mixed_string(x);
  if (!x.is_integer()) shown += " = " + to_string(x);
  render::TextTable table({"N", n.str()});
  table.add_row({"degree", std::to_string(opt.degree)});
  table.add_row({"floor root", fr.root.str()});
  table.add_row({"remainder", fr.remainder.str()});
  table.add_row({"correction", to_string(correction)});
  table.add_row({"approximant", shown});
  table.add_row({"bound", std::string(to_string(bound))});
  table.print(out);
  return kOk;
}

int cmd_series(const Options& opt, bool digits_given, std::ostream& out) {
  const BigInt n = parse_radicand(opt.number);
  const Degree degree = to_degree(opt.degree);
  check_cap(opt);
  ApproximationReport report = baudhayana_series(n, degree, opt.iters);
  if (opt.chain && report.records.size() > 1) report.chain = unit_chain(report);

  std::vector<ErrorRow> errors;
  if (digits_given) errors = error_table(report, opt.digits);
  const std::vector<ErrorRow>* rows = digits_given ? &errors : nullptr;

  if (opt.format == Format::Json) {
    emit(out, render::report_to_json(report, rows));
  } else {
    render::print_series_table(out, report, rows, opt.ascii);
  }
  return kOk;
}

int cmd_circle(const Options& opt, std::ostream& out) {
  const Rational radius = parse_rational(opt.number);
  const CircleMode mode = opt.mode == "gross" ? CircleMode::Gross : CircleMode::Subtle;
  const CircleResult result = brahmagupta_circle(radius, mode);
  if (opt.format == Format::Json) {
    emit(out, render::circle_to_json(radius, result));
    return kOk;
  }
  render::TextTable table({"radius", to_string(radius)});
  table.add_row({"mode", std::string(to_string(mode))});
  table.add_row({"area", to_string(result.area)});
  table.add_row({"circumference", to_string(result.circumference)});
  table.print(out);
  return kOk;
}

int cmd_compare(const Options& opt, std::ostream& out) {
  const BigInt n = parse_radicand(opt.number);
  const Degree degree = to_degree(opt.degree);
  check_cap(opt);
  const ComparisonTable table = compare_methods(n, degree, opt.iters, opt.digits);
  if (opt.format == Format::Json) {
    emit(out, render::comparison_to_json(table));
  } else {
    render::print_comparison_table(out, table);
  }
  return kOk;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  const BigInt n = parse_radicand(opt.number);
  const Degree degree = to_degree(opt.degree);
  const DecimalApprox value = decimal_oracle_root(n, degree, opt.digits);
  if (opt.format == Format::Json) {
    emit(out, {{"problem", render::to_json(RootProblem{n, degree})},
               {"digits", opt.digits},
               {"value", to_string(value)}});
  } else {
    out << to_string(value) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact surd approximations: floor-root corrections, alternating series, "
               "circle rules and a decimal oracle"};
  app.name(args.empty() ? "surd" : args.front());
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}};
  app.add_option("--format", opt.format, "Output format: table or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--ascii", opt.ascii, "Use '*' and '-' instead of '·' and '−'");

  auto* root = app.add_subcommand("root", "First correction a + r/(2a+1) (or the cube analogue)");
  root->add_option("N", opt.number, "Radicand (non-negative integer)")->required();
  root->add_option("--degree", opt.degree, "2 or 3")->capture_default_str();

  auto* series = app.add_subcommand("series", "Alternating series with exact residuals");
  series->add_option("N", opt.number, "Radicand (non-negative integer)")->required();
  series->add_option("--degree", opt.degree, "2 or 3")->capture_default_str();
  series->add_option("--iters", opt.iters, "Number of corrections")->capture_default_str();
  series->add_option("--max-iters", opt.max_iters, "Cap on --iters")->capture_default_str();
  series->add_flag("--chain", opt.chain, "Show the unit-fraction chain");
  auto* digits_opt =
      series->add_option("--digits", opt.digits, "Add error rows against the decimal oracle")
          ->capture_default_str();

  auto* circle = app.add_subcommand("circle", "Circle area and circumference");
  circle->add_option("radius", opt.number, "Radius as p/q or p")->required();
  circle->add_option("--mode", opt.mode, "gross (pi = 3) or subtle (pi = sqrt 10 ~ 22/7)")
      ->check(CLI::IsMember({"gross", "subtle"}))
      ->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Series versus plain Newton from the floor root");
  compare->add_option("N", opt.number, "Radicand (non-negative integer)")->required();
  compare->add_option("--degree", opt.degree, "2 or 3")->capture_default_str();
  compare->add_option("--iters", opt.iters, "Number of iterations")->default_str("4");
  compare->add_option("--max-iters", opt.max_iters, "Cap on --iters")->capture_default_str();
  compare->add_option("--digits", opt.digits, "Oracle digits")->default_str("12");

  auto* oracle = app.add_subcommand("oracle", "Truncated decimal root by integer bisection");
  oracle->add_option("N", opt.number, "Radicand (non-negative integer)")->required();
  oracle->add_option("--degree", opt.degree, "2 or 3")->capture_default_str();
  oracle->add_option("--digits", opt.digits, "Fraction digits")->default_str("20");

  // Per-command defaults that differ from the shared Options defaults.
  compare->preparse_callback([&](std::size_t) {
    opt.iters = 4;
    opt.digits = 12;
  });
  oracle->preparse_callback([&](std::size_t) { opt.digits = 20; });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("surd");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  try {
    if (root->parsed()) return cmd_root(opt, out);
    if (series->parsed()) return cmd_series(opt, digits_opt->count() > 0, out);
    if (circle->parsed()) return cmd_circle(opt, out);
    if (compare->parsed()) return cmd_compare(opt, out);
    if (oracle->parsed()) return cmd_oracle(opt, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace surd::cli
