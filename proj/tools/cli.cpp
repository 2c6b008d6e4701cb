// Copyright 2026 The Kirkman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kirkman/formulas.hpp"
#include "kirkman/lagrange.hpp"
#include "kirkman/series.hpp"

namespace kirkman::cli {
namespace {

enum class Method { kClosed, kSeries, kRadical, kLagrange };

const std::map<std::string, OutputFormat> kFormats = {
    {"pretty", OutputFormat::kPretty},
    {"csv", OutputFormat::kCsv},
    {"json-lines", OutputFormat::kJsonLines}};

const std::map<std::string, Method> kMethods = {
    {"closed", Method::kClosed},
    {"series", Method::kSeries},
    {"radical", Method::kRadical},
    {"lagrange", Method::kLagrange}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
std::vector<std::string> keys_of(const std::map<std::string, T>& m) {
  std::vector<std::string> keys;
  for (const auto& kv : m) keys.push_back(kv.first);
  return keys;
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(keys_of(kFormats)))
      ->capture_default_str();
}

BigInt closed_coeff(const CliHooks& hooks, const KirkmanIndex& idx) {
  return hooks.closed_coeff ? hooks.closed_coeff(idx)
                            : psi_power_coeff_closed(idx);
}

struct Cell {
  std::size_t m;
  std::size_t n;
  BigInt value;
};

void write_table(std::ostream& out, OutputFormat format,
                 const std::vector<Cell>& cells, const std::string& title) {
  switch (format) {
    case OutputFormat::kCsv:
      out << "m,n,coefficient\n";
      for (const auto& c : cells) out << c.m << ',' << c.n << ',' << c.value << '\n';
      break;
    case OutputFormat::kJsonLines:
      for (const auto& c : cells) {
        out << "{\"m\":" << c.m << ",\"n\":" << c.n
            << ",\"coefficient\":" << c.value << "}\n";
      }
      break;
    case OutputFormat::kPretty: {
      out << title << '\n';
      std::size_t width = std::string("coefficient").size();
      for (const auto& c : cells) width = std::max(width, c.value.get_str().size());
      out << std::setw(4) << "m" << std::setw(5) << "n" << "  "
          << std::setw(static_cast<int>(width)) << "coefficient" << '\n';
      for (const auto& c : cells) {
        out << std::setw(4) << c.m << std::setw(5) << c.n << "  "
            << std::setw(static_cast<int>(width)) << c.value.get_str() << '\n';
      }
      break;
    }
  }
}

// --- coeff -----------------------------------------------------------------

struct CoeffArgs {
  unsigned p = 1;
  std::size_t m = 0;
  std::size_t n = 0;
  OutputFormat format = OutputFormat::kPretty;
};

int cmd_coeff(const CoeffArgs& a, std::ostream& out, const CliHooks& hooks) {
  const BigInt value = closed_coeff(hooks, KirkmanIndex{a.p, a.m, a.n});
  if (a.format == OutputFormat::kPretty) {
    out << value << '\n';
  } else {
    write_table(out, a.format, {Cell{a.m, a.n, value}}, "");
  }
  return kExitOk;
}

// --- expand ----------------------------------------------------------------

struct ExpandArgs {
  unsigned p = 1;
  std::size_t max_m = 0;
  std::size_t max_n = 0;
  Method method = Method::kClosed;
  OutputFormat format = OutputFormat::kPretty;
};

int cmd_expand(const ExpandArgs& a, std::ostream& out, const CliHooks& hooks) {
  if (a.method == Method::kRadical && a.p != 1) {
    throw UsageError("--method radical is only available for --p 1");
  }
  const Rect window{a.max_m, a.max_n};
  std::optional<BiSeries> series;
  if (a.method == Method::kSeries) series = psi_power_series(a.p, window);
  if (a.method == Method::kRadical) series = psi_series_closed_form(window);

  std::vector<Cell> cells;
  cells.reserve(window.cell_count());
  for (std::size_t m = 0; m <= a.max_m; ++m) {
    for (std::size_t n = 0; n <= a.max_n; ++n) {
      BigInt v;
      switch (a.method) {
        case Method::kClosed:
          v = closed_coeff(hooks, KirkmanIndex{a.p, m, n});
          break;
        case Method::kSeries:
        case Method::kRadical:
          v = (*series)(m, n).to_integer();
          break;
        case Method::kLagrange:
          v = lagrange_coeff(a.p, m, n);
          break;
      }
      cells.push_back(Cell{m, n, std::move(v)});
    }
  }
  std::string method_name;
  for (const auto& [name, value] : kMethods)
    if (value == a.method) method_name = name;
  write_table(out, a.format, cells,
              "psi^" + std::to_string(a.p) + " coefficients [z^m w^n], method " +
                  method_name);
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  unsigned r = 1;
  unsigned s = 1;
  std::size_t max_M = 0;
  std::size_t max_N = 0;
  bool cayley = false;
  OutputFormat format = OutputFormat::kPretty;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err,
               const CliHooks& hooks) {
  const VerifyReport report =
      a.cayley && a.r == 1 && a.s == 1
          ? verify_cayley(a.max_M, hooks.closed_coeff)
          : verify_generalized(a.r, a.s, a.max_M, a.cayley ? 0 : a.max_N,
                               hooks.closed_coeff);

  switch (a.format) {
    case OutputFormat::kCsv:
      out << "M,N,lhs,rhs,status\n";
      for (const auto& c : report.cells) {
        out << c.M << ',' << c.N << ',' << c.lhs << ',' << c.rhs << ','
            << (c.ok ? "pass" : "fail") << '\n';
      }
      break;
    case OutputFormat::kJsonLines:
      for (const auto& c : report.cells) {
        out << "{\"M\":" << c.M << ",\"N\":" << c.N << ",\"lhs\":" << c.lhs
            << ",\"rhs\":" << c.rhs << ",\"status\":\""
            << (c.ok ? "pass" : "fail") << "\"}\n";
      }
      break;
    case OutputFormat::kPretty:
      if (report.passed()) {
        out << "PASS " << report.params_range << ": " << report.checked_count
            << " cases checked\n";
      } else {
        const auto& ce = *report.first_counterexample;
        out << "FAIL " << report.params_range << ": counterexample M="
            << ce.params.M << " N=" << ce.params.N << " lhs=" << ce.lhs
            << " rhs=" << ce.rhs << " after " << report.checked_count
            << " cases\n";
      }
      break;
  }
  if (!report.passed()) {
    const auto& ce = *report.first_counterexample;
    err << "counterexample: r=" << ce.params.r << " s=" << ce.params.s
        << " M=" << ce.params.M << " N=" << ce.params.N << " lhs=" << ce.lhs
        << " rhs=" << ce.rhs << '\n';
    return kExitDisagreement;
  }
  return kExitOk;
}

// --- crosscheck ------------------------------------------------------------

struct CrosscheckArgs {
  unsigned p = 1;
  std::size_t max_m = 0;
  std::size_t max_n = 0;
  OutputFormat format = OutputFormat::kPretty;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

std::string describe_routes(const CoeffReport& r) {
  std::ostringstream os;
  os << "closed=" << r.value_closed << " series=" << r.value_series
     << " lagrange=" << r.value_lagrange;
  if (r.value_radical) os << " radical=" << *r.value_radical;
  return os.str();
}

int cmd_crosscheck(const CrosscheckArgs& a, std::ostream& out,
                   std::ostream& err, const CliHooks& hooks) {
  const std::vector<CoeffReport> reports =
      cross_check_methods(a.p, a.max_m, a.max_n, hooks.closed_coeff);
  const auto first_bad = std::find_if(
      reports.begin(), reports.end(), [](const CoeffReport& r) { return !r.agree; });

  switch (a.format) {
    case OutputFormat::kCsv:
      out << "m,n,closed,series,lagrange,radical,agree\n";
      for (const auto& r : reports) {
        out << r.index.m << ',' << r.index.n << ',' << r.value_closed << ','
            << r.value_series << ',' << r.value_lagrange << ',';
        if (r.value_radical) out << *r.value_radical;
        out << ',' << (r.agree ? "true" : "false") << '\n';
      }
      break;
    case OutputFormat::kJsonLines:
      for (const auto& r : reports) {
        out << "{\"m\":" << r.index.m << ",\"n\":" << r.index.n
            << ",\"closed\":" << r.value_closed << ",\"series\":" << r.value_series
            << ",\"lagrange\":" << r.value_lagrange << ",\"radical\":";
        if (r.value_radical)
          out << *r.value_radical;
        else
          out << "null";
        out << ",\"agree\":" << (r.agree ? "true" : "false") << "}\n";
      }
      break;
    case OutputFormat::kPretty:
      if (first_bad == reports.end()) {
        out << "PASS p=" << a.p << " window (" << a.max_m << "," << a.max_n
            << "): " << reports.size() << " cells, all routes agree\n";
      } else {
        out << "FAIL p=" << a.p << " at (" << first_bad->index.m << ","
            << first_bad->index.n << "): " << describe_routes(*first_bad)
            << "; disagreeing routes: "
            << join(first_bad->disagreeing_routes(), ",") << '\n';
      }
      break;
  }
  if (first_bad != reports.end()) {
    err << "disagreement at p=" << a.p << " m=" << first_bad->index.m
        << " n=" << first_bad->index.n << ": " << describe_routes(*first_bad)
        << "; disagreeing routes: " << join(first_bad->disagreeing_routes(), ",")
        << '\n';
    return kExitDisagreement;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const CliHooks& hooks) {
  CLI::App app{"Coefficients of psi^p(z,w) and exact checks of the Kirkman "
               "convolution identity",
               "kirkman"};
  app.require_subcommand(1);

  std::string format_name = "pretty";
  CoeffArgs coeff;
  auto* coeff_cmd = app.add_subcommand("coeff", "Print [z^m w^n] psi^p");
  coeff_cmd->add_option("--p", coeff.p, "Power of psi (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  coeff_cmd->add_option("--m", coeff.m, "Exponent of z")->required();
  coeff_cmd->add_option("--n", coeff.n, "Exponent of w")->required();
  add_format_option(coeff_cmd, format_name);

  ExpandArgs expand;
  std::string method_name = "closed";
  auto* expand_cmd =
      app.add_subcommand("expand", "Print the coefficient table of psi^p");
  expand_cmd->add_option("--p", expand.p, "Power of psi (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  expand_cmd->add_option("--max-m", expand.max_m, "Largest z exponent")->required();
  expand_cmd->add_option("--max-n", expand.max_n, "Largest w exponent")->required();
  expand_cmd
      ->add_option("--method", method_name,
                   "Coefficient route; radical needs --p 1")
      ->check(CLI::IsMember(keys_of(kMethods)))
      ->capture_default_str();
  add_format_option(expand_cmd, format_name);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check the convolution identity for psi^r * psi^s");
  verify_cmd->add_option("--r", verify.r, "First power (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--s", verify.s, "Second power (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-M", verify.max_M, "Largest M")->required();
  auto* max_N_opt =
      verify_cmd->add_option("--max-N", verify.max_N, "Largest N");
  auto* cayley_flag =
      verify_cmd->add_flag("--cayley", verify.cayley, "Restrict the sweep to N = 0");
  cayley_flag->excludes(max_N_opt);
  add_format_option(verify_cmd, format_name);

  CrosscheckArgs cross;
  auto* cross_cmd = app.add_subcommand(
      "crosscheck", "Compare closed-form, series and Lagrange coefficients");
  cross_cmd->add_option("--p", cross.p, "Power of psi (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  cross_cmd->add_option("--max-m", cross.max_m, "Largest z exponent")->required();
  cross_cmd->add_option("--max-n", cross.max_n, "Largest w exponent")->required();
  add_format_option(cross_cmd, format_name);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (verify_cmd->parsed() && !verify.cayley && max_N_opt->count() == 0) {
      throw CLI::RequiredError("--max-N is required unless --cayley is given");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const OutputFormat format = kFormats.at(format_name);
  coeff.format = expand.format = verify.format = cross.format = format;
  expand.method = kMethods.at(method_name);

  // The sweep completes before anything is written, so a failure leaves no
  // partial output behind.
  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (coeff_cmd->parsed()) {
      code = cmd_coeff(coeff, buffer, hooks);
    } else if (expand_cmd->parsed()) {
      code = cmd_expand(expand, buffer, hooks);
    } else if (verify_cmd->parsed()) {
      code = cmd_verify(verify, buffer, err, hooks);
    } else {
      code = cmd_crosscheck(cross, buffer, err, hooks);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDisagreement;
  }
  out << buffer.str();
  return code;
}

}  // namespace kirkman::cli
