// Command-line surface for the sincpow library: number triangles, partial
// Bell polynomials, series expansions, identity sweeps, and convergence
// reports. Exit codes: 0 success, 1 identity counterexample, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <sincpow/bell.hpp>
#include <sincpow/evaluate.hpp>
#include <sincpow/expansions.hpp>
#include <sincpow/identities.hpp>
#include <sincpow/rational.hpp>
#include <sincpow/series.hpp>
#include <sincpow/triangles.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using sincpow::BellArgs;
using sincpow::BellMethod;
using sincpow::Cardinal;
using sincpow::ExpansionMethod;
using sincpow::ExpansionRequest;
using sincpow::IdentityReport;
using sincpow::Rational;
using sincpow::TruncatedSeries;

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  auto value = sincpow::parse_rational(text);
  if (!value) {
    throw std::runtime_error("invalid rational for " + flag + ": '" + text +
                             "' (expected P or P/Q)");
  }
  return *value;
}

BellArgs parse_args_list(const std::string& text) {
  BellArgs values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    values.push_back(parse_rational_flag(item, "--args"));
  }
  if (values.empty()) {
    throw std::runtime_error("--args must list at least one rational");
  }
  return values;
}

void print_series(const TruncatedSeries& s, const std::string& format) {
  if (format == "plain") {
    for (std::size_t i = 0; i <= s.order(); ++i) {
      std::cout << "z^" << i << ": " << sincpow::to_string(s[i]) << "\n";
    }
    return;
  }
  if (format == "csv") {
    std::cout << "power,coefficient\n";
    for (std::size_t i = 0; i <= s.order(); ++i) {
      if (s[i] == 0) continue;
      std::cout << i << "," << sincpow::to_string(s[i]) << "\n";
    }
    return;
  }
  nlohmann::ordered_json out;
  out["order"] = s.order();
  auto coeffs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i <= s.order(); ++i) {
    coeffs.push_back(sincpow::to_string(s[i]));
  }
  out["coefficients"] = coeffs;
  std::cout << out.dump() << "\n";
}

int print_report(const IdentityReport& report) {
  std::cout << "identity: " << report.identity_id << "\n";
  std::cout << "ranges: " << report.ranges << "\n";
  std::cout << "checked: " << report.checked << "\n";
  for (const auto& cx : report.counterexamples) {
    std::cout << "counterexample: indices=(";
    for (std::size_t i = 0; i < cx.indices.size(); ++i) {
      if (i > 0) std::cout << ",";
      std::cout << cx.indices[i];
    }
    std::cout << ") lhs=" << sincpow::to_string(cx.lhs)
              << " rhs=" << sincpow::to_string(cx.rhs) << "\n";
  }
  std::cout << "result: " << (report.verified() ? "verified" : "counterexample")
            << "\n";
  return report.verified() ? 0 : 1;
}

ExpansionMethod expansion_method_from(const std::string& name) {
  if (name == "cfn") return ExpansionMethod::cfn;
  if (name == "stirling") return ExpansionMethod::stirling;
  return ExpansionMethod::oracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact number triangles, partial Bell polynomials, and series "
               "expansions of powers of sinc and sinhc"};
  app.require_subcommand(1);

  auto* stirling_cmd =
      app.add_subcommand("stirling2", "Stirling number of the second kind S(n,k)");
  unsigned long s2_n = 0;
  unsigned long s2_k = 0;
  stirling_cmd->add_option("--n", s2_n)->required();
  stirling_cmd->add_option("--k", s2_k)->required();

  auto* weighted_cmd =
      app.add_subcommand("weighted", "Weighted Stirling number R(n,k,r)");
  unsigned long w_n = 0;
  unsigned long w_k = 0;
  std::string w_r;
  weighted_cmd->add_option("--n", w_n)->required();
  weighted_cmd->add_option("--k", w_k)->required();
  weighted_cmd->add_option("--r", w_r, "weight, P or P/Q")->required();

  auto* cfn_cmd = app.add_subcommand(
      "cfn", "Central factorial number of the second kind T(n,k)");
  unsigned long c_n = 0;
  unsigned long c_k = 0;
  bool c_scaled = false;
  cfn_cmd->add_option("--n", c_n)->required();
  cfn_cmd->add_option("--k", c_k)->required();
  cfn_cmd->add_flag("--scaled", c_scaled, "emit 2^(n-k) T(n,k) instead");

  auto* bell_cmd =
      app.add_subcommand("bell", "Partial Bell polynomial B_{n,k}");
  unsigned long b_n = 0;
  unsigned long b_k = 0;
  std::string b_args;
  bool b_sinc_args = false;
  std::string b_method = "recurrence";
  bell_cmd->add_option("--n", b_n)->required();
  bell_cmd->add_option("--k", b_k)->required();
  auto* args_opt =
      bell_cmd->add_option("--args", b_args, "comma-separated rationals x1,x2,...");
  auto* sinc_args_opt = bell_cmd->add_flag(
      "--sinc-args", b_sinc_args, "use the sinc-derivative sequence as arguments");
  args_opt->excludes(sinc_args_opt);
  bell_cmd->add_option("--method", b_method)
      ->check(CLI::IsMember({"recurrence", "cfn", "stirling"}));

  auto* series_cmd =
      app.add_subcommand("series", "Taylor coefficients of a power expansion");
  std::string se_function;
  std::string se_exponent = "1";
  unsigned long se_order = 0;
  std::string se_method = "cfn";
  std::string se_format = "plain";
  series_cmd->add_option("--function", se_function)
      ->required()
      ->check(CLI::IsMember({"sinc", "sinhc", "exp-sinc"}));
  auto* exponent_opt = series_cmd->add_option("--exponent", se_exponent, "P or P/Q");
  series_cmd->add_option("--order", se_order)->required();
  series_cmd->add_option("--method", se_method)
      ->check(CLI::IsMember({"cfn", "stirling", "oracle"}));
  series_cmd->add_option("--format", se_format)
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  auto* verify_cmd =
      app.add_subcommand("verify", "Sweep one of the number-triangle identities");
  std::string v_identity;
  unsigned long v_max = 0;
  verify_cmd->add_option("--identity", v_identity)
      ->required()
      ->check(CLI::IsMember(
          {"parity", "ts-relations", "alt-sum", "odd-blocks", "symfun"}));
  verify_cmd->add_option("--max", v_max, "sweep bound")->required();

  auto* eval_cmd = app.add_subcommand(
      "eval", "Convergence report of partial sums against direct evaluation");
  std::string e_function;
  std::string e_exponent;
  double e_z = 0.0;
  unsigned long e_order = 0;
  eval_cmd->add_option("--function", e_function)
      ->required()
      ->check(CLI::IsMember({"sinc", "sinhc"}));
  eval_cmd->add_option("--exponent", e_exponent, "P or P/Q")->required();
  eval_cmd->add_option("--z", e_z, "evaluation point")->required();
  eval_cmd->add_option("--order", e_order)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (stirling_cmd->parsed()) {
      std::cout << sincpow::to_string(sincpow::stirling2(s2_n, s2_k)) << "\n";
      return 0;
    }
    if (weighted_cmd->parsed()) {
      const Rational r = parse_rational_flag(w_r, "--r");
      std::cout << sincpow::to_string(sincpow::weighted_stirling(w_n, w_k, r))
                << "\n";
      return 0;
    }
    if (cfn_cmd->parsed()) {
      if (c_scaled) {
        std::cout << sincpow::to_string(sincpow::scaled_T(c_n, c_k)) << "\n";
      } else {
        std::cout << sincpow::to_string(sincpow::central_factorial_T(c_n, c_k))
                  << "\n";
      }
      return 0;
    }
    if (bell_cmd->parsed()) {
      if (args_opt->count() == 0 && !b_sinc_args) {
        throw std::runtime_error("bell: one of --args or --sinc-args is required");
      }
      Rational value;
      if (b_method == "recurrence") {
        const BellArgs args = b_sinc_args
                                  ? sincpow::sinc_derivative_args(b_n - b_k + 1)
                                  : parse_args_list(b_args);
        value = sincpow::bell_partial(b_n, b_k, args);
      } else {
        if (!b_sinc_args) {
          throw std::runtime_error(
              "bell: --method " + b_method +
              " evaluates the sinc-derivative sequence and requires --sinc-args");
        }
        value = sincpow::bell_sinc_closed(
            b_n, b_k, b_method == "cfn" ? BellMethod::cfn : BellMethod::stirling);
      }
      std::cout << sincpow::to_string(value) << "\n";
      return 0;
    }
    if (series_cmd->parsed()) {
      TruncatedSeries series(0);
      if (se_function == "exp-sinc") {
        if (exponent_opt->count() > 0) {
          throw std::runtime_error("series: exp-sinc does not take --exponent");
        }
        if (se_method == "oracle") {
          series = sincpow::exp1(
              sincpow::cardinal_series(Cardinal::sinc, se_order) - Rational(1));
        } else {
          series = sincpow::exp_sinc_series(
              se_order,
              se_method == "cfn" ? BellMethod::cfn : BellMethod::stirling);
        }
      } else {
        ExpansionRequest request;
        request.function =
            se_function == "sinc" ? Cardinal::sinc : Cardinal::sinhc;
        request.exponent = parse_rational_flag(se_exponent, "--exponent");
        request.order = se_order;
        request.method = expansion_method_from(se_method);
        series = sincpow::expand(request);
      }
      print_series(series, se_format);
      return 0;
    }
    if (verify_cmd->parsed()) {
      IdentityReport report;
      if (v_identity == "parity") {
        report = sincpow::check_parity_vanishing(v_max, v_max);
      } else if (v_identity == "ts-relations") {
        report = sincpow::check_T_S_relations(v_max, v_max);
      } else if (v_identity == "alt-sum") {
        report = sincpow::check_alternating_T_sum(v_max);
      } else if (v_identity == "odd-blocks") {
        report = sincpow::check_odd_block_counts(v_max);
      } else {
        const std::vector<Rational> weights = {
            Rational(0), Rational(1), sincpow::make_rational(-1, 2),
            sincpow::make_rational(3, 7)};
        report = sincpow::check_symmetric_function(v_max, weights);
      }
      return print_report(report);
    }
    if (eval_cmd->parsed()) {
      const Rational r = parse_rational_flag(e_exponent, "--exponent");
      const Cardinal function =
          e_function == "sinc" ? Cardinal::sinc : Cardinal::sinhc;
      const auto records = sincpow::convergence_report(function, r, e_z, e_order);
      std::cout << "order,partial_sum,reference,abs_error\n";
      char line[128];
      for (const auto& record : records) {
        std::snprintf(line, sizeof(line), "%zu,%.17g,%.17g,%.17g", record.order,
                      record.partial_sum, record.reference, record.abs_error);
        std::cout << line << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
