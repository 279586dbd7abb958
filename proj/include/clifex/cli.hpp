#pragma once

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <clifex/algebra.hpp>
#include <clifex/errors.hpp>
#include <clifex/exponential.hpp>
#include <clifex/io.hpp>
#include <clifex/isomorphism.hpp>
#include <clifex/kmatrix.hpp>
#include <clifex/matrix_io.hpp>
#include <clifex/matrix_ref.hpp>
#include <clifex/scalars.hpp>
#include <clifex/structure.hpp>

namespace clifex {

inline std::string format_blade_list(const std::vector<Blade>& blades) {
  std::string out = "[";
  for (std::size_t i = 0; i < blades.size(); ++i) {
    if (i) out += ", ";
    out += blade_name(blades[i]);
  }
  return out + "]";
}

inline std::string format_algebra_data(const AlgebraData& data) {
  std::string out = "[";
  out += k_kind_name(data.field);
  out += ", " + std::to_string(data.spinor_dim);
  out += data.simple ? ", simple, " : ", semisimple, ";
  out += format_multivector(data.idempotent);
  out += ", " + format_blade_list(data.ideal_generators);
  out += ", " + format_blade_list(data.k_generators);
  out += ", " + format_blade_list(data.spinor_generators);
  return out + "]";
}

namespace detail {

inline Signature parse_signature_text(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError("signature must be two comma-separated integers P,Q", 0);
  auto part_value = [&](const std::string& part, std::size_t offset) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("signature must be two comma-separated integers P,Q", offset);
    if (part.size() > 4) throw DomainError("signature component out of range: " + part);
    return std::stoi(part);
  };
  int p = part_value(text.substr(0, comma), 0);
  int q = part_value(text.substr(comma + 1), comma + 1);
  return Signature(p, q);
}

inline int env_default_digits() {
  const char* env = std::getenv("CLIFEX_DIGITS");
  if (env == nullptr || *env == '\0') return 20;
  std::string text(env);
  bool ok = text.find_first_not_of("0123456789") == std::string::npos && text.size() <= 4;
  int value = ok ? std::stoi(text) : 0;
  if (!ok || value < 1 || value > max_report_digits)
    throw DomainError("CLIFEX_DIGITS must be an integer between 1 and " +
                      std::to_string(max_report_digits) + ", got \"" + text + "\"");
  return value;
}

inline void require_digits_in_range(int digits) {
  if (digits < 1 || digits > max_report_digits)
    throw DomainError("digits must be between 1 and " + std::to_string(max_report_digits) +
                      ", got " + std::to_string(digits));
}

inline Signature resolve_signature(const MatrixDocument& doc,
                                   const std::optional<Signature>& explicit_sig) {
  if (explicit_sig) return *explicit_sig;
  if (doc.signature) return *doc.signature;
  return default_signature(doc.kind, doc.rows.size());
}

inline const ReprTable& table_for(const MatrixDocument& doc, const KMatrix<Rational>& a,
                                  const std::optional<Signature>& explicit_sig) {
  Signature sig = resolve_signature(doc, explicit_sig);
  const ReprTable& table = ReprTable::get(sig);
  if (table.kind() != doc.kind)
    throw DomainError("Cl" + sig.str() + " represents " + k_kind_name(table.kind()) +
                      " matrices, but the document is " + k_kind_name(doc.kind));
  std::size_t n = table.spinor_dim();
  if (a.rows() != n || a.cols() != n)
    throw DomainError("Cl" + sig.str() + " represents " + std::to_string(n) + "x" +
                      std::to_string(n) + " matrices, got " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()));
  return table;
}

struct SeriesFlags {
  unsigned order = 0;
  bool order_set = false;
  std::string eps_text;
};

inline Multivector<Rational> run_series(const Multivector<Rational>& p, const SeriesFlags& flags) {
  if (flags.order_set) return exp_series(p, flags.order);
  if (!flags.eps_text.empty()) return exp_converged(p, parse_decimal(flags.eps_text)).value;
  return exp_converged(p).value;
}

}  // namespace detail

// Dispatches one command line (without the program name) and writes its report
// to `out`. Returns 0 on success, 1 on domain errors, 2 on parse errors.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"Matrix exponentials through Clifford algebra representations"};
  app.name("clifex");
  app.require_subcommand(1);

  int opt_p = 0;
  int opt_q = 0;
  std::string opt_sig;
  std::string opt_matrix;
  std::string opt_expr;
  std::string opt_format = "float";
  int opt_digits = 0;
  detail::SeriesFlags series;

  CLI::App* clidata = app.add_subcommand(
      "clidata", "Print the structure tuple of Cl(p,q): field, spinor dimension, simplicity, "
                 "primitive idempotent, ideal/K/spinor generators");
  clidata->add_option("-p", opt_p, "generators squaring to +1")->required();
  clidata->add_option("-q", opt_q, "generators squaring to -1")->required();
  clidata->callback(
      [&] { out << format_algebra_data(algebra_data(Signature(opt_p, opt_q))) << "\n"; });

  auto add_matrix_option = [&](CLI::App* cmd, bool required) {
    CLI::Option* o = cmd->add_option("--matrix", opt_matrix, "JSON matrix file");
    if (required) o->required();
    return o;
  };
  auto add_sig_option = [&](CLI::App* cmd) {
    return cmd->add_option("--sig", opt_sig, "algebra signature P,Q (default: from the file kind)");
  };
  auto explicit_sig = [&]() -> std::optional<Signature> {
    if (opt_sig.empty()) return std::nullopt;
    return detail::parse_signature_text(opt_sig);
  };
  auto add_series_options = [&](CLI::App* cmd) {
    CLI::Option* order = cmd->add_option("--order", series.order, "fixed series truncation order");
    CLI::Option* eps = cmd->add_option("--eps", series.eps_text,
                                       "stop once successive partial sums differ by less than "
                                       "this bound (default 1e-19)");
    order->excludes(eps);
  };

  CLI::App* phi = app.add_subcommand("phi", "Map a matrix to its Clifford algebra image");
  add_sig_option(phi);
  add_matrix_option(phi, true);
  phi->callback([&] {
    MatrixDocument doc = load_matrix_document(opt_matrix);
    KMatrix<Rational> a = parse_matrix(doc);
    const ReprTable& table = detail::table_for(doc, a, explicit_sig());
    out << format_multivector(matrix_to_clifford(a, table)) << "\n";
  });

  CLI::App* minpoly = app.add_subcommand(
      "minpoly", "Print the real minimal polynomial of a matrix image or a multivector");
  CLI::Option* minpoly_sig = add_sig_option(minpoly);
  CLI::Option* minpoly_matrix = add_matrix_option(minpoly, false);
  CLI::Option* minpoly_expr =
      minpoly->add_option("--expr", opt_expr, "multivector expression, e.g. \"1/2 Id + e12\"");
  minpoly_expr->excludes(minpoly_matrix);
  minpoly_expr->needs(minpoly_sig);
  minpoly->callback([&] {
    Multivector<Rational> p = Multivector<Rational>::zero(Signature(1, 0));
    if (!opt_expr.empty()) {
      p = parse_multivector(opt_expr, AlgebraContext::get(*explicit_sig()));
    } else if (!opt_matrix.empty()) {
      MatrixDocument doc = load_matrix_document(opt_matrix);
      KMatrix<Rational> a = parse_matrix(doc);
      p = matrix_to_clifford(a, detail::table_for(doc, a, explicit_sig()));
    } else {
      throw DomainError("minpoly needs either --matrix or --expr");
    }
    out << format_polynomial(minimal_polynomial(p).polynomial) << "\n";
  });

  CLI::App* exp = app.add_subcommand("exp", "Exponentiate a matrix through its Clifford image");
  add_sig_option(exp);
  add_matrix_option(exp, true);
  add_series_options(exp);
  exp->add_option("--format", opt_format, "exact (rational entries) or float (default)")
      ->check(CLI::IsMember({"exact", "float"}));
  CLI::Option* exp_digits =
      exp->add_option("--digits", opt_digits, "significant digits for float output "
                                              "(default: CLIFEX_DIGITS or 20)");
  exp->callback([&] {
    MatrixDocument doc = load_matrix_document(opt_matrix);
    KMatrix<Rational> a = parse_matrix(doc);
    const ReprTable& table = detail::table_for(doc, a, explicit_sig());
    series.order_set = exp->count("--order") > 0;
    Multivector<Rational> value = detail::run_series(matrix_to_clifford(a, table), series);
    KMatrix<Rational> e = clifford_to_matrix(value, table);
    if (opt_format == "exact") {
      out << format_k_matrix(e) << "\n";
    } else {
      int digits = exp_digits->count() ? opt_digits : detail::env_default_digits();
      detail::require_digits_in_range(digits);
      out << format_k_matrix(e, digits) << "\n";
    }
  });

  CLI::App* verify = app.add_subcommand(
      "verify", "Exponentiate through the Clifford route and report the 1-norm discrepancy "
                "against a direct high-precision exponential");
  add_sig_option(verify);
  add_matrix_option(verify, true);
  add_series_options(verify);
  CLI::Option* verify_digits =
      verify->add_option("--digits", opt_digits, "significant digits for the comparison "
                                                 "(default: CLIFEX_DIGITS or 20)");
  verify->callback([&] {
    MatrixDocument doc = load_matrix_document(opt_matrix);
    KMatrix<Rational> a = parse_matrix(doc);
    const ReprTable& table = detail::table_for(doc, a, explicit_sig());
    series.order_set = verify->count("--order") > 0;
    Multivector<Rational> value = detail::run_series(matrix_to_clifford(a, table), series);
    KMatrix<Rational> e = clifford_to_matrix(value, table);
    int digits = verify_digits->count() ? opt_digits : detail::env_default_digits();
    detail::require_digits_in_range(digits);
    KMatrix<Rational> rounded = round_k_matrix(e, digits);
    KMatrix<Rational> reference = round_k_matrix(reference_expm(a, digits), digits);
    out << format_k_matrix(e, digits) << "\n";
    out << "1-norm discrepancy: " << matrix_1norm(rounded - reference).str(10, std::ios_base::scientific)
        << "\n";
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("clifex");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace clifex
