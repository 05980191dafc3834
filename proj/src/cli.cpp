#include "asymprod/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "asymprod/asymptotics.hpp"
#include "asymprod/exact.hpp"
#include "asymprod/fk.hpp"
#include "asymprod/numerics.hpp"
#include "asymprod/verify.hpp"

namespace asymprod {

namespace {

using nlohmann::json;

struct CliConfig {
  long digits = 25;
  long prec_bits = 0;  // 0 = derive from digits
  std::string format = "plain";

  mpfr_prec_t precision() const {
    if (prec_bits > 0) return static_cast<mpfr_prec_t>(prec_bits);
    return static_cast<mpfr_prec_t>((digits * 333 + 99) / 100 + 64);
  }

  void validate() const {
    if (digits < 1) throw CLI::ValidationError("--digits must be >= 1");
    if (prec_bits > 0 && prec_bits * 100 < digits * 333) {
      throw CLI::ValidationError("--prec-bits must be at least 3.33 bits per requested digit");
    }
    if (format != "plain" && format != "json" && format != "csv") {
      throw CLI::ValidationError("--format must be plain, json or csv");
    }
  }
};

void emit_fields(const CliConfig& config, std::ostream& out,
                 const std::vector<std::pair<std::string, std::string>>& fields) {
  if (config.format == "json") {
    json j;
    for (const auto& [key, value] : fields) j[key] = value;
    out << j.dump() << '\n';
  } else if (config.format == "csv") {
    for (const auto& [key, value] : fields) out << key << ',' << value << '\n';
  } else {
    // plain: a lone value prints bare, multiple fields print key = value
    if (fields.size() == 1) {
      out << fields.front().second << '\n';
    } else {
      for (const auto& [key, value] : fields) out << key << " = " << value << '\n';
    }
  }
}

BigReal constant_by_name(const std::string& name, mpfr_prec_t prec) {
  if (name == "glaisher") return fundamental(Constant::glaisher, prec);
  if (name == "euler_gamma" || name == "gamma") return fundamental(Constant::euler_gamma, prec);
  if (name == "log_two_pi") return fundamental(Constant::log_two_pi, prec);
  if (name == "golden_ratio" || name == "phi") return fundamental(Constant::golden_ratio, prec);
  if (name == "zeta_prime_2") return fundamental(Constant::zeta_prime_2, prec);
  if (name == "zeta_prime_neg1") return fundamental(Constant::zeta_prime_neg1, prec);
  if (name.rfind("zeta", 0) == 0) {
    long s = 0;
    try {
      s = std::stol(name.substr(4));
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown constant name: " + name);
    }
    return zeta_int(s, prec);
  }
  throw std::invalid_argument("unknown constant name: " + name);
}

ProductKind product_kind_by_name(const std::string& kind) {
  if (kind == "hyperfactorial") return ProductKind::hyperfactorial;
  if (kind == "superfactorial") return ProductKind::superfactorial_k;
  if (kind == "multinomial") return ProductKind::multinomial_product;
  if (kind == "binomial") return ProductKind::binomial_product;
  if (kind == "central-binomial") return ProductKind::central_binomial_product;
  if (kind == "catalan") return ProductKind::catalan_product;
  if (kind == "row") return ProductKind::pascal_row_product;
  if (kind == "scaled-row") return ProductKind::scaled_row_product;
  throw std::invalid_argument("unknown product kind: " + kind);
}

struct ProductArgs {
  std::string kind;
  long m = 0;
  long n = 0;
  long a = 0;
  long b = 0;
  long k = 1;
  std::vector<long> parts;

  long limit() const { return m > 0 ? m : n; }

  ProductSpec spec() const {
    ProductSpec s;
    s.kind = product_kind_by_name(kind);
    s.k = k;
    s.a = a;
    s.b = b;
    s.parts = parts;
    return s;
  }
};

int run_product(const ProductArgs& args, const CliConfig& config, std::ostream& out) {
  ProductSpec spec = args.spec();
  if (spec.kind == ProductKind::scaled_row_product) {
    mpq_class value = scaled_row_product(args.a, args.n > 0 ? args.n : args.m);
    emit_fields(config, out, {{"value", rational_to_string(value)}});
    return 0;
  }
  long limit = args.limit();
  ExactValue value = eval_exact(spec, limit, config.precision());
  if (config.format == "json") {
    json j{{"kind", spec.name()},
           {"limit", limit},
           {"value", value.integer_value.get_str()},
           {"log_value", value.log_value.to_decimal(static_cast<std::size_t>(config.digits))}};
    out << j.dump() << '\n';
    return 0;
  }
  emit_fields(config, out, {{"value", value.integer_value.get_str()}});
  return 0;
}

json asym_to_json(const Asym& asym, long digits) {
  return json{{"constant", asym.constant.name},
              {"constant_value", asym.constant.value.to_decimal(static_cast<std::size_t>(digits))},
              {"constant_log", asym.constant.log_value.to_decimal(static_cast<std::size_t>(digits))},
              {"formula", asym.formula.to_json(static_cast<std::size_t>(digits))}};
}

int run_asympt(const ProductArgs& args, long terms, const CliConfig& config, std::ostream& out) {
  const auto digits = config.digits;
  if (args.kind == "pk") {
    LogAsymptotic form = p_k(args.k, config.precision());
    out << form.to_json(static_cast<std::size_t>(digits)).dump() << '\n';
    return 0;
  }
  if (args.kind == "hirschhorn") {
    long n = args.n > 0 ? args.n : args.m;
    HirschhornCorrection correction = hirschhorn_correction(n, terms, config.precision());
    json coeffs = json::array();
    for (const auto& c : correction.coefficients) coeffs.push_back(rational_to_string(c));
    json j{{"main", asym_to_json(hirschhorn_main_term(config.precision()), digits)},
           {"n", n},
           {"num_terms", correction.num_terms},
           {"coefficients", coeffs},
           {"correction_log",
            correction.correction_log.to_decimal(static_cast<std::size_t>(digits))},
           {"log_value",
            hirschhorn(n, terms, config.precision()).to_decimal(static_cast<std::size_t>(digits))}};
    out << j.dump() << '\n';
    return 0;
  }
  Asym asym = asym_for(args.spec(), config.precision());
  out << asym_to_json(asym, digits).dump() << '\n';
  return 0;
}

int run_verify_grid(const ProductArgs& args, std::vector<long> grid, const CliConfig& config,
                    std::ostream& out) {
  if (grid.empty()) grid = {10, 20, 40, 80, 160, 320};
  ComparisonReport report = compare_grid(args.spec(), grid, config.precision());
  if (config.format == "csv") {
    out << report.to_csv(static_cast<std::size_t>(config.digits));
  } else if (config.format == "json") {
    out << report.to_json(static_cast<std::size_t>(config.digits)).dump() << '\n';
  } else {
    out << "spec: " << report.spec.name() << '\n';
    for (const auto& row : report.rows) {
      out << "m=" << row.m << " delta=" << row.delta.to_decimal(20) << '\n';
    }
    out << "verdict: " << (report.pass ? "pass" : "fail") << " (" << report.reason << ")\n";
  }
  return report.pass ? 0 : 1;
}

int emit_verdicts(std::span<const Verdict> verdicts, const CliConfig& config, std::ostream& out) {
  bool all_pass = std::all_of(verdicts.begin(), verdicts.end(),
                              [](const Verdict& v) { return v.pass; });
  if (config.format == "json") {
    out << verdicts_to_json(verdicts).dump() << '\n';
  } else if (config.format == "csv") {
    out << "name,verdict,detail\n";
    for (const auto& v : verdicts) {
      out << v.name << ',' << (v.pass ? "pass" : "fail") << ",\"" << v.detail << "\"\n";
    }
  } else {
    for (const auto& v : verdicts) {
      out << (v.pass ? "pass" : "FAIL") << "  " << v.name << ": " << v.detail << '\n';
    }
  }
  return all_pass ? 0 : 1;
}

int run_table1(const CliConfig& config, std::ostream& out) {
  const auto digits = static_cast<std::size_t>(config.digits);
  const mpfr_prec_t prec = config.precision();
  bool all_match = true;
  BigReal max_diff(0L, prec);
  std::vector<std::pair<std::string, std::string>> fields;
  for (int k = 1; k <= 6; ++k) {
    BigReal closed = fk_closed(k, prec).value;
    BigReal table = fk_table_closed_form(k, prec);
    std::string closed_digits = closed.to_decimal(digits);
    if (closed_digits != table.to_decimal(digits)) all_match = false;
    BigReal diff = abs(closed - table);
    if (diff > max_diff) max_diff = diff;
    fields.emplace_back("F_" + std::to_string(k), closed_digits);
  }
  long diff_exp = max_diff.is_zero() ? -static_cast<long>(prec)
                                     : static_cast<long>(mpfr_get_exp(max_diff.raw()));
  fields.emplace_back("max_route_discrepancy_log2", std::to_string(diff_exp));
  fields.emplace_back("digit_match", all_match ? "true" : "false");
  emit_fields(config, out, fields);
  return all_match ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"asymptotic constants and exact products of factorial-like families"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  app.add_option("--digits", config.digits, "fractional decimal digits to print")
      ->capture_default_str();
  app.add_option("--prec-bits", config.prec_bits,
                 "working precision in bits (default: 3.33 per digit + 64)");
  app.add_option("--format", config.format, "plain, json or csv")->capture_default_str();

  std::function<int()> action;

  // constant <name>
  auto* constant_cmd = app.add_subcommand("constant", "print a fundamental constant");
  auto constant_name = std::make_shared<std::string>();
  constant_cmd->add_option("name", *constant_name, "glaisher, euler_gamma, log_two_pi, "
                                                   "golden_ratio, zeta_prime_2, zeta_prime_neg1, "
                                                   "zeta<s>")
      ->required();
  constant_cmd->callback([&, constant_name] {
    action = [&, constant_name] {
      BigReal value = constant_by_name(*constant_name, config.precision());
      emit_fields(config, out,
                  {{"value", value.to_decimal(static_cast<std::size_t>(config.digits))}});
      return 0;
    };
  });

  // fk <k> [--series]
  auto* fk_cmd = app.add_subcommand("fk", "superfactorial constant F_k");
  auto fk_k = std::make_shared<long>(1);
  auto fk_series_flag = std::make_shared<bool>(false);
  fk_cmd->add_option("k", *fk_k, "index k >= 1")->required();
  fk_cmd->add_flag("--series", *fk_series_flag, "include the divergent-series bracket");
  fk_cmd->callback([&, fk_k, fk_series_flag] {
    action = [&, fk_k, fk_series_flag] {
      const auto digits = static_cast<std::size_t>(config.digits);
      FkValue value = fk_closed(*fk_k, config.precision());
      if (!*fk_series_flag) {
        emit_fields(config, out, {{"value", value.value.to_decimal(digits)}});
        return 0;
      }
      SeriesBracket bracket = fk_series(*fk_k, config.precision());
      BigReal theta = bracket.compute_theta(value.log_value);
      emit_fields(config, out,
                  {{"value", value.value.to_decimal(digits)},
                   {"log_value", value.log_value.to_decimal(digits)},
                   {"bracket_low", bracket.low.to_decimal(digits)},
                   {"bracket_high", bracket.high.to_decimal(digits)},
                   {"truncation_index", std::to_string(bracket.truncation_index)},
                   {"theta", theta.to_decimal(digits)},
                   {"reliable", bracket.reliable ? "true" : "false"}});
      return 0;
    };
  });

  // product <kind> --m M [--a --b --k --parts --n]
  auto product_args = std::make_shared<ProductArgs>();
  auto* product_cmd = app.add_subcommand("product", "exact big-integer product");
  product_cmd->add_option("kind", product_args->kind,
                          "hyperfactorial|superfactorial|multinomial|binomial|"
                          "central-binomial|catalan|row|scaled-row")
      ->required();
  product_cmd->add_option("--m", product_args->m, "product limit m");
  product_cmd->add_option("--n", product_args->n, "limit n (row-indexed kinds)");
  product_cmd->add_option("--a", product_args->a, "parameter a");
  product_cmd->add_option("--b", product_args->b, "parameter b");
  product_cmd->add_option("--k", product_args->k, "superfactorial parameter k");
  product_cmd->add_option("--parts", product_args->parts, "multinomial parts b1,b2,...")
      ->delimiter(',');
  product_cmd->callback([&, product_args] {
    action = [&, product_args] { return run_product(*product_args, config, out); };
  });

  // asympt <kind> [params]
  auto asympt_args = std::make_shared<ProductArgs>();
  auto asympt_terms = std::make_shared<long>(8);
  auto* asympt_cmd = app.add_subcommand("asympt", "asymptotic constant and formula (JSON)");
  asympt_cmd->add_option("kind", asympt_args->kind,
                         "pk|hyperfactorial|superfactorial|multinomial|binomial|"
                         "central-binomial|catalan|row|hirschhorn")
      ->required();
  asympt_cmd->add_option("--k", asympt_args->k, "index k");
  asympt_cmd->add_option("--a", asympt_args->a, "parameter a");
  asympt_cmd->add_option("--b", asympt_args->b, "parameter b");
  asympt_cmd->add_option("--n", asympt_args->n, "Hirschhorn evaluation point");
  asympt_cmd->add_option("--parts", asympt_args->parts, "multinomial parts")->delimiter(',');
  asympt_cmd->add_option("--terms", *asympt_terms, "Hirschhorn correction terms")
      ->capture_default_str();
  asympt_cmd->callback([&, asympt_args, asympt_terms] {
    action = [&, asympt_args, asympt_terms] {
      return run_asympt(*asympt_args, *asympt_terms, config, out);
    };
  });

  // verify <check> [params]
  auto verify_args = std::make_shared<ProductArgs>();
  auto verify_check = std::make_shared<std::string>();
  auto verify_grid = std::make_shared<std::vector<long>>();
  auto verify_kmax = std::make_shared<long>(10);
  auto verify_amax = std::make_shared<long>(20);
  auto verify_agrid = std::make_shared<std::vector<long>>(std::vector<long>{10, 100, 1000});
  auto verify_ngrid = std::make_shared<std::vector<long>>(std::vector<long>{10, 20, 30, 40, 50});
  auto verify_terms = std::make_shared<long>(6);
  auto* verify_cmd = app.add_subcommand("verify", "run a verification check");
  verify_cmd->add_option("check", *verify_check, "grid|brackets|intervals|bin2|hirschhorn")
      ->required();
  verify_cmd->add_option("--kind", verify_args->kind, "product kind for grid checks");
  verify_cmd->add_option("--a", verify_args->a, "parameter a");
  verify_cmd->add_option("--b", verify_args->b, "parameter b");
  verify_cmd->add_option("--k", verify_args->k, "superfactorial parameter");
  verify_cmd->add_option("--n", verify_args->n, "row size for bin2");
  verify_cmd->add_option("--parts", verify_args->parts, "multinomial parts")->delimiter(',');
  verify_cmd->add_option("--grid", *verify_grid, "grid of limits")->delimiter(',');
  verify_cmd->add_option("--kmax", *verify_kmax, "largest k for brackets")->capture_default_str();
  verify_cmd->add_option("--amax", *verify_amax, "largest a for intervals")->capture_default_str();
  verify_cmd->add_option("--agrid", *verify_agrid, "grid of a values for bin2")->delimiter(',');
  verify_cmd->add_option("--ngrid", *verify_ngrid, "grid of n values for hirschhorn")
      ->delimiter(',');
  verify_cmd->add_option("--terms", *verify_terms, "Hirschhorn correction terms")
      ->capture_default_str();
  verify_cmd->callback([&, verify_args, verify_check, verify_grid, verify_kmax, verify_amax,
                        verify_agrid, verify_ngrid, verify_terms] {
    action = [&, verify_args, verify_check, verify_grid, verify_kmax, verify_amax, verify_agrid,
              verify_ngrid, verify_terms] {
      if (*verify_check == "grid") {
        if (verify_args->kind.empty()) {
          throw std::invalid_argument("verify grid requires --kind");
        }
        return run_verify_grid(*verify_args, *verify_grid, config, out);
      }
      if (*verify_check == "brackets") {
        auto verdicts = check_series_brackets(*verify_kmax, config.precision());
        return emit_verdicts(verdicts, config, out);
      }
      if (*verify_check == "intervals") {
        Verdict verdict = check_monotonic_and_intervals(*verify_amax, config.precision());
        return emit_verdicts(std::span<const Verdict>(&verdict, 1), config, out);
      }
      if (*verify_check == "bin2") {
        long n = verify_args->n > 0 ? verify_args->n : 2;
        Verdict verdict = check_bin2_limit(n, *verify_agrid);
        return emit_verdicts(std::span<const Verdict>(&verdict, 1), config, out);
      }
      if (*verify_check == "hirschhorn") {
        Verdict verdict = check_hirschhorn(*verify_ngrid, *verify_terms, config.precision());
        return emit_verdicts(std::span<const Verdict>(&verdict, 1), config, out);
      }
      throw std::invalid_argument("unknown verify check: " + *verify_check);
    };
  });

  // table1
  auto* table_cmd = app.add_subcommand("table1", "all six F_k values with cross-route check");
  table_cmd->callback([&] {
    action = [&] { return run_table1(config, out); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    config.validate();
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const precision_error& e) {
    err << "precision error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace asymprod
