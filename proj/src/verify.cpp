#include "asymprod/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "asymprod/fk.hpp"
#include "asymprod/numerics.hpp"

namespace asymprod {

namespace {

nlohmann::json spec_to_json(const ProductSpec& spec) {
  nlohmann::json j{{"kind", spec.name()}};
  switch (spec.kind) {
    case ProductKind::superfactorial_k:
      j["k"] = spec.k;
      break;
    case ProductKind::multinomial_product:
      j["a"] = spec.a;
      j["parts"] = spec.parts;
      break;
    case ProductKind::binomial_product:
      j["a"] = spec.a;
      j["b"] = spec.b;
      break;
    case ProductKind::scaled_row_product:
      j["a"] = spec.a;
      break;
    default:
      break;
  }
  return j;
}

// Non-increasing partitions of a into at least two parts.
void enumerate_partitions(long a, long max_part, std::vector<long>& current,
                          std::vector<std::vector<long>>& out) {
  if (a == 0) {
    if (current.size() >= 2) out.push_back(current);
    return;
  }
  for (long p = std::min(a, max_part); p >= 1; --p) {
    current.push_back(p);
    enumerate_partitions(a - p, p, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<long>> partitions_with_two_parts(long a) {
  std::vector<std::vector<long>> out;
  std::vector<long> current;
  enumerate_partitions(a, a, current, out);
  return out;
}

std::string digits_of(const BigReal& value, std::size_t digits) { return value.to_decimal(digits); }

}  // namespace

nlohmann::json ComparisonReport::to_json(std::size_t digits) const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& row : rows) {
    rows_json.push_back({{"m", row.m},
                         {"log_exact", digits_of(row.log_exact, digits)},
                         {"log_asym", digits_of(row.log_asym, digits)},
                         {"delta", digits_of(row.delta, digits)}});
  }
  nlohmann::json decay_json = nlohmann::json::array();
  for (const auto& ratio : decay) decay_json.push_back(digits_of(ratio, digits));
  return nlohmann::json{{"spec", spec_to_json(spec)},
                        {"precision_bits", static_cast<long>(precision_bits)},
                        {"rows", rows_json},
                        {"decay", decay_json},
                        {"verdict", pass ? "pass" : "fail"},
                        {"reason", reason}};
}

std::string ComparisonReport::to_csv(std::size_t digits) const {
  std::ostringstream out;
  out << "m,log_exact,log_asym,delta\n";
  for (const auto& row : rows) {
    out << row.m << ',' << digits_of(row.log_exact, digits) << ','
        << digits_of(row.log_asym, digits) << ',' << digits_of(row.delta, digits) << '\n';
  }
  return out.str();
}

ComparisonReport compare_grid(const ProductSpec& spec, std::span<const long> grid,
                              mpfr_prec_t precision_bits) {
  if (grid.empty()) throw std::invalid_argument("compare_grid requires a non-empty grid");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (grid[i] >= grid[i + 1]) {
      throw std::invalid_argument("compare_grid requires a strictly ascending grid");
    }
  }

  ComparisonReport report;
  report.spec = spec;
  report.precision_bits = precision_bits;

  Asym asym = asym_for(spec, precision_bits);
  std::vector<ExactValue> exacts = eval_exact_grid(spec, grid, precision_bits);

  for (std::size_t i = 0; i < grid.size(); ++i) {
    BigReal log_asym = eval_log(asym.formula, &asym.constant, grid[i]);
    BigReal delta = exacts[i].log_value - log_asym;
    report.rows.push_back({grid[i], exacts[i].log_value, log_asym, delta});
  }
  for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
    report.decay.push_back(abs(report.rows[i + 1].delta) / abs(report.rows[i].delta));
  }

  report.pass = true;
  for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
    if (!(abs(report.rows[i + 1].delta) < abs(report.rows[i].delta))) {
      report.pass = false;
      std::ostringstream reason;
      reason << "|delta| not strictly decreasing between m=" << report.rows[i].m
             << " and m=" << report.rows[i + 1].m;
      report.reason = reason.str();
      break;
    }
  }
  if (report.pass && report.rows.size() >= 2) {
    BigReal span(grid.back(), precision_bits);
    span = span / BigReal(grid.front(), precision_bits);
    BigReal required = abs(report.rows.front().delta) / (span / 4L);
    if (!(abs(report.rows.back().delta) < required)) {
      report.pass = false;
      report.reason = "final |delta| did not shrink by span/4 over the grid";
    }
  }
  if (report.pass) report.reason = "ok";
  return report;
}

nlohmann::json verdicts_to_json(std::span<const Verdict> verdicts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : verdicts) {
    out.push_back({{"name", v.name}, {"verdict", v.pass ? "pass" : "fail"}, {"detail", v.detail}});
  }
  return out;
}

std::vector<Verdict> check_series_brackets(long k_max, mpfr_prec_t precision_bits) {
  if (k_max < 2) throw std::invalid_argument("check_series_brackets requires k_max >= 2");
  std::vector<Verdict> verdicts;
  for (long k = 2; k <= k_max; ++k) {
    SeriesBracket bracket = fk_series(k, precision_bits);
    // The bracket carries elevated precision, so the truth must match it.
    BigReal truth = fk_closed(k, bracket.low.precision()).log_value;
    BigReal theta = bracket.compute_theta(truth);
    bool contains = bracket.low < truth && truth < bracket.high;
    bool theta_ok = BigReal(0L, precision_bits) < theta && theta < BigReal(1L, precision_bits);
    std::ostringstream detail;
    detail << "k=" << k << " bracket=[" << bracket.low.to_decimal(20) << ","
           << bracket.high.to_decimal(20) << "] theta=" << theta.to_decimal(6)
           << " truncation_index=" << bracket.truncation_index;
    verdicts.push_back({"series_bracket(k=" + std::to_string(k) + ")", contains && theta_ok,
                        detail.str()});
  }
  return verdicts;
}

Verdict check_monotonic_and_intervals(long a_max, mpfr_prec_t precision_bits) {
  if (a_max < 3) throw std::invalid_argument("check_monotonic_and_intervals requires a_max >= 3");
  const BigReal one(1L, precision_bits);
  std::ostringstream detail;
  bool pass = true;

  // F_k > 1 and strictly decreasing.
  BigReal previous = fk_closed(1, precision_bits).value;
  for (long k = 1; k <= a_max; ++k) {
    BigReal current = fk_closed(k, precision_bits).value;
    if (!(current > one) || (k > 1 && !(current < previous))) {
      pass = false;
      detail << "F_k monotonicity failed at k=" << k << "; ";
      break;
    }
    previous = current;
  }

  // Two-part ratios in [FC_{2,1}, 1), with the minimum attained at (2,1).
  BigReal fc21 = fc(2, {1, 1}, precision_bits).value;
  for (long a = 2; pass && a <= a_max; ++a) {
    for (long b = 1; b < a; ++b) {
      BigReal value = fc(a, {b, a - b}, precision_bits).value;
      bool at_min = (a == 2 && b == 1);
      if (!(value < one) || (!at_min && !(value > fc21)) || (at_min && value != fc21)) {
        pass = false;
        detail << "two-part interval failed at (" << a << "," << b << "); ";
        break;
      }
    }
  }

  // Multi-part ratios strictly inside (0,1).
  for (long a = 3; pass && a <= std::min<long>(a_max, 8); ++a) {
    for (const auto& parts : partitions_with_two_parts(a)) {
      BigReal value = fc(a, parts, precision_bits).value;
      if (!(BigReal(0L, precision_bits) < value && value < one)) {
        pass = false;
        detail << "multi-part interval failed for a=" << a << "; ";
        break;
      }
    }
  }

  // Supremum direction: FC_{2b,b} increases toward 1 along b = 1,2,4,8,16.
  if (pass) {
    BigReal prev_sup = fc(2, {1, 1}, precision_bits).value;
    for (long b : {2L, 4L, 8L, 16L}) {
      BigReal current = fc(2 * b, {b, b}, precision_bits).value;
      if (!(current > prev_sup) || !(current < one)) {
        pass = false;
        detail << "FC(2b,[b,b]) supremum direction failed at b=" << b << "; ";
        break;
      }
      prev_sup = current;
    }
  }

  // Infimum direction: FC over unit parts decreases in r.
  if (pass) {
    BigReal prev_inf = fc(2, {1, 1}, precision_bits).value;
    for (long r = 3; r <= 8; ++r) {
      BigReal current = fc(r, std::vector<long>(r, 1), precision_bits).value;
      if (!(current < prev_inf)) {
        pass = false;
        detail << "FC(r,[1..1]) infimum direction failed at r=" << r << "; ";
        break;
      }
      prev_inf = current;
    }
  }

  if (pass) detail << "scanned a <= " << a_max;
  return {"monotonic_and_intervals", pass, detail.str()};
}

Verdict check_bin2_limit(long n, std::span<const long> a_grid) {
  if (n < 1) throw std::invalid_argument("check_bin2_limit requires n >= 1");
  if (a_grid.empty()) throw std::invalid_argument("check_bin2_limit requires a grid");
  for (std::size_t i = 0; i + 1 < a_grid.size(); ++i) {
    if (a_grid[i] >= a_grid[i + 1]) {
      throw std::invalid_argument("check_bin2_limit requires an ascending grid");
    }
  }

  mpz_class target = 1;
  mpz_class binom;
  for (long v = 1; v <= n; ++v) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(v));
    target *= binom;
  }

  std::vector<mpq_class> errors;
  for (long a : a_grid) {
    mpq_class err = mpq_class(target) - scaled_row_product(a, n);
    errors.push_back(abs(err));
  }

  std::ostringstream detail;
  bool pass = true;
  if (n == 1) {
    for (const auto& err : errors) {
      if (err != 0) {
        pass = false;
        detail << "n=1 should be exact; ";
        break;
      }
    }
    if (pass) detail << "n=1 exact for all a";
    return {"bin2_limit(n=1)", pass, detail.str()};
  }

  for (std::size_t i = 0; pass && i + 1 < errors.size(); ++i) {
    if (!(errors[i + 1] < errors[i])) {
      pass = false;
      detail << "error not strictly decreasing at a=" << a_grid[i + 1] << "; ";
    }
  }
  // O(1/a): consecutive error ratios must track the grid ratio within 2x.
  for (std::size_t i = 0; pass && i + 1 < errors.size(); ++i) {
    if (errors[i + 1] == 0) break;  // converged exactly; nothing left to rate
    mpq_class ratio = errors[i] / errors[i + 1];
    mpq_class factor(a_grid[i + 1], a_grid[i]);
    factor.canonicalize();
    mpq_class low_bound = factor / 2;
    mpq_class high_bound = factor * 2;
    if (ratio < low_bound || ratio > high_bound) {
      pass = false;
      detail << "error ratio " << ratio.get_d() << " outside [" << low_bound.get_d() << ","
             << high_bound.get_d() << "] between a=" << a_grid[i] << " and " << a_grid[i + 1]
             << "; ";
    }
  }
  if (pass) {
    detail << "errors";
    for (const auto& err : errors) detail << ' ' << rational_to_string(err);
  }
  return {"bin2_limit(n=" + std::to_string(n) + ")", pass, detail.str()};
}

Verdict check_hirschhorn(std::span<const long> n_grid, long num_terms,
                         mpfr_prec_t precision_bits) {
  if (n_grid.empty()) throw std::invalid_argument("check_hirschhorn requires a grid");
  std::ostringstream detail;
  bool pass = true;

  // (i) F_1 = (2 pi)^{1/4} e^{1/12} / A^2 as two evaluation routes.
  BigReal route_closed = fk_closed(1, precision_bits).log_value;
  const mpfr_prec_t w = precision_bits + kGuardBits;
  BigReal route_table =
      log_two_pi(w) / 4L + BigReal(mpq_class(1, 12), w) - 2L * log_glaisher(w);
  BigReal tolerance = BigReal::two_pow(
      -(static_cast<long>(precision_bits) - static_cast<long>(kGuardBits)), w);
  if (!(abs(route_closed - route_table.round_to(precision_bits)) < tolerance)) {
    pass = false;
    detail << "H = F_1 identity routes disagree; ";
  }

  // (ii) published digits of H.
  const std::string published = "1.046335066770503180980950656977760";
  mpfr_prec_t digit_prec = std::max<mpfr_prec_t>(precision_bits, 192);
  std::string computed = fk_closed(1, digit_prec).value.to_decimal(33);
  if (computed != published) {
    pass = false;
    detail << "H digits mismatch: " << computed << "; ";
  }

  // (iii) corrected expansion beats the uncorrected one against exact rows.
  for (long n : n_grid) {
    BigReal exact_log = pascal_row_product(n, precision_bits).log_value;
    BigReal err_uncorrected = abs(hirschhorn(n, 0, precision_bits) - exact_log);
    BigReal err_corrected = abs(hirschhorn(n, num_terms, precision_bits) - exact_log);
    if (!(err_corrected < err_uncorrected)) {
      pass = false;
      detail << "correction did not improve at n=" << n << "; ";
    }
  }

  if (pass) {
    detail << "H digits match, identity holds, corrections improve on "
           << n_grid.size() << " grid points";
  }
  return {"hirschhorn", pass, detail.str()};
}

}  // namespace asymprod
