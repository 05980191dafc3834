#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <vector>

#include "asymprod/asymptotics.hpp"
#include "asymprod/exact.hpp"
#include "asymprod/fk.hpp"
#include "asymprod/numerics.hpp"

using namespace asymprod;

namespace {

BigReal tol(long bits_below, mpfr_prec_t prec) { return BigReal::two_pow(-bits_below, prec); }

void check_close(const BigReal& a, const BigReal& b, long bits, mpfr_prec_t prec) {
  CHECK(abs(a - b) < tol(bits, prec));
}

void check_formulas_match(const LogAsymptotic& a, const LogAsymptotic& b, long bits,
                          mpfr_prec_t prec) {
  check_close(a.r, b.r, bits, prec);
  check_close(a.q, b.q, bits, prec);
  check_close(a.s, b.s, bits, prec);
  check_close(a.l, b.l, bits, prec);
  check_close(a.t, b.t, bits, prec);
  check_close(a.u, b.u, bits, prec);
}

}  // namespace

TEST_CASE("p_k coefficients at k = 1 and k = 2") {
  const mpfr_prec_t prec = 192;
  LogAsymptotic p1 = p_k(1, prec);
  CHECK(p1.q == BigReal(0L, prec));
  CHECK(p1.r == BigReal(0L, prec));
  CHECK(p1.u == BigReal(0L, prec));
  check_close(p1.t, BigReal(mpq_class(1, 3), prec), prec - 8, prec);
  check_close(p1.s, BigReal(mpq_class(1, 2), prec), prec - 8, prec);
  check_close(p1.l, (log_two_pi(prec) - 1L) / 2L, prec - 8, prec);

  LogAsymptotic p2 = p_k(2, prec);
  check_close(p2.q, log(BigReal(2L, prec)), prec - 8, prec);
  check_close(p2.t, BigReal(mpq_class(7, 24), prec), prec - 8, prec);
  CHECK(p2.u == BigReal(0L, prec));

  for (long k : {3L, 5L, 11L}) {
    CHECK(p_k(k, prec).u == BigReal(0L, prec));
    CHECK(p_k(k, prec).r == BigReal(0L, prec));
  }
  CHECK_THROWS_AS(p_k(0, prec), std::domain_error);
}

TEST_CASE("asym_binomial(2,1): published constant and closed formula") {
  const mpfr_prec_t prec = 160;
  Asym asym = asym_binomial(2, 1, prec);
  CHECK(asym.constant.value.to_decimal(25) == "0.5907270839982808449347463");
  check_close(asym.formula.q, log(BigReal(2L, prec)), prec - 16, prec);
  check_close(asym.formula.s, BigReal(mpq_class(-1, 2), prec), prec - 16, prec);
  check_close(asym.formula.t, BigReal(mpq_class(-3, 8), prec), prec - 16, prec);
  // (4e/pi)^{m/2}: l = (2 log 2 + 1 - log pi)/2.
  BigReal expected_l = (2L * log(BigReal(2L, prec)) + 1L - log(pi(prec))) / 2L;
  check_close(asym.formula.l, expected_l, prec - 16, prec);
  CHECK(asym.formula.r == BigReal(0L, prec));
}

TEST_CASE("asym_binomial(5,2): published constant, t = -109/360") {
  const mpfr_prec_t prec = 160;
  Asym asym = asym_binomial(5, 2, prec);
  CHECK(asym.constant.value.to_decimal(25) == "0.6129670404054601065382712");
  check_close(asym.formula.t, BigReal(mpq_class(-109, 360), prec), prec - 16, prec);
}

TEST_CASE("binomial formula coefficients match the closed P_{a,b} form") {
  const mpfr_prec_t prec = 192;
  const std::vector<std::pair<long, long>> cases = {{2, 1}, {3, 1}, {5, 2}, {7, 3}, {12, 5}};
  for (auto [a, b] : cases) {
    CAPTURE(a);
    CAPTURE(b);
    long c = a - b;
    Asym asym = asym_binomial(a, b, prec);
    // q = log(a^a / (b^b c^c)) / 2.
    BigReal expected_q = (a * log(BigReal(a, prec)) - b * log(BigReal(b, prec)) -
                          c * log(BigReal(c, prec))) /
                         2L;
    check_close(asym.formula.q, expected_q, prec - 16, prec);
    check_close(asym.formula.s, BigReal(mpq_class(-1, 2), prec), prec - 16, prec);
    // t = (1/12)(1/a - a/(bc)) - 1/4, exact rational arithmetic as oracle.
    mpq_class expected_t =
        mpq_class(1, 12) * (mpq_class(1, a) - mpq_class(a, b * c)) - mpq_class(1, 4);
    expected_t.canonicalize();
    check_close(asym.formula.t, BigReal(expected_t, prec), prec - 16, prec);
    // l = q + (log(a/(2 pi b c)) + 1)/2.
    BigReal expected_l = expected_q + (log(BigReal(a, prec)) - log_two_pi(prec) -
                                       log(BigReal(b * c, prec)) + 1L) /
                                          2L;
    check_close(asym.formula.l, expected_l, prec - 16, prec);
  }
  // The (3,1) exponent comes out to -25/72 by both routes.
  Asym a31 = asym_binomial(3, 1, prec);
  check_close(a31.formula.t, BigReal(mpq_class(-25, 72), prec), prec - 16, prec);
  CHECK_THROWS_AS(asym_binomial(2, 2, prec), std::domain_error);
  CHECK_THROWS_AS(asym_binomial(1, 2, prec), std::domain_error);
}

TEST_CASE("asym_multinomial reduces to asym_binomial for two parts") {
  const mpfr_prec_t prec = 192;
  Asym binom = asym_binomial(2, 1, prec);
  Asym multi = asym_multinomial(2, {1, 1}, prec);
  check_close(binom.constant.value, multi.constant.value, prec - 16, prec);
  check_formulas_match(binom.formula, multi.formula, prec - 16, prec);
}

TEST_CASE("asym_multinomial(3,[1,1,1]) constant and cancellation identity") {
  const mpfr_prec_t prec = 192;
  Asym asym = asym_multinomial(3, {1, 1, 1}, prec);
  BigReal f1 = fk_closed(1, prec).value;
  BigReal expected = fk_closed(3, prec).value / (f1 * f1 * f1) / sqrt(2L * pi(prec));
  check_close(asym.constant.value, expected, prec - 24, prec);
  CHECK(asym.formula.r == BigReal(0L, prec));

  // The formula is the coefficient-wise superfactorial difference.
  for (const auto& [a, parts] : std::vector<std::pair<long, std::vector<long>>>{
           {3, {1, 1, 1}}, {5, {2, 3}}, {6, {1, 2, 3}}}) {
    CAPTURE(a);
    Asym multi = asym_multinomial(a, parts, prec);
    LogAsymptotic difference = asym_superfactorial(a, prec).formula;
    for (long b : parts) difference = difference - asym_superfactorial(b, prec).formula;
    check_formulas_match(multi.formula, difference, prec - 16, prec);
    check_close(difference.r, BigReal(0L, prec), prec - 16, prec);
  }
}

TEST_CASE("asym_row: published constant, defining identity, division identity") {
  const mpfr_prec_t prec = 160;
  Asym row = asym_row(prec);
  CHECK(row.constant.value.to_decimal(25) == "0.6036486760360103196707021");
  // C_row * F_1 * (2 pi)^{1/4} = 1.
  BigReal product =
      row.constant.value * fk_closed(1, prec).value * exp(log_two_pi(prec) / 4L);
  check_close(product, BigReal(1L, prec), prec - 24, prec);

  check_close(row.formula.q, BigReal(mpq_class(1, 2), prec), prec - 16, prec);
  check_close(row.formula.s, BigReal(mpq_class(-1, 2), prec), prec - 16, prec);
  check_close(row.formula.t, BigReal(mpq_class(-1, 3), prec), prec - 16, prec);
  check_close(row.formula.l, 1L - log_two_pi(prec) / 2L, prec - 16, prec);

  // Row formula = hyperfactorial formula - superfactorial(1) formula.
  LogAsymptotic difference =
      asym_hyperfactorial(prec).formula - asym_superfactorial(1, prec).formula;
  check_formulas_match(row.formula, difference, prec - 16, prec);
  // Constants divide correspondingly: C_row * (F_1 A (2pi)^{1/4}) = A.
  BigReal lhs = row.constant.value * asym_superfactorial(1, prec).constant.value;
  check_close(lhs, asym_hyperfactorial(prec).constant.value, prec - 24, prec);
}

TEST_CASE("hyperfactorial and superfactorial coefficient sets") {
  const mpfr_prec_t prec = 160;
  Asym hyper = asym_hyperfactorial(prec);
  CHECK(hyper.constant.value.to_decimal(25) == "1.2824271291006226368753425");
  check_close(hyper.formula.r, BigReal(mpq_class(1, 2), prec), prec - 16, prec);
  check_close(hyper.formula.q, BigReal(mpq_class(-1, 4), prec), prec - 16, prec);
  check_close(hyper.formula.s, BigReal(mpq_class(1, 2), prec), prec - 16, prec);
  check_close(hyper.formula.t, BigReal(mpq_class(1, 12), prec), prec - 16, prec);
  CHECK(hyper.formula.l == BigReal(0L, prec));

  Asym super1 = asym_superfactorial(1, prec);
  check_close(super1.formula.t, BigReal(mpq_class(5, 12), prec), prec - 16, prec);
  BigReal expected_log =
      fk_closed(1, prec).log_value + log_glaisher(prec) + log_two_pi(prec) / 4L;
  check_close(super1.constant.log_value, expected_log, prec - 24, prec);

  Asym super2 = asym_superfactorial(2, prec);
  check_close(super2.formula.r, BigReal(1L, prec), prec - 16, prec);
  check_close(super2.formula.t, BigReal(mpq_class(11, 24), prec), prec - 16, prec);
  check_close(super2.formula.s, BigReal(mpq_class(3, 2), prec), prec - 16, prec);
}

TEST_CASE("asym_catalan: published constant and Stirling-correction shape") {
  const mpfr_prec_t prec = 160;
  Asym catalan = asym_catalan(prec);
  CHECK(catalan.constant.value.to_decimal(25) == "0.2356660099851628316196795");
  check_close(catalan.formula.t, BigReal(mpq_class(-15, 8), prec), prec - 16, prec);

  // Difference against the central-binomial form is the -log (m+1)! shape:
  // delta l = 1, delta s = -1, delta t = -3/2, q and r unchanged.
  Asym central = asym_binomial(2, 1, prec);
  LogAsymptotic diff = catalan.formula - central.formula;
  check_close(diff.l, BigReal(1L, prec), prec - 16, prec);
  check_close(diff.s, BigReal(-1L, prec), prec - 16, prec);
  check_close(diff.t, BigReal(mpq_class(-3, 2), prec), prec - 16, prec);
  CHECK(abs(diff.q) < tol(prec - 16, prec));
  CHECK(abs(diff.r) < tol(prec - 16, prec));
  // Constant ratio (2 pi)^{-1/2}.
  check_close(catalan.constant.value / central.constant.value, 1L / sqrt(2L * pi(prec)),
              prec - 24, prec);
}

TEST_CASE("binomial constants live in [C_{2,1}, (2pi)^{-1/4})") {
  const mpfr_prec_t prec = 160;
  BigReal lower = asym_binomial(2, 1, prec).constant.value;
  BigReal upper = exp(-log_two_pi(prec) / 4L);
  CHECK(upper.to_decimal(25) == "0.6316187777460647012900105");
  for (long a = 2; a <= 12; ++a) {
    for (long b = 1; b < a; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      BigReal value = asym_binomial(a, b, prec).constant.value;
      CHECK(value >= lower);
      CHECK(value < upper);
    }
  }
}

TEST_CASE("C_{a,1} approaches C_row from below as a grows") {
  const mpfr_prec_t prec = 128;
  BigReal target = asym_row(prec).constant.value;
  BigReal previous_gap(prec);
  BigReal previous_value(prec);
  bool first = true;
  for (long a : {3L, 10L, 100L, 1000L}) {
    CAPTURE(a);
    BigReal value = asym_binomial(a, 1, prec).constant.value;
    BigReal gap = abs(value - target);
    if (!first) {
      CHECK(value > previous_value);  // increasing toward the limit
      CHECK(gap < previous_gap);
    }
    previous_value = value;
    previous_gap = gap;
    first = false;
  }
}

TEST_CASE("Hirschhorn correction coefficients") {
  const mpfr_prec_t prec = 160;
  HirschhornCorrection correction = hirschhorn_correction(20, 6, prec);
  REQUIRE(correction.coefficients.size() >= 3);
  CHECK(correction.coefficients[0] == mpq_class(1, 12));
  CHECK(correction.coefficients[1] == mpq_class(-1, 180));
  CHECK(correction.coefficients[2] == mpq_class(-1, 360));
  CHECK_THROWS_AS(hirschhorn_correction(0, 6, prec), std::domain_error);
  CHECK_THROWS_AS(hirschhorn_correction(10, 21, prec), std::domain_error);

  // n = 1 runs into the divergent regime and must stop at the smallest term.
  HirschhornCorrection capped = hirschhorn_correction(1, 20, prec);
  CHECK(capped.num_terms < 20);
}

TEST_CASE("Hirschhorn main term equals the row asymptotic coefficient-for-coefficient") {
  const mpfr_prec_t prec = 192;
  Asym main = hirschhorn_main_term(prec);
  Asym row = asym_row(prec);
  check_formulas_match(main.formula, row.formula, prec - 16, prec);
  check_close(main.constant.log_value, row.constant.log_value, prec - 24, prec);

  // Zero-correction evaluation equals eval_log of the row asymptotic.
  for (long n : {1L, 5L, 20L, 40L}) {
    CAPTURE(n);
    BigReal direct = hirschhorn(n, 0, prec);
    BigReal via_row = eval_log(row.formula, &row.constant, n);
    CHECK(abs(direct - via_row) < tol(prec - 32, prec));
  }
}

TEST_CASE("eval_log behavior") {
  const mpfr_prec_t prec = 160;
  LogAsymptotic zero_form(prec);
  AsymptoticConstant constant{"c", BigReal(2L, prec), log(BigReal(2L, prec))};
  for (long m : {1L, 7L, 100L}) {
    CHECK(eval_log(zero_form, &constant, m) == constant.log_value);
  }
  CHECK(eval_log(zero_form, nullptr, 3) == BigReal(0L, prec));

  // p_k(1) at m = 1 collapses to l = (log 2pi - 1)/2.
  BigReal at_one = eval_log(p_k(1, prec), nullptr, 1);
  check_close(at_one, (log_two_pi(prec) - 1L) / 2L, prec - 16, prec);

  // The row asymptotic at m = 4 is within 3% of log 96.
  Asym row = asym_row(prec);
  BigReal approx = eval_log(row.formula, &row.constant, 4);
  BigReal truth = log(BigReal(96L, prec));
  CHECK(abs(approx - truth) / truth < BigReal(mpq_class(3, 100), prec));
  CHECK_THROWS_AS(row.formula.eval(0), std::domain_error);
}

TEST_CASE("asym_for dispatches every kind and rejects scaled_row") {
  const mpfr_prec_t prec = 128;
  CHECK(asym_for({.kind = ProductKind::central_binomial_product}, prec).constant.name ==
        "C_binomial(2,1)");
  CHECK(asym_for({.kind = ProductKind::catalan_product}, prec).constant.name == "C_cat");
  CHECK(asym_for({.kind = ProductKind::pascal_row_product}, prec).constant.name == "C_row");
  CHECK(asym_for({.kind = ProductKind::hyperfactorial}, prec).constant.name == "A");
  CHECK_THROWS_AS(asym_for({.kind = ProductKind::scaled_row_product}, prec),
                  std::invalid_argument);
}

TEST_CASE("LogAsymptotic serializes to JSON decimal strings") {
  const mpfr_prec_t prec = 128;
  nlohmann::json j = p_k(2, prec).to_json(10);
  CHECK(j["q"] == "0.6931471805");
  CHECK(j["s"] == "0.5000000000");
  CHECK(j["u"] == "0.0000000000");
  CHECK(j["precision_bits"] == 128);
}
