#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <string>
#include <vector>

#include "asymprod/fk.hpp"
#include "asymprod/numerics.hpp"

using namespace asymprod;

namespace {

BigReal tol(long bits_below, mpfr_prec_t prec) { return BigReal::two_pow(-bits_below, prec); }

const char* kTableDigits[7] = {
    nullptr,
    "1.0463350667705031809809506",
    "1.0239374116371184015779507",
    "1.0160405370646209912870365",
    "1.0120458980239446462423302",
    "1.0096399728364770508687282",
    "1.0080336272420732654455927",
};

}  // namespace

TEST_CASE("fk_closed reproduces the tabulated digits") {
  const mpfr_prec_t prec = 160;
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(fk_closed(k, prec).value.to_decimal(25) == kTableDigits[k]);
  }
  CHECK_THROWS_AS(fk_closed(0, prec), std::domain_error);
}

TEST_CASE("fk_table_closed_form reproduces the tabulated digits independently") {
  const mpfr_prec_t prec = 160;
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(fk_table_closed_form(k, prec).to_decimal(25) == kTableDigits[k]);
  }
  CHECK_THROWS_AS(fk_table_closed_form(0, prec), std::out_of_range);
  CHECK_THROWS_AS(fk_table_closed_form(7, prec), std::out_of_range);
}

TEST_CASE("the two F_k routes agree to better than 30 digits at 256 bits") {
  const mpfr_prec_t prec = 256;
  BigReal limit = BigReal::from_string("1e-30", prec);
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    BigReal diff = abs(fk_table_closed_form(k, prec) - fk_closed(k, prec).value);
    CHECK(diff < limit);
    CHECK(diff < tol(prec - kGuardBits, prec));
  }
}

TEST_CASE("value and log_value stay consistent") {
  const mpfr_prec_t prec = 192;
  for (long k : {1L, 3L, 10L, 25L}) {
    FkValue f = fk_closed(k, prec);
    CHECK(abs(f.value - exp(f.log_value)) < tol(prec - 8, prec));
  }
}

TEST_CASE("F_k is strictly decreasing with lower bound 1 up to k = 50") {
  const mpfr_prec_t prec = 256;
  BigReal one(1L, prec);
  BigReal previous = fk_closed(1, prec).value;
  CHECK(previous > one);
  for (long k = 2; k <= 50; ++k) {
    CAPTURE(k);
    BigReal current = fk_closed(k, prec).value;
    CHECK(current > one);
    CHECK(current < previous);
    previous = current;
  }
}

TEST_CASE("fk_series partial sums match the first two terms for k = 2") {
  const mpfr_prec_t prec = 192;
  SeriesBracket bracket = fk_series(2, prec);
  REQUIRE(bracket.partial_sums.size() >= 2);
  // gamma/24 and gamma/24 - zeta(3)/2880, by the term formula.
  CHECK(bracket.partial_sums[0].to_decimal(25) == "0.0240506527042305358586046");
  CHECK(bracket.partial_sums[1].to_decimal(25) == "0.0236332718350778989539519");
  BigReal expected0 = euler_gamma(prec) / 24L;
  BigReal expected1 = expected0 - zeta_int(3, prec) / 2880L;
  CHECK(abs(bracket.partial_sums[0] - expected0) < tol(prec - 8, prec));
  CHECK(abs(bracket.partial_sums[1] - expected1) < tol(prec - 8, prec));
  CHECK(bracket.reliable);
}

TEST_CASE("brackets contain the closed-form value with theta inside (0,1)") {
  const mpfr_prec_t prec = 192;
  for (long k = 2; k <= 50; ++k) {
    CAPTURE(k);
    SeriesBracket bracket = fk_series(k, prec);
    // Judge containment at the bracket's own elevated precision.
    BigReal truth = fk_closed(k, bracket.low.precision()).log_value;
    CHECK(bracket.low < truth);
    CHECK(truth < bracket.high);
    CHECK(bracket.low < bracket.high);
    REQUIRE(bracket.theta_estimate.has_value());
    BigReal theta = *bracket.theta_estimate;
    CHECK(theta > BigReal(0L, prec));
    CHECK(theta < BigReal(1L, prec));
  }
}

TEST_CASE("the k = 1 series is allowed but flagged unreliable") {
  SeriesBracket bracket = fk_series(1, 128);
  CHECK_FALSE(bracket.reliable);
  CHECK(bracket.partial_sums.size() >= 2);
}

TEST_CASE("residual bound: log F_k - gamma/(12k) in (-zeta(3)/(360 k^3), 0)") {
  const mpfr_prec_t prec = 192;
  BigReal gamma_v = euler_gamma(prec);
  BigReal zeta3 = zeta_int(3, prec);
  for (long k = 2; k <= 50; ++k) {
    CAPTURE(k);
    BigReal residual = fk_closed(k, prec).log_value - gamma_v / (12L * k);
    CHECK(residual < BigReal(0L, prec));
    CHECK(residual > -(zeta3 / (360L * k * k * k)));
  }
}

TEST_CASE("fc reproduces FC_{2,1} and the gamma-factor example") {
  const mpfr_prec_t prec = 160;
  CHECK(fc(2, {1, 1}, prec).value.to_decimal(25) == "0.9352589011148368571152882");
  // FC_{5,(2,3)} = C_{5,2} (2 pi)^{1/4}, evaluated directly as the F ratio.
  CHECK(fc(5, {2, 3}, prec).value.to_decimal(25) == "0.9704699448500194556800019");
  CHECK(fc(3, {1, 1, 1}, prec).value.to_decimal(25) == "0.8869490930842384349732210");
  CHECK(fc(3, {1, 1, 1}, prec).value < BigReal(1L, prec));
}

TEST_CASE("fc agrees with the direct F-ratio route") {
  const mpfr_prec_t prec = 192;
  BigReal direct =
      fk_closed(5, prec).value / (fk_closed(2, prec).value * fk_closed(3, prec).value);
  CHECK(abs(fc(5, {2, 3}, prec).value - direct) < tol(prec - 16, prec));
}

TEST_CASE("fc validates its parts") {
  CHECK_THROWS_AS(fc(5, {2, 2}, 128), std::invalid_argument);   // sum mismatch
  CHECK_THROWS_AS(fc(5, {5}, 128), std::invalid_argument);      // single part
  CHECK_THROWS_AS(fc(5, {6, -1}, 128), std::invalid_argument);  // non-positive part
  CHECK_THROWS_AS(fc(5, {}, 128), std::invalid_argument);
}

TEST_CASE("two-part interval [FC_{2,1}, 1) for 2 <= a <= 20") {
  const mpfr_prec_t prec = 160;
  BigReal fc21 = fc(2, {1, 1}, prec).value;
  BigReal one(1L, prec);
  for (long a = 2; a <= 20; ++a) {
    for (long b = 1; b < a; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      BigReal value = fc(a, {b, a - b}, prec).value;
      CHECK(value >= fc21);
      CHECK(value < one);
    }
  }
}

TEST_CASE("g_bound: pinned values and lemma bounds") {
  CHECK(g_bound(1, 2) == mpq_class(7, 6));
  CHECK(g_bound(1, 1) == mpq_class(3, 2));  // excluded a+b < 3 case still computes
  CHECK(g_bound(2, 2) == mpq_class(3, 4));
  CHECK(g_bound(2, 2) > 0);
  CHECK(g_bound(2, 2) <= mpq_class(7, 6));
  CHECK_THROWS_AS(g_bound(0, 1), std::domain_error);

  mpq_class upper(7, 6);
  long violations = 0;
  for (long a = 1; a <= 100; ++a) {
    for (long b = 1; b <= 100; ++b) {
      if (a + b < 3) continue;
      mpq_class g = g_bound(a, b);
      if (!(g > 0 && g <= upper)) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("memoized F_k values are identical across calls") {
  FkValue first = fk_closed(7, 192);
  FkValue second = fk_closed(7, 192);
  CHECK(first.value == second.value);
  CHECK(first.log_value == second.log_value);
}
