#include "asymprod/bigreal.hpp"

#include <algorithm>
#include <utility>

namespace asymprod {

namespace {

mpfr_prec_t checked_precision(mpfr_prec_t precision_bits) {
  if (precision_bits < kMinPrecisionBits) {
    throw std::invalid_argument("BigReal precision must be at least 64 bits");
  }
  return precision_bits;
}

mpfr_prec_t combined_precision(const BigReal& a, const BigReal& b) {
  return std::min(a.precision(), b.precision());
}

}  // namespace

BigReal::BigReal(mpfr_prec_t precision_bits) {
  mpfr_init2(x_, checked_precision(precision_bits));
  mpfr_set_nan(x_);
}

BigReal::BigReal(long value, mpfr_prec_t precision_bits) {
  mpfr_init2(x_, checked_precision(precision_bits));
  mpfr_set_si(x_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, mpfr_prec_t precision_bits) {
  mpfr_init2(x_, checked_precision(precision_bits));
  mpfr_set_z(x_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, mpfr_prec_t precision_bits) {
  mpfr_init2(x_, checked_precision(precision_bits));
  mpfr_set_q(x_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(x_, other.precision());
  mpfr_set(x_, other.x_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(x_, kMinPrecisionBits);
  mpfr_set_nan(x_);
  mpfr_swap(x_, other.x_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(x_, other.precision());
    mpfr_set(x_, other.x_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(x_, other.x_);
  }
  return *this;
}

BigReal::~BigReal() { mpfr_clear(x_); }

BigReal BigReal::from_string(const std::string& text, mpfr_prec_t precision_bits) {
  BigReal r(precision_bits);
  if (mpfr_set_str(r.x_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("BigReal: cannot parse \"" + text + "\"");
  }
  return r;
}

BigReal BigReal::two_pow(long exponent, mpfr_prec_t precision_bits) {
  BigReal r(precision_bits);
  mpfr_set_si_2exp(r.x_, 1, exponent, MPFR_RNDN);
  return r;
}

BigReal BigReal::round_to(mpfr_prec_t precision_bits) const {
  BigReal r(precision_bits);
  mpfr_set(r.x_, x_, MPFR_RNDN);
  return r;
}

std::string BigReal::to_decimal(std::size_t fractional_digits) const {
  if (!is_finite()) {
    throw std::domain_error("BigReal::to_decimal on non-finite value");
  }
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, fractional_digits);
  // |x| * 10^d is exactly representable at prec(x) + bits(10^d).
  mpfr_prec_t scaled_prec =
      precision() + static_cast<mpfr_prec_t>(mpz_sizeinbase(pow10.get_mpz_t(), 2)) + 4;
  mpfr_t scaled;
  mpfr_init2(scaled, scaled_prec);
  mpfr_mul_z(scaled, x_, pow10.get_mpz_t(), MPFR_RNDN);
  mpz_class units;
  mpfr_get_z(units.get_mpz_t(), scaled, MPFR_RNDZ);  // truncation toward zero
  mpfr_clear(scaled);

  bool negative = units < 0;
  mpz_class magnitude = negative ? mpz_class(-units) : units;
  std::string digits = magnitude.get_str();
  if (digits.size() <= fractional_digits) {
    digits.insert(0, fractional_digits + 1 - digits.size(), '0');
  }
  if (fractional_digits > 0) {
    digits.insert(digits.size() - fractional_digits, ".");
  }
  return negative ? "-" + digits : digits;
}

#define ASYMPROD_BINOP(op, fn)                                     \
  BigReal operator op(const BigReal& a, const BigReal& b) {        \
    BigReal r(combined_precision(a, b));                           \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                      \
    return r;                                                      \
  }

ASYMPROD_BINOP(+, mpfr_add)
ASYMPROD_BINOP(-, mpfr_sub)
ASYMPROD_BINOP(*, mpfr_mul)
ASYMPROD_BINOP(/, mpfr_div)

#undef ASYMPROD_BINOP

BigReal operator-(const BigReal& a) {
  BigReal r(a.precision());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigReal operator+(long a, const BigReal& b) { return b + a; }

BigReal operator-(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigReal operator*(long a, const BigReal& b) { return b * a; }

BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.precision());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

#define ASYMPROD_UNFN(name, fn)          \
  BigReal name(const BigReal& a) {       \
    BigReal r(a.precision());            \
    fn(r.raw(), a.raw(), MPFR_RNDN);     \
    return r;                            \
  }

ASYMPROD_UNFN(abs, mpfr_abs)
ASYMPROD_UNFN(sqrt, mpfr_sqrt)
ASYMPROD_UNFN(exp, mpfr_exp)
ASYMPROD_UNFN(log, mpfr_log)

#undef ASYMPROD_UNFN

BigReal pow(const BigReal& base, long exponent) {
  BigReal r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
  return r;
}

BigReal mul(const mpq_class& coefficient, const BigReal& value) {
  BigReal r(value.precision());
  mpfr_mul_q(r.raw(), value.raw(), coefficient.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigReal pi(mpfr_prec_t precision_bits) {
  BigReal r(precision_bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

}  // namespace asymprod
