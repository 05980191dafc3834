#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asymprod {

// Thrown when an evaluation cannot certify the accuracy that was requested.
class precision_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr mpfr_prec_t kMinPrecisionBits = 64;

// Extra bits carried through every internal constant evaluation; comparisons
// against requested precision never look at these.
inline constexpr mpfr_prec_t kGuardBits = 32;

/// Arbitrary-precision real that knows its own working precision in bits.
/// Arithmetic between two values rounds to the smaller of the two precisions.
class BigReal {
 public:
  BigReal() : BigReal(kMinPrecisionBits) {}
  explicit BigReal(mpfr_prec_t precision_bits);
  BigReal(long value, mpfr_prec_t precision_bits);
  BigReal(const mpz_class& value, mpfr_prec_t precision_bits);
  BigReal(const mpq_class& value, mpfr_prec_t precision_bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal from_string(const std::string& text, mpfr_prec_t precision_bits);
  /// 2^exponent, exact.
  static BigReal two_pow(long exponent, mpfr_prec_t precision_bits);

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(x_); }
  int sign() const noexcept { return mpfr_sgn(x_); }
  bool is_finite() const noexcept { return mpfr_number_p(x_) != 0; }
  bool is_zero() const noexcept { return mpfr_zero_p(x_) != 0; }
  double to_double() const noexcept { return mpfr_get_d(x_, MPFR_RNDN); }

  /// Same value rounded to a (usually smaller) precision.
  BigReal round_to(mpfr_prec_t precision_bits) const;

  /// Fixed-point rendering: sign, integer part, '.', then exactly
  /// `fractional_digits` digits truncated toward zero. Never scientific.
  std::string to_decimal(std::size_t fractional_digits) const;

  mpfr_ptr raw() noexcept { return x_; }
  mpfr_srcptr raw() const noexcept { return x_; }

 private:
  mpfr_t x_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a);

BigReal operator+(const BigReal& a, long b);
BigReal operator+(long a, const BigReal& b);
BigReal operator-(const BigReal& a, long b);
BigReal operator-(long a, const BigReal& b);
BigReal operator*(const BigReal& a, long b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(const BigReal& a, long b);
BigReal operator/(long a, const BigReal& b);

bool operator==(const BigReal& a, const BigReal& b);
bool operator!=(const BigReal& a, const BigReal& b);
bool operator<(const BigReal& a, const BigReal& b);
bool operator<=(const BigReal& a, const BigReal& b);
bool operator>(const BigReal& a, const BigReal& b);
bool operator>=(const BigReal& a, const BigReal& b);

BigReal abs(const BigReal& a);
BigReal sqrt(const BigReal& a);
BigReal exp(const BigReal& a);
BigReal log(const BigReal& a);
BigReal pow(const BigReal& base, long exponent);
/// Exact rational times value, at the value's precision.
BigReal mul(const mpq_class& coefficient, const BigReal& value);
BigReal pi(mpfr_prec_t precision_bits);

}  // namespace asymprod
