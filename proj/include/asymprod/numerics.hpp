#pragma once

#include <gmpxx.h>

#include "asymprod/bigreal.hpp"

namespace asymprod {

/// Exact Bernoulli number B_n in the z/(e^z - 1) convention (B_1 = -1/2).
/// Total for n >= 0; values are cached process-wide.
mpq_class bernoulli(unsigned long n);

enum class Constant {
  glaisher,
  euler_gamma,
  log_two_pi,
  golden_ratio,
  zeta_prime_2,
  zeta_prime_neg1,
};

/// Named fundamental constant to the requested precision. The Glaisher
/// constant is evaluated over two independent routes which must agree to
/// precision_bits - kGuardBits bits; disagreement raises precision_error.
BigReal fundamental(Constant name, mpfr_prec_t precision_bits);

BigReal glaisher(mpfr_prec_t precision_bits);
BigReal log_glaisher(mpfr_prec_t precision_bits);
BigReal euler_gamma(mpfr_prec_t precision_bits);
BigReal log_two_pi(mpfr_prec_t precision_bits);
BigReal golden_ratio(mpfr_prec_t precision_bits);
BigReal zeta_prime_2(mpfr_prec_t precision_bits);
BigReal zeta_prime_neg1(mpfr_prec_t precision_bits);

/// Riemann zeta at an integer s >= 2, Euler-Maclaurin with the first omitted
/// correction term as certified tail bound.
BigReal zeta_int(long s, mpfr_prec_t precision_bits);

/// log Gamma(p/q) for 0 < p < q, via the Stirling series after shifting the
/// argument; gcd reduction is handled here. Reflection and duplication are
/// deliberately not used on this path (they serve as test oracles).
BigReal log_gamma_rational(long p, long q, mpfr_prec_t precision_bits);

}  // namespace asymprod
