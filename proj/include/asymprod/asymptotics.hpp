#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "asymprod/bigreal.hpp"
#include "asymprod/exact.hpp"

namespace asymprod {

/// Canonical six-coefficient representation of a log-asymptotic:
///   r x^2 log x + q x^2 + s x log x + l x + t log x + u.
/// Formulas follow the convention that the asymptotic constant is kept apart,
/// so u stays zero in every P-form; difference arithmetic is coefficient-wise.
struct LogAsymptotic {
  BigReal r, q, s, l, t, u;

  explicit LogAsymptotic(mpfr_prec_t precision_bits);

  mpfr_prec_t precision() const { return r.precision(); }
  BigReal eval(long m) const;
  LogAsymptotic operator+(const LogAsymptotic& other) const;
  LogAsymptotic operator-(const LogAsymptotic& other) const;

  nlohmann::json to_json(std::size_t digits) const;
};

struct AsymptoticConstant {
  std::string name;
  BigReal value;
  BigReal log_value;
};

/// Constant + constant-free formula pair for one product family.
struct Asym {
  AsymptoticConstant constant;
  LogAsymptotic formula;
};

/// P_k(x) = (k^k)^C(x+1,2) ((2 pi k / e) x)^{x/2} x^{(3k+1)/(12k)} in log form.
LogAsymptotic p_k(long k, mpfr_prec_t precision_bits);

Asym asym_binomial(long a, long b, mpfr_prec_t precision_bits);
Asym asym_multinomial(long a, const std::vector<long>& parts, mpfr_prec_t precision_bits);
Asym asym_row(mpfr_prec_t precision_bits);
Asym asym_hyperfactorial(mpfr_prec_t precision_bits);
Asym asym_superfactorial(long k, mpfr_prec_t precision_bits);
Asym asym_catalan(mpfr_prec_t precision_bits);

/// Correction series coefficients c_v = (B_{v+1} + B_{v+2})/(v(v+1)) and the
/// truncated correction -sum c_v n^{-v}; truncation stops early at the
/// smallest term if the requested count runs into the divergent regime.
struct HirschhornCorrection {
  long n = 0;
  long num_terms = 0;
  std::vector<mpq_class> coefficients;
  BigReal correction_log;
};

HirschhornCorrection hirschhorn_correction(long n, long num_terms, mpfr_prec_t precision_bits);

/// Hirschhorn's main term, assembled from its published shape; coefficient-wise
/// it must reproduce the row-product asymptotic.
Asym hirschhorn_main_term(mpfr_prec_t precision_bits);

/// log of Hirschhorn's right-hand side at n with num_terms corrections,
/// using H = F_1.
BigReal hirschhorn(long n, long num_terms, mpfr_prec_t precision_bits);

/// log C + r m^2 log m + q m^2 + s m log m + l m + t log m + u.
BigReal eval_log(const LogAsymptotic& formula, const AsymptoticConstant* constant, long m);

/// Asymptotic constant/formula pair for a product spec (scaled_row has no
/// m -> infinity form and is rejected).
Asym asym_for(const ProductSpec& spec, mpfr_prec_t precision_bits);

}  // namespace asymprod
