#include "asymprod/asymptotics.hpp"

#include <sstream>
#include <stdexcept>

#include "asymprod/fk.hpp"
#include "asymprod/numerics.hpp"

namespace asymprod {

namespace {

mpq_class rat(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

LogAsymptotic::LogAsymptotic(mpfr_prec_t precision_bits)
    : r(0L, precision_bits),
      q(0L, precision_bits),
      s(0L, precision_bits),
      l(0L, precision_bits),
      t(0L, precision_bits),
      u(0L, precision_bits) {}

BigReal LogAsymptotic::eval(long m) const {
  if (m < 1) throw std::domain_error("LogAsymptotic::eval requires m >= 1");
  const mpfr_prec_t w = precision();
  BigReal mv(m, w);
  BigReal log_m = log(mv);
  BigReal m2 = mv * mv;
  return r * m2 * log_m + q * m2 + s * mv * log_m + l * mv + t * log_m + u;
}

LogAsymptotic LogAsymptotic::operator+(const LogAsymptotic& other) const {
  LogAsymptotic out(std::min(precision(), other.precision()));
  out.r = r + other.r;
  out.q = q + other.q;
  out.s = s + other.s;
  out.l = l + other.l;
  out.t = t + other.t;
  out.u = u + other.u;
  return out;
}

LogAsymptotic LogAsymptotic::operator-(const LogAsymptotic& other) const {
  LogAsymptotic out(std::min(precision(), other.precision()));
  out.r = r - other.r;
  out.q = q - other.q;
  out.s = s - other.s;
  out.l = l - other.l;
  out.t = t - other.t;
  out.u = u - other.u;
  return out;
}

nlohmann::json LogAsymptotic::to_json(std::size_t digits) const {
  return nlohmann::json{{"r", r.to_decimal(digits)}, {"q", q.to_decimal(digits)},
                        {"s", s.to_decimal(digits)}, {"l", l.to_decimal(digits)},
                        {"t", t.to_decimal(digits)}, {"u", u.to_decimal(digits)},
                        {"precision_bits", static_cast<long>(precision())}};
}

LogAsymptotic p_k(long k, mpfr_prec_t precision_bits) {
  if (k < 1) throw std::domain_error("p_k requires k >= 1");
  const mpfr_prec_t w = precision_bits;
  LogAsymptotic form(w);
  BigReal log_k = log(BigReal(k, w));
  BigReal half_k_log_k = mul(rat(k, 2), log_k);
  form.q = half_k_log_k;
  form.s = BigReal(rat(1, 2), w);
  form.l = half_k_log_k + (log_two_pi(w) + log_k - 1L) / 2L;
  form.t = BigReal(rat(3 * k + 1, 12 * k), w);
  return form;
}

Asym asym_binomial(long a, long b, mpfr_prec_t precision_bits) {
  if (!(a > b && b >= 1)) throw std::domain_error("asym_binomial requires a > b >= 1");
  const mpfr_prec_t w = precision_bits + kGuardBits;
  long c = a - b;

  FcValue ratio = fc(a, {b, c}, w);
  BigReal log_c = log(ratio.value) - log_two_pi(w) / 4L;

  std::ostringstream name;
  name << "C_binomial(" << a << "," << b << ")";
  AsymptoticConstant constant{name.str(), exp(log_c).round_to(precision_bits),
                              log_c.round_to(precision_bits)};
  LogAsymptotic formula = p_k(a, precision_bits) - p_k(b, precision_bits) - p_k(c, precision_bits);
  return Asym{std::move(constant), std::move(formula)};
}

Asym asym_multinomial(long a, const std::vector<long>& parts, mpfr_prec_t precision_bits) {
  const mpfr_prec_t w = precision_bits + kGuardBits;
  FcValue ratio = fc(a, parts, w);
  long r = static_cast<long>(parts.size());
  BigReal log_c = log(ratio.value) + mul(rat(1 - r, 4), log_two_pi(w));

  std::ostringstream name;
  name << "C_multinomial(" << a << ",[";
  for (std::size_t i = 0; i < parts.size(); ++i) name << (i ? "," : "") << parts[i];
  name << "])";
  AsymptoticConstant constant{name.str(), exp(log_c).round_to(precision_bits),
                              log_c.round_to(precision_bits)};

  LogAsymptotic formula = p_k(a, precision_bits);
  for (long b : parts) formula = formula - p_k(b, precision_bits);
  return Asym{std::move(constant), std::move(formula)};
}

Asym asym_row(mpfr_prec_t precision_bits) {
  const mpfr_prec_t w = precision_bits + kGuardBits;
  // C_row = A^2 / ((2 pi)^{1/2} e^{1/12}) = (F_1 (2 pi)^{1/4})^{-1}.
  BigReal log_c = 2L * log_glaisher(w) - log_two_pi(w) / 2L - BigReal(rat(1, 12), w);
  AsymptoticConstant constant{"C_row", exp(log_c).round_to(precision_bits),
                              log_c.round_to(precision_bits)};

  LogAsymptotic formula(precision_bits);
  formula.q = BigReal(rat(1, 2), precision_bits);
  formula.s = BigReal(rat(-1, 2), precision_bits);
  formula.l = (1L - log_two_pi(precision_bits) / 2L);
  formula.t = BigReal(rat(-1, 3), precision_bits);
  return Asym{std::move(constant), std::move(formula)};
}

Asym asym_hyperfactorial(mpfr_prec_t precision_bits) {
  const mpfr_prec_t w = precision_bits + kGuardBits;
  BigReal log_c = log_glaisher(w);
  AsymptoticConstant constant{"A", exp(log_c).round_to(precision_bits),
                              log_c.round_to(precision_bits)};

  LogAsymptotic formula(precision_bits);
  formula.r = BigReal(rat(1, 2), precision_bits);
  formula.q = BigReal(rat(-1, 4), precision_bits);
  formula.s = BigReal(rat(1, 2), precision_bits);
  formula.t = BigReal(rat(1, 12), precision_bits);
  return Asym{std::move(constant), std::move(formula)};
}

Asym asym_superfactorial(long k, mpfr_prec_t precision_bits) {
  if (k < 1) throw std::domain_error("asym_superfactorial requires k >= 1");
  const mpfr_prec_t w = precision_bits + kGuardBits;
  BigReal log_c = fk_closed(k, w).log_value + k * log_glaisher(w) + log_two_pi(w) / 4L;
  std::ostringstream name;
  name << "F_" << k << "*A^" << k << "*(2pi)^(1/4)";
  AsymptoticConstant constant{name.str(), exp(log_c).round_to(precision_bits),
                              log_c.round_to(precision_bits)};

  LogAsymptotic formula(precision_bits);
  BigReal log_k = log(BigReal(k, precision_bits));
  BigReal three_halves(rat(3, 2), precision_bits);
  formula.r = BigReal(rat(k, 2), precision_bits);
  formula.q = mul(rat(k, 2), log_k - three_halves);
  formula.s = BigReal(rat(k + 1, 2), precision_bits);
  formula.l = formula.q +
              (log_two_pi(precision_bits) + log_k + BigReal(rat(k, 2), precision_bits) - 1L) / 2L;
  formula.t = BigReal(rat(k * k + 3 * k + 1, 12 * k), precision_bits);
  return Asym{std::move(constant), std::move(formula)};
}

Asym asym_catalan(mpfr_prec_t precision_bits) {
  const mpfr_prec_t w = precision_bits + kGuardBits;
  Asym base = asym_binomial(2, 1, w);
  BigReal log_c = base.constant.log_value - log_two_pi(w) / 2L;
  AsymptoticConstant constant{"C_cat", exp(log_c).round_to(precision_bits),
                              log_c.round_to(precision_bits)};

  // Printed closed form: 2^{m^2} (4 e^3 / pi)^{m/2} m^{-(3/2 m + 15/8)}.
  LogAsymptotic formula(precision_bits);
  BigReal log_2 = log(BigReal(2L, precision_bits));
  BigReal log_pi = log(pi(precision_bits));
  formula.q = log_2;
  formula.s = BigReal(rat(-3, 2), precision_bits);
  formula.l = (2L * log_2 + 3L - log_pi) / 2L;
  formula.t = BigReal(rat(-15, 8), precision_bits);
  return Asym{std::move(constant), std::move(formula)};
}

HirschhornCorrection hirschhorn_correction(long n, long num_terms, mpfr_prec_t precision_bits) {
  if (n < 1) throw std::domain_error("hirschhorn requires n >= 1");
  if (num_terms < 0 || num_terms > 20) {
    throw std::domain_error("hirschhorn correction supports 0..20 terms");
  }
  const mpfr_prec_t w = precision_bits + kGuardBits;
  HirschhornCorrection correction;
  correction.n = n;
  correction.num_terms = num_terms;
  correction.correction_log = BigReal(0L, w);

  BigReal n_power(1L, w);
  BigReal prev_abs(0L, w);
  for (long v = 1; v <= num_terms; ++v) {
    mpq_class c = bernoulli(static_cast<unsigned long>(v) + 1) +
                  bernoulli(static_cast<unsigned long>(v) + 2);
    c /= mpq_class(v) * mpq_class(v + 1);
    c.canonicalize();
    n_power = n_power / BigReal(n, w);
    BigReal term = mul(c, n_power);
    BigReal term_abs = abs(term);
    if (v > 1 && sgn(c) != 0 && term_abs >= prev_abs && prev_abs.sign() != 0) {
      break;  // smallest-term cap on the divergent tail
    }
    correction.coefficients.push_back(c);
    correction.correction_log = correction.correction_log - term;
    if (sgn(c) != 0) prev_abs = term_abs;
  }
  correction.num_terms = static_cast<long>(correction.coefficients.size());
  correction.correction_log = correction.correction_log.round_to(precision_bits);
  return correction;
}

Asym hirschhorn_main_term(mpfr_prec_t precision_bits) {
  const mpfr_prec_t w = precision_bits + kGuardBits;
  // H^{-1} (2 pi)^{-1/4}, with H = F_1.
  BigReal log_c = -(fk_closed(1, w).log_value + log_two_pi(w) / 4L);
  AsymptoticConstant constant{"1/(H*(2pi)^(1/4))", exp(log_c).round_to(precision_bits),
                              log_c.round_to(precision_bits)};

  // e^{n(n+2)/2} n^{-(3n+2)/6} (2 pi)^{-n/2}, after splitting the constant
  // (2 pi)^{1/4} off the printed (2 pi)^{(2n+1)/4}.
  LogAsymptotic formula(precision_bits);
  formula.q = BigReal(rat(1, 2), precision_bits);
  formula.s = BigReal(rat(-1, 2), precision_bits);
  formula.l = 1L - log_two_pi(precision_bits) / 2L;
  formula.t = BigReal(rat(-1, 3), precision_bits);
  return Asym{std::move(constant), std::move(formula)};
}

BigReal hirschhorn(long n, long num_terms, mpfr_prec_t precision_bits) {
  if (n < 1) throw std::domain_error("hirschhorn requires n >= 1");
  const mpfr_prec_t w = precision_bits + kGuardBits;
  BigReal log_n = log(BigReal(n, w));
  BigReal main = -fk_closed(1, w).log_value + mul(rat(n * (n + 2), 2), BigReal(1L, w)) -
                 mul(rat(3 * n + 2, 6), log_n) - mul(rat(2 * n + 1, 4), log_two_pi(w));
  if (num_terms > 0) {
    main = main + hirschhorn_correction(n, num_terms, w).correction_log;
  }
  return main.round_to(precision_bits);
}

BigReal eval_log(const LogAsymptotic& formula, const AsymptoticConstant* constant, long m) {
  BigReal value = formula.eval(m);
  if (constant != nullptr) value = value + constant->log_value;
  return value;
}

Asym asym_for(const ProductSpec& spec, mpfr_prec_t precision_bits) {
  switch (spec.kind) {
    case ProductKind::hyperfactorial:
      return asym_hyperfactorial(precision_bits);
    case ProductKind::superfactorial_k:
      return asym_superfactorial(spec.k, precision_bits);
    case ProductKind::multinomial_product:
      return asym_multinomial(spec.a, spec.parts, precision_bits);
    case ProductKind::binomial_product:
      return asym_binomial(spec.a, spec.b, precision_bits);
    case ProductKind::central_binomial_product:
      return asym_binomial(2, 1, precision_bits);
    case ProductKind::catalan_product:
      return asym_catalan(precision_bits);
    case ProductKind::pascal_row_product:
      return asym_row(precision_bits);
    case ProductKind::scaled_row_product:
      throw std::invalid_argument("scaled_row_product has no m -> infinity asymptotic form");
  }
  throw std::invalid_argument("unknown product kind");
}

}  // namespace asymprod
