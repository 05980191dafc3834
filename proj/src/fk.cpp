#include "asymprod/fk.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "asymprod/numerics.hpp"

namespace asymprod {

namespace {

mpq_class rat(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

struct FkKey {
  long k;
  mpfr_prec_t prec;
  bool operator<(const FkKey& o) const { return std::tie(k, prec) < std::tie(o.k, o.prec); }
};

std::mutex g_fk_mutex;
std::map<FkKey, FkValue> g_fk_cache;

BigReal fk_log_at(long k, mpfr_prec_t w) {
  BigReal result = mul(rat(k, 4), log_two_pi(w));
  result = result - mul(rat(k * k + 1, k), log_glaisher(w));
  result = result + mul(rat(1, 12 * k), BigReal(1L, w) - log(BigReal(k, w)));
  for (long v = 1; v < k; ++v) {
    result = result - mul(rat(v, k), log_gamma_rational(v, k, w));
  }
  return result;
}

// One additive piece of a Table 1 expression: coefficient * log(base).
struct LogTerm {
  mpq_class coefficient;
  BigReal log_base;
};

BigReal eval_log_terms(const std::vector<LogTerm>& terms, mpfr_prec_t w) {
  BigReal sum(0L, w);
  for (const auto& t : terms) sum = sum + mul(t.coefficient, t.log_base);
  return sum;
}

}  // namespace

FkValue fk_closed(long k, mpfr_prec_t precision_bits) {
  if (k < 1) throw std::domain_error("fk_closed requires k >= 1");
  {
    std::lock_guard<std::mutex> lock(g_fk_mutex);
    auto it = g_fk_cache.find({k, precision_bits});
    if (it != g_fk_cache.end()) return it->second;
  }
  BigReal log_value = fk_log_at(k, precision_bits + kGuardBits);
  FkValue result{k, log_value.round_to(precision_bits), exp(log_value).round_to(precision_bits)};
  std::lock_guard<std::mutex> lock(g_fk_mutex);
  return g_fk_cache.emplace(FkKey{k, precision_bits}, result).first->second;
}

BigReal fk_table_closed_form(int k, mpfr_prec_t precision_bits) {
  if (k < 1 || k > 6) throw std::out_of_range("fk_table_closed_form covers k = 1..6 only");
  const mpfr_prec_t w = precision_bits + kGuardBits;
  const BigReal one(1L, w);
  const BigReal l2pi = log_two_pi(w);
  const BigReal la = log_glaisher(w);
  const BigReal l2 = log(BigReal(2L, w));
  const BigReal l3 = log(BigReal(3L, w));
  const BigReal l5 = log(BigReal(5L, w));

  std::vector<LogTerm> terms;
  switch (k) {
    case 1:
      terms = {{rat(1, 4), l2pi}, {rat(1, 12), one}, {rat(-2, 1), la}};
      break;
    case 2:
      terms = {{rat(1, 4), l2pi}, {rat(5, 24), l2}, {rat(1, 24), one}, {rat(-5, 2), la}};
      break;
    case 3:
      terms = {{rat(1, 12), l2pi},
               {rat(11, 36), l3},
               {rat(1, 36), one},
               {rat(1, 3), log_gamma_rational(1, 3, w)},
               {rat(-10, 3), la}};
      break;
    case 4:
      terms = {{rat(7, 12), l2},
               {rat(1, 48), one},
               {rat(1, 2), log_gamma_rational(1, 4, w)},
               {rat(-17, 4), la}};
      break;
    case 5:
      terms = {{rat(-3, 20), l2pi},
               {rat(1, 3), l5},
               {rat(-1, 10), log(golden_ratio(w))},
               {rat(1, 60), one},
               {rat(3, 5), log_gamma_rational(1, 5, w)},
               {rat(1, 5), log_gamma_rational(2, 5, w)},
               {rat(-26, 5), la}};
      break;
    case 6:
      terms = {{rat(-7, 12), l2pi},
               {rat(25, 72), l2},
               {rat(47, 72), l3},
               {rat(1, 72), one},
               {rat(5, 3), log_gamma_rational(1, 3, w)},
               {rat(-37, 6), la}};
      break;
  }
  return exp(eval_log_terms(terms, w)).round_to(precision_bits);
}

BigReal SeriesBracket::compute_theta(const BigReal& true_log_value) {
  BigReal theta = (true_log_value - low) / (high - low);
  theta_estimate = theta;
  return theta;
}

SeriesBracket fk_series(long k, mpfr_prec_t precision_bits) {
  if (k < 1) throw std::domain_error("fk_series requires k >= 1");
  // The bracket at optimal truncation is ~e^{-2 pi k} wide (~9.07 k bits), so
  // the working precision has to grow with k or consecutive partial sums
  // would round to the same value.
  const mpfr_prec_t w =
      precision_bits + kGuardBits + static_cast<mpfr_prec_t>(9.1 * static_cast<double>(k)) + 64;

  SeriesBracket bracket;
  bracket.k = k;
  bracket.reliable = (k >= 2);

  BigReal sum = mul(rat(1, 12 * k), euler_gamma(w));
  bracket.partial_sums.push_back(sum);

  // Terms B_{2j} zeta(2j-1) / (2j(2j-1) k^{2j-1}) for j >= 2, kept while the
  // magnitudes strictly decrease (optimal truncation).
  BigReal prev_abs(0L, w);
  std::size_t last_j = 1;
  for (long j = 2;; ++j) {
    mpz_class k_pow;
    mpz_ui_pow_ui(k_pow.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(2 * j - 1));
    mpq_class coeff = bernoulli(2 * static_cast<unsigned long>(j));
    coeff /= mpq_class(2 * j) * mpq_class(2 * j - 1) * mpq_class(k_pow);
    coeff.canonicalize();
    BigReal term = mul(coeff, zeta_int(2 * j - 1, w));
    BigReal term_abs = abs(term);
    if (j > 2 && term_abs >= prev_abs) break;
    sum = sum + term;
    bracket.partial_sums.push_back(sum);
    prev_abs = term_abs;
    last_j = static_cast<std::size_t>(j);
    if (j > 4 * k + 64) break;  // safety stop well past the turning point
  }
  bracket.truncation_index = last_j;

  const auto& sums = bracket.partial_sums;
  const BigReal& s_last = sums[sums.size() - 1];
  const BigReal& s_prev = sums[sums.size() - 2];
  bracket.low = s_prev < s_last ? s_prev : s_last;
  bracket.high = s_prev < s_last ? s_last : s_prev;
  bracket.compute_theta(fk_closed(k, w).log_value);
  return bracket;
}

FcValue fc(long a, std::vector<long> parts, mpfr_prec_t precision_bits) {
  if (a < 2 || parts.size() < 2) {
    throw std::invalid_argument("fc requires a >= 2 and at least two parts");
  }
  long sum = 0;
  for (long b : parts) {
    if (b < 1) throw std::invalid_argument("fc parts must be positive");
    sum += b;
  }
  if (sum != a) throw std::invalid_argument("fc parts must sum to a");

  const mpfr_prec_t w = precision_bits + kGuardBits;
  BigReal log_fc = fk_closed(a, w).log_value;
  for (long b : parts) {
    log_fc = log_fc - fk_closed(b, w).log_value;
  }
  return FcValue{a, std::move(parts), exp(log_fc).round_to(precision_bits)};
}

mpq_class g_bound(long a, long b) {
  if (a < 1 || b < 1) throw std::domain_error("g_bound requires a, b >= 1");
  mpq_class result = rat(1, a) + rat(1, b) - rat(1, a + b);
  result.canonicalize();
  return result;
}

}  // namespace asymprod
