#include "asymprod/numerics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <vector>

namespace asymprod {

namespace {

mpq_class rat(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::mutex g_bernoulli_mutex;
std::vector<mpq_class> g_bernoulli;  // B_0 .. B_max computed so far

// Fills the cache through index n using the recurrence
// B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j from the generating function.
void extend_bernoulli(unsigned long n) {
  if (g_bernoulli.empty()) {
    g_bernoulli.emplace_back(1);                 // B_0
    g_bernoulli.emplace_back(mpq_class(-1, 2));  // B_1
  }
  while (g_bernoulli.size() <= n) {
    unsigned long m = g_bernoulli.size();
    if (m % 2 == 1) {
      g_bernoulli.emplace_back(0);  // odd Bernoulli numbers > 1 vanish
      continue;
    }
    mpq_class sum;
    mpz_class binom;
    for (unsigned long j = 0; j < m; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      sum += binom * g_bernoulli[j];
    }
    sum /= -static_cast<long>(m + 1);
    sum.canonicalize();
    g_bernoulli.push_back(sum);
  }
}

mpz_class factorial_mpz(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// First-order jet (value, d/ds) used to evaluate the Euler-Maclaurin formula
// and its s-derivative in one pass.
struct Jet {
  BigReal v;
  BigReal d;
};

Jet jet_zero(mpfr_prec_t w) { return {BigReal(0L, w), BigReal(0L, w)}; }

Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d + b.d}; }
Jet operator*(const Jet& a, const Jet& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
Jet operator/(const Jet& a, const Jet& b) {
  BigReal v = a.v / b.v;
  return {v, (a.d - v * b.d) / b.v};
}
Jet scale(const Jet& a, const BigReal& c) { return {a.v * c, a.d * c}; }

// n^exponent as a jet in s where exponent depends on s linearly with slope -1:
// value n^e, derivative -log(n) * n^e.
Jet jet_power(long n, long exponent, const BigReal& log_n, mpfr_prec_t w) {
  BigReal value = pow(BigReal(n, w), exponent);
  return {value, -(log_n * value)};
}

// Euler-Maclaurin evaluation of zeta(s) (and d/ds when wanted) at integer s.
// The formula continues analytically below s = 1 once correction terms are in
// play, so s = -1 is fine. The value tail is certified by the first omitted
// correction term; the derivative tail uses the same omitted term, and the
// mandatory Glaisher dual-route check cross-validates that policy.
Jet euler_maclaurin_zeta(long s, mpfr_prec_t w, bool want_derivative) {
  const long target_exp = -static_cast<long>(w) - 16;
  const BigReal tolerance = BigReal::two_pow(target_exp, w);
  long big_n = std::max<long>(20, static_cast<long>(w) / 5);

  for (int attempt = 0; attempt < 12; ++attempt, big_n *= 2) {
    Jet sum = jet_zero(w);
    // Head: sum_{k=1}^{N-1} k^{-s}.
    for (long k = 1; k < big_n; ++k) {
      sum = sum + jet_power(k, -s, log(BigReal(k, w)), w);
    }
    BigReal log_nn = log(BigReal(big_n, w));
    // N^{1-s}/(s-1) and N^{-s}/2.
    Jet s_minus_1{BigReal(s - 1, w), BigReal(1L, w)};
    sum = sum + jet_power(big_n, 1 - s, log_nn, w) / s_minus_1;
    Jet half_term = jet_power(big_n, -s, log_nn, w);
    sum = sum + Jet{half_term.v / 2L, half_term.d / 2L};

    // Correction terms T_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{1-s-2j}.
    Jet rising{BigReal(1L, w), BigReal(0L, w)};
    Jet n_power = jet_power(big_n, 1 - s, log_nn, w);
    BigReal inv_n2 = 1L / (BigReal(big_n, w) * BigReal(big_n, w));
    BigReal prev_metric(0L, w);
    bool have_prev = false;
    bool certified = false;

    for (long j = 1; j <= 4 * big_n; ++j) {
      if (j == 1) {
        rising = Jet{BigReal(s, w), BigReal(1L, w)};
      } else {
        rising = rising * Jet{BigReal(s + 2 * j - 3, w), BigReal(1L, w)} *
                 Jet{BigReal(s + 2 * j - 2, w), BigReal(1L, w)};
      }
      n_power = scale(n_power, inv_n2);
      mpq_class coeff = bernoulli(2 * static_cast<unsigned long>(j));
      coeff /= factorial_mpz(2 * static_cast<unsigned long>(j));
      coeff.canonicalize();
      Jet term = rising * n_power;
      term = Jet{mul(coeff, term.v), mul(coeff, term.d)};

      BigReal metric = abs(term.v);
      if (want_derivative) {
        BigReal dm = abs(term.d);
        if (dm > metric) metric = dm;
      }
      if (metric < tolerance) {
        certified = true;  // |tail| bounded by the first omitted term
        break;
      }
      if (have_prev && metric >= prev_metric) {
        break;  // entered the divergent regime before certification
      }
      sum = sum + term;
      prev_metric = metric;
      have_prev = true;
    }
    if (certified) return sum;
  }
  throw precision_error("Euler-Maclaurin zeta evaluation could not certify the requested accuracy");
}

struct ZetaKey {
  long s;
  mpfr_prec_t prec;
  bool operator<(const ZetaKey& o) const { return std::tie(s, prec) < std::tie(o.s, o.prec); }
};

std::mutex g_zeta_mutex;
std::map<ZetaKey, BigReal> g_zeta_cache;

std::mutex g_log_glaisher_mutex;
std::map<mpfr_prec_t, BigReal> g_log_glaisher_cache;

BigReal euler_gamma_at(mpfr_prec_t w) {
  BigReal r(w);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

BigReal log_two_pi_at(mpfr_prec_t w) { return log(2L * pi(w)); }

// log A over both defining routes; they must agree before either is trusted.
BigReal log_glaisher_at(mpfr_prec_t precision_bits) {
  const mpfr_prec_t w = precision_bits + kGuardBits;
  Jet zeta_neg1 = euler_maclaurin_zeta(-1, w, true);
  BigReal route_neg1 = BigReal(rat(1, 12), w) - zeta_neg1.d;

  Jet zeta_two = euler_maclaurin_zeta(2, w, true);
  BigReal two_pi_sq = 2L * pi(w) * pi(w);
  BigReal route_two =
      mul(rat(1, 12), euler_gamma_at(w) + log_two_pi_at(w)) - zeta_two.d / two_pi_sq;

  BigReal tolerance = BigReal::two_pow(
      -(static_cast<long>(precision_bits) - static_cast<long>(kGuardBits)), w);
  if (abs(route_neg1 - route_two) > tolerance) {
    throw precision_error("Glaisher constant routes disagree beyond the certified tolerance");
  }
  return route_neg1.round_to(precision_bits);
}

}  // namespace

mpq_class bernoulli(unsigned long n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  extend_bernoulli(n);
  return g_bernoulli[n];
}

BigReal zeta_int(long s, mpfr_prec_t precision_bits) {
  if (s < 2) throw std::domain_error("zeta_int requires s >= 2");
  {
    std::lock_guard<std::mutex> lock(g_zeta_mutex);
    auto it = g_zeta_cache.find({s, precision_bits});
    if (it != g_zeta_cache.end()) return it->second;
  }
  BigReal value =
      euler_maclaurin_zeta(s, precision_bits + kGuardBits, false).v.round_to(precision_bits);
  std::lock_guard<std::mutex> lock(g_zeta_mutex);
  return g_zeta_cache.emplace(ZetaKey{s, precision_bits}, value).first->second;
}

BigReal log_gamma_rational(long p, long q, mpfr_prec_t precision_bits) {
  if (p <= 0 || q <= 0 || p >= q) {
    throw std::domain_error("log_gamma_rational requires 0 < p < q");
  }
  long g = std::gcd(p, q);
  p /= g;
  q /= g;

  // Extra headroom: the shifted series value is O(z log z) and the downward
  // recurrence subtracts most of it back off.
  const mpfr_prec_t w = precision_bits + kGuardBits + 16;
  const BigReal tolerance =
      BigReal::two_pow(-static_cast<long>(precision_bits) - kGuardBits - 8, w);

  // Shift z = p/q upward until the Stirling tail can certify the target.
  const long shift = std::max<long>(12, static_cast<long>(w) / 8 + 4);
  BigReal z = BigReal(rat(p, q), w) + shift;

  BigReal log_z = log(z);
  BigReal result = (z - BigReal(rat(1, 2), w)) * log_z - z + log_two_pi_at(w) / 2L;

  BigReal inv_z2 = 1L / (z * z);
  BigReal z_power = 1L / z;  // z^{-(2j-1)}
  bool certified = false;
  for (long j = 1; j <= 8 * shift; ++j) {
    mpq_class coeff = bernoulli(2 * static_cast<unsigned long>(j));
    coeff /= mpq_class(2 * j * (2 * j - 1));
    coeff.canonicalize();
    BigReal term = mul(coeff, z_power);
    if (abs(term) < tolerance) {
      certified = true;  // remainder bounded by the first omitted term
      break;
    }
    result = result + term;
    z_power = z_power * inv_z2;
  }
  if (!certified) {
    throw precision_error("Stirling series for log Gamma could not certify the requested accuracy");
  }

  // Walk back down: log Gamma(z0) = log Gamma(z0 + M) - sum_i log(z0 + i).
  for (long i = 0; i < shift; ++i) {
    result = result - log(BigReal(rat(p + i * q, q), w));
  }
  return result.round_to(precision_bits);
}

BigReal glaisher(mpfr_prec_t precision_bits) {
  return exp(log_glaisher(precision_bits + kGuardBits)).round_to(precision_bits);
}

BigReal log_glaisher(mpfr_prec_t precision_bits) {
  {
    std::lock_guard<std::mutex> lock(g_log_glaisher_mutex);
    auto it = g_log_glaisher_cache.find(precision_bits);
    if (it != g_log_glaisher_cache.end()) return it->second;
  }
  BigReal value = log_glaisher_at(precision_bits);
  std::lock_guard<std::mutex> lock(g_log_glaisher_mutex);
  return g_log_glaisher_cache.emplace(precision_bits, value).first->second;
}

BigReal euler_gamma(mpfr_prec_t precision_bits) {
  return euler_gamma_at(precision_bits + kGuardBits).round_to(precision_bits);
}

BigReal log_two_pi(mpfr_prec_t precision_bits) {
  return log_two_pi_at(precision_bits + kGuardBits).round_to(precision_bits);
}

BigReal golden_ratio(mpfr_prec_t precision_bits) {
  const mpfr_prec_t w = precision_bits + kGuardBits;
  return ((sqrt(BigReal(5L, w)) + 1L) / 2L).round_to(precision_bits);
}

BigReal zeta_prime_2(mpfr_prec_t precision_bits) {
  return euler_maclaurin_zeta(2, precision_bits + kGuardBits, true).d.round_to(precision_bits);
}

BigReal zeta_prime_neg1(mpfr_prec_t precision_bits) {
  return euler_maclaurin_zeta(-1, precision_bits + kGuardBits, true).d.round_to(precision_bits);
}

BigReal fundamental(Constant name, mpfr_prec_t precision_bits) {
  switch (name) {
    case Constant::glaisher:
      return glaisher(precision_bits);
    case Constant::euler_gamma:
      return euler_gamma(precision_bits);
    case Constant::log_two_pi:
      return log_two_pi(precision_bits);
    case Constant::golden_ratio:
      return golden_ratio(precision_bits);
    case Constant::zeta_prime_2:
      return zeta_prime_2(precision_bits);
    case Constant::zeta_prime_neg1:
      return zeta_prime_neg1(precision_bits);
  }
  throw std::invalid_argument("unknown fundamental constant");
}

}  // namespace asymprod
