#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "asymprod/bigreal.hpp"

namespace asymprod {

/// The superfactorial constant F_k: > 1 for every k, strictly decreasing,
/// limit 1.
struct FkValue {
  long k = 0;
  BigReal log_value;
  BigReal value;
};

/// log F_k assembled from the closed form
///   (k/4) log 2pi - ((k^2+1)/k) log A + (1/(12k))(1 - log k)
///   - sum_{v=1}^{k-1} (v/k) log Gamma(v/k).
/// Results are memoized per (k, precision).
FkValue fk_closed(long k, mpfr_prec_t precision_bits);

/// Independent cross-check route: the tabulated radical/Gamma expressions for
/// F_1 .. F_6, evaluated verbatim.
BigReal fk_table_closed_form(int k, mpfr_prec_t precision_bits);

/// Optimal truncation of the divergent expansion
///   log F_k = gamma/(12k) + sum_{j>=2} B_{2j} zeta(2j-1) / (2j(2j-1) k^{2j-1}).
/// Consecutive partial sums around the smallest term bracket the true value.
/// The bracket narrows like e^{-2 pi k}, so the stored values carry a
/// k-dependent elevated precision; compare against a truth of at least
/// low.precision() bits (fk_series fills theta_estimate that way itself).
struct SeriesBracket {
  long k = 0;
  std::vector<BigReal> partial_sums;
  std::size_t truncation_index = 0;  // series index j of the smallest kept term
  BigReal low;
  BigReal high;
  std::optional<BigReal> theta_estimate;
  bool reliable = true;  // false for k == 1, where the bracket is loose

  /// (true - low)/(high - low); stored and returned.
  BigReal compute_theta(const BigReal& true_log_value);
};

SeriesBracket fk_series(long k, mpfr_prec_t precision_bits);

/// FC_{a,b} = F_a / (F_{b_1} ... F_{b_r}), strictly inside (0,1).
struct FcValue {
  long a = 0;
  std::vector<long> parts;
  BigReal value;
};

FcValue fc(long a, std::vector<long> parts, mpfr_prec_t precision_bits);

/// Exact g(a,b) = 1/a + 1/b - 1/(a+b).
mpq_class g_bound(long a, long b);

}  // namespace asymprod
