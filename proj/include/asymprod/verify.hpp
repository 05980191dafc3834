#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "asymprod/asymptotics.hpp"
#include "asymprod/bigreal.hpp"
#include "asymprod/exact.hpp"

namespace asymprod {

struct ComparisonRow {
  long m = 0;
  BigReal log_exact;
  BigReal log_asym;
  BigReal delta;  // log_exact - log_asym
};

/// Exact-vs-asymptotic evidence for one product family over a grid of limits.
/// Passes when |delta| is strictly decreasing and the final |delta| beats the
/// first by more than (grid span)/4.
struct ComparisonReport {
  ProductSpec spec;
  mpfr_prec_t precision_bits = kMinPrecisionBits;
  std::vector<ComparisonRow> rows;
  std::vector<BigReal> decay;  // |delta_{i+1}| / |delta_i|
  bool pass = false;
  std::string reason;

  nlohmann::json to_json(std::size_t digits = 30) const;
  std::string to_csv(std::size_t digits = 30) const;
};

ComparisonReport compare_grid(const ProductSpec& spec, std::span<const long> grid,
                              mpfr_prec_t precision_bits);

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

nlohmann::json verdicts_to_json(std::span<const Verdict> verdicts);

/// For each 2 <= k <= k_max: the divergent-series bracket must contain the
/// closed-form log F_k with theta strictly inside (0,1).
std::vector<Verdict> check_series_brackets(long k_max, mpfr_prec_t precision_bits);

/// Monotonicity of F_k, the two-part interval [FC_{2,1}, 1), multi-part
/// membership in (0,1), and both limiting directions of the interval claims.
Verdict check_monotonic_and_intervals(long a_max, mpfr_prec_t precision_bits);

/// Scaled row products converge to the Pascal row product at rate O(1/a);
/// errors are exact rationals here.
Verdict check_bin2_limit(long n, std::span<const long> a_grid);

/// H = F_1 as an identity, digit agreement with the published value, and the
/// corrected expansion beating the uncorrected one against exact products.
Verdict check_hirschhorn(std::span<const long> n_grid, long num_terms,
                         mpfr_prec_t precision_bits);

}  // namespace asymprod
