#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "asymprod/bigreal.hpp"

namespace asymprod {

enum class ProductKind {
  hyperfactorial,
  superfactorial_k,
  multinomial_product,
  binomial_product,
  central_binomial_product,
  catalan_product,
  pascal_row_product,
  scaled_row_product,
};

/// Identifies a product family; the limit (m or n) is supplied at evaluation
/// time so grids can share one spec.
struct ProductSpec {
  ProductKind kind{};
  long k = 1;               // superfactorial parameter
  long a = 0;               // multinomial/binomial/scaled-row parameter
  long b = 0;               // binomial lower parameter
  std::vector<long> parts;  // multinomial parts

  std::string name() const;
};

struct ExactValue {
  mpz_class integer_value;
  BigReal log_value;  // natural log of the exact integer, at caller precision
};

enum class Accumulation { tree, naive };

/// Balanced product of a term list. Halves above the size threshold may be
/// multiplied on separate threads up to `parallel_depth`; the split points
/// depend only on indices, so results are bit-identical for any depth.
mpz_class product_tree(std::span<const mpz_class> terms, int parallel_depth = 2);

ExactValue hyperfactorial(long n, mpfr_prec_t precision_bits);
ExactValue superfactorial(long k, long n, mpfr_prec_t precision_bits);
ExactValue multinomial_product(long a, const std::vector<long>& parts, long m,
                               mpfr_prec_t precision_bits);
ExactValue binomial_product(long a, long b, long m, mpfr_prec_t precision_bits);
ExactValue central_binomial_product(long m, mpfr_prec_t precision_bits);
ExactValue catalan_product(long m, mpfr_prec_t precision_bits);
ExactValue pascal_row_product(long n, mpfr_prec_t precision_bits);

/// Exact rational a^{-n(n+1)/2} * prod_{v=1}^{n} C(a v, v).
mpq_class scaled_row_product(long a, long n);

/// Evaluates any integer-valued kind at the given limit. The naive strategy
/// is the left-to-right oracle for the default tree accumulation.
ExactValue eval_exact(const ProductSpec& spec, long limit, mpfr_prec_t precision_bits,
                      Accumulation strategy = Accumulation::tree);

/// Evaluates an ascending grid of limits, extending the running product
/// incrementally instead of recomputing from scratch.
std::vector<ExactValue> eval_exact_grid(const ProductSpec& spec, std::span<const long> grid,
                                        mpfr_prec_t precision_bits);

/// Natural log of an exact integer at the requested precision.
BigReal log_of_integer(const mpz_class& value, mpfr_prec_t precision_bits);

std::string rational_to_string(const mpq_class& value);  // "p/q"

}  // namespace asymprod
