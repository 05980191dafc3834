#include "asymprod/exact.hpp"

#include <future>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asymprod {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

mpz_class tree_impl(std::span<const mpz_class> terms, int depth) {
  if (terms.empty()) return 1;
  if (terms.size() == 1) return terms[0];
  if (terms.size() == 2) return terms[0] * terms[1];
  std::size_t mid = terms.size() / 2;
  if (depth > 0 && terms.size() >= 64) {
    auto left = std::async(std::launch::async,
                           [&] { return tree_impl(terms.first(mid), depth - 1); });
    mpz_class right = tree_impl(terms.subspan(mid), depth - 1);
    return left.get() * right;
  }
  return tree_impl(terms.first(mid), 0) * tree_impl(terms.subspan(mid), 0);
}

// Emits the factor for n = 1, 2, ... of one product family.
class TermStream {
 public:
  virtual ~TermStream() = default;
  virtual mpz_class next() = 0;
};

class HyperfactorialTerms : public TermStream {
 public:
  mpz_class next() override {
    ++n_;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(n_), static_cast<unsigned long>(n_));
    return t;
  }

 private:
  long n_ = 0;
};

class SuperfactorialTerms : public TermStream {
 public:
  explicit SuperfactorialTerms(long k) : k_(k) {}

  mpz_class next() override {
    ++n_;
    for (long j = k_ * (n_ - 1) + 1; j <= k_ * n_; ++j) {
      factorial_ *= j;
    }
    return factorial_;
  }

 private:
  long k_;
  long n_ = 0;
  mpz_class factorial_ = 1;  // (k*n)!
};

// C(a n, b n), advanced by exact ratio updates.
class BinomialTerms : public TermStream {
 public:
  BinomialTerms(long a, long b) : a_(a), b_(b), c_(a - b) {}

  mpz_class next() override {
    ++n_;
    if (n_ == 1) {
      mpz_bin_uiui(value_.get_mpz_t(), static_cast<unsigned long>(a_),
                   static_cast<unsigned long>(b_));
      return value_;
    }
    mpz_class numerator = range_product(a_ * (n_ - 1) + 1, a_ * n_);
    mpz_class denominator =
        range_product(b_ * (n_ - 1) + 1, b_ * n_) * range_product(c_ * (n_ - 1) + 1, c_ * n_);
    value_ *= numerator;
    mpz_divexact(value_.get_mpz_t(), value_.get_mpz_t(), denominator.get_mpz_t());
    return value_;
  }

 private:
  static mpz_class range_product(long lo, long hi) {
    mpz_class p = 1;
    for (long j = lo; j <= hi; ++j) p *= j;
    return p;
  }

  long a_, b_, c_;
  long n_ = 0;
  mpz_class value_;
};

class MultinomialTerms : public TermStream {
 public:
  MultinomialTerms(long a, std::vector<long> parts) : a_(a), parts_(std::move(parts)) {}

  mpz_class next() override {
    ++n_;
    mpz_class coefficient = 1;
    mpz_class binom;
    long remaining = a_ * n_;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
      long choose = parts_[i] * n_;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(remaining),
                   static_cast<unsigned long>(choose));
      coefficient *= binom;
      remaining -= choose;
    }
    return coefficient;
  }

 private:
  long a_;
  std::vector<long> parts_;
  long n_ = 0;
};

// Catalan numbers, used by the naive accumulation route.
class CatalanTerms : public TermStream {
 public:
  mpz_class next() override {
    ++n_;
    mpz_class central;
    mpz_bin_uiui(central.get_mpz_t(), static_cast<unsigned long>(2 * n_),
                 static_cast<unsigned long>(n_));
    mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(),
                    static_cast<unsigned long>(n_ + 1));
    return central;
  }

 private:
  long n_ = 0;
};

std::unique_ptr<TermStream> make_stream(const ProductSpec& spec, Accumulation strategy) {
  switch (spec.kind) {
    case ProductKind::hyperfactorial:
      return std::make_unique<HyperfactorialTerms>();
    case ProductKind::superfactorial_k:
      require(spec.k >= 1, "superfactorial requires k >= 1");
      return std::make_unique<SuperfactorialTerms>(spec.k);
    case ProductKind::multinomial_product: {
      require(!spec.parts.empty() && spec.parts.size() >= 2, "multinomial requires >= 2 parts");
      long sum = 0;
      for (long b : spec.parts) {
        require(b >= 1, "multinomial parts must be positive");
        sum += b;
      }
      require(sum == spec.a, "multinomial parts must sum to a");
      return std::make_unique<MultinomialTerms>(spec.a, spec.parts);
    }
    case ProductKind::binomial_product:
      require(spec.a > spec.b && spec.b >= 1, "binomial requires a > b >= 1");
      return std::make_unique<BinomialTerms>(spec.a, spec.b);
    case ProductKind::central_binomial_product:
      return std::make_unique<BinomialTerms>(2, 1);
    case ProductKind::catalan_product:
      // The tree route divides the central product by (m+1)!; the naive
      // route multiplies Catalan numbers directly.
      if (strategy == Accumulation::naive) return std::make_unique<CatalanTerms>();
      return std::make_unique<BinomialTerms>(2, 1);
    default:
      throw std::invalid_argument("product kind has no term stream");
  }
}

mpz_class factorial_exact(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// Divides out (m+1)! to pass from the central-binomial product to the
// Catalan product; the division must be exact.
mpz_class divide_catalan_factor(const mpz_class& central_product, long m) {
  mpz_class divisor = factorial_exact(m + 1);
  if (mpz_divisible_p(central_product.get_mpz_t(), divisor.get_mpz_t()) == 0) {
    throw std::logic_error("catalan product: (m+1)! does not divide the central product");
  }
  mpz_class result;
  mpz_divexact(result.get_mpz_t(), central_product.get_mpz_t(), divisor.get_mpz_t());
  return result;
}

mpz_class pascal_row_integer(long n, Accumulation strategy) {
  require(n >= 0, "pascal_row_product requires n >= 0");
  std::vector<mpz_class> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  mpz_class binom;
  for (long v = 0; v <= n; ++v) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(v));
    terms.push_back(binom);
  }
  if (strategy == Accumulation::tree) return product_tree(terms);
  mpz_class acc = 1;
  for (const auto& t : terms) acc *= t;
  return acc;
}

mpz_class accumulate_stream(TermStream& stream, long count, Accumulation strategy) {
  if (strategy == Accumulation::naive) {
    mpz_class acc = 1;
    for (long i = 0; i < count; ++i) acc *= stream.next();
    return acc;
  }
  std::vector<mpz_class> terms;
  terms.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) terms.push_back(stream.next());
  return product_tree(terms);
}

ExactValue finish(mpz_class value, mpfr_prec_t precision_bits) {
  BigReal lv = log_of_integer(value, precision_bits);
  return ExactValue{std::move(value), std::move(lv)};
}

}  // namespace

std::string ProductSpec::name() const {
  std::ostringstream out;
  switch (kind) {
    case ProductKind::hyperfactorial:
      return "hyperfactorial";
    case ProductKind::superfactorial_k:
      out << "superfactorial(k=" << k << ")";
      return out.str();
    case ProductKind::multinomial_product: {
      out << "multinomial(" << a << ",[";
      for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
      out << "])";
      return out.str();
    }
    case ProductKind::binomial_product:
      out << "binomial(" << a << "," << b << ")";
      return out.str();
    case ProductKind::central_binomial_product:
      return "central_binomial";
    case ProductKind::catalan_product:
      return "catalan";
    case ProductKind::pascal_row_product:
      return "pascal_row";
    case ProductKind::scaled_row_product:
      out << "scaled_row(a=" << a << ")";
      return out.str();
  }
  return "unknown";
}

mpz_class product_tree(std::span<const mpz_class> terms, int parallel_depth) {
  return tree_impl(terms, parallel_depth);
}

BigReal log_of_integer(const mpz_class& value, mpfr_prec_t precision_bits) {
  if (value <= 0) throw std::domain_error("log_of_integer requires a positive value");
  BigReal v(value, precision_bits + kGuardBits);
  return log(v).round_to(precision_bits);
}

ExactValue eval_exact(const ProductSpec& spec, long limit, mpfr_prec_t precision_bits,
                      Accumulation strategy) {
  if (spec.kind == ProductKind::pascal_row_product) {
    return finish(pascal_row_integer(limit, strategy), precision_bits);
  }
  if (spec.kind == ProductKind::scaled_row_product) {
    throw std::invalid_argument("scaled_row_product is rational-valued; use scaled_row_product()");
  }
  require(limit >= 1, "product limit must be >= 1");
  auto stream = make_stream(spec, strategy);
  mpz_class value = accumulate_stream(*stream, limit, strategy);
  if (spec.kind == ProductKind::catalan_product && strategy == Accumulation::tree) {
    value = divide_catalan_factor(value, limit);
  }
  return finish(std::move(value), precision_bits);
}

std::vector<ExactValue> eval_exact_grid(const ProductSpec& spec, std::span<const long> grid,
                                        mpfr_prec_t precision_bits) {
  if (grid.empty()) throw std::invalid_argument("grid must not be empty");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    require(grid[i] < grid[i + 1], "grid must be strictly ascending");
  }

  std::vector<ExactValue> results;
  results.reserve(grid.size());

  if (spec.kind == ProductKind::pascal_row_product ||
      spec.kind == ProductKind::scaled_row_product) {
    // Row-indexed families change every factor with the limit; no reuse.
    for (long n : grid) {
      results.push_back(eval_exact(spec, n, precision_bits));
    }
    return results;
  }

  require(grid[0] >= 1, "product limit must be >= 1");
  auto stream = make_stream(spec, Accumulation::tree);
  mpz_class accumulator = 1;
  long done = 0;
  for (long m : grid) {
    std::vector<mpz_class> chunk;
    chunk.reserve(static_cast<std::size_t>(m - done));
    for (long i = done; i < m; ++i) chunk.push_back(stream->next());
    accumulator *= product_tree(chunk);
    done = m;
    if (spec.kind == ProductKind::catalan_product) {
      results.push_back(finish(divide_catalan_factor(accumulator, m), precision_bits));
    } else {
      results.push_back(finish(mpz_class(accumulator), precision_bits));
    }
  }
  return results;
}

ExactValue hyperfactorial(long n, mpfr_prec_t precision_bits) {
  require(n >= 1, "hyperfactorial requires n >= 1");
  return eval_exact({.kind = ProductKind::hyperfactorial}, n, precision_bits);
}

ExactValue superfactorial(long k, long n, mpfr_prec_t precision_bits) {
  require(k >= 1 && n >= 1, "superfactorial requires k, n >= 1");
  return eval_exact({.kind = ProductKind::superfactorial_k, .k = k}, n, precision_bits);
}

ExactValue multinomial_product(long a, const std::vector<long>& parts, long m,
                               mpfr_prec_t precision_bits) {
  return eval_exact({.kind = ProductKind::multinomial_product, .a = a, .parts = parts}, m,
                    precision_bits);
}

ExactValue binomial_product(long a, long b, long m, mpfr_prec_t precision_bits) {
  return eval_exact({.kind = ProductKind::binomial_product, .a = a, .b = b}, m, precision_bits);
}

ExactValue central_binomial_product(long m, mpfr_prec_t precision_bits) {
  return eval_exact({.kind = ProductKind::central_binomial_product}, m, precision_bits);
}

ExactValue catalan_product(long m, mpfr_prec_t precision_bits) {
  return eval_exact({.kind = ProductKind::catalan_product}, m, precision_bits);
}

ExactValue pascal_row_product(long n, mpfr_prec_t precision_bits) {
  return eval_exact({.kind = ProductKind::pascal_row_product}, n, precision_bits);
}

mpq_class scaled_row_product(long a, long n) {
  require(a >= 1 && n >= 1, "scaled_row_product requires a, n >= 1");
  mpz_class numerator = 1;
  mpz_class binom;
  for (long v = 1; v <= n; ++v) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a * v),
                 static_cast<unsigned long>(v));
    numerator *= binom;
  }
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), static_cast<unsigned long>(a),
                static_cast<unsigned long>(n * (n + 1) / 2));
  mpq_class result(numerator, denominator);
  result.canonicalize();
  return result;
}

std::string rational_to_string(const mpq_class& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace asymprod
