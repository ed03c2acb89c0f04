#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grid.hpp"

namespace scsudoku {

// ln x!, accumulated as an exact sum of ln k over a cached table. Thread-safe.
double ln_factorial(std::int64_t x);

// One factor x!^(num/den) of a bound product.
struct BoundTerm {
  std::int64_t factorial_arg;
  std::int64_t exp_num;
  std::int64_t exp_den;
};

// A bound value carried in natural-log domain. When the product of terms
// collapses to an integer (all aggregated exponents integral), the exact
// big-integer value is attached as well and takes precedence for floors.
class LogBound {
 public:
  LogBound() : exact_(1) {}  // multiplicative identity

  static LogBound zero();
  static LogBound from_terms(std::vector<BoundTerm> terms);
  static LogBound from_exact(mpz_class value);

  double ln() const { return ln_value_; }
  double log10() const;
  bool is_zero() const { return zero_; }
  const std::optional<mpz_class>& exact() const { return exact_; }
  const std::vector<BoundTerm>& terms() const { return terms_; }

  LogBound operator*(const LogBound& other) const;

  struct Floor {
    mpz_class value;
    bool from_exact;  // taken from the exact field, no rounding involved
    bool confident;   // false when the value sits too close to an integer
                      // or beyond the reliable mantissa range
  };
  // Floor of the bound. Throws too_large beyond exp(700 ln 10) unless the
  // exact field is present.
  Floor floor_value() const;

 private:
  double ln_value_ = 0.0;
  bool zero_ = false;
  std::optional<mpz_class> exact_;
  std::vector<BoundTerm> terms_;
};

// Row-band factors of the partly filled bound; c2 = 0 gives the factors of
// the plain bound. 1-based i, j as in the defining products.
LogBound mu(int n, int i, int j, int c2);
LogBound nu(int n, int j, int c2);

// Upper bound for the number of solutions to an empty n x n Sudoku
// (Herzberg & Murty's permanent-based row-by-row bound).
LogBound herzberg_bound(int n);

// Upper bound for an (n;c1,c2) partly filled Sudoku; (n,0,0) coincides
// with herzberg_bound(n).
LogBound partly_filled_bound(const PartlyFilledSpec& spec);

// Leading exponents of the bound for large n with c1 = d1*n, c2 = d2*n:
// ln S_U ~ alpha*n^4*ln n + beta*n^4.
struct AsymptoticExponents {
  double alpha;
  double beta;
};

AsymptoticExponents asymptotic_exponents(double d1, double d2);

// ln of a nonnegative big integer, exact to double precision for any size.
double ln_of_mpz(const mpz_class& v);

}  // namespace scsudoku
