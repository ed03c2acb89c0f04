#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>

namespace scsudoku {

namespace {

constexpr double kLn10 = 2.302585092994045684;
// Decimal expansion of floors is supported up to 700 digits.
constexpr double kFloorLnLimit = 700.0 * kLn10;
// Exact big-integer evaluation is skipped past ~43k digits.
constexpr double kExactLnLimit = 1.0e5;

std::mutex table_mutex;
std::vector<double> lnfact_table{0.0, 0.0};  // lnfact_table[x] = ln x!

mpz_class mpz_from_long_double(long double v) {
  // %.0Lf prints every integer digit; v is already integral here.
  char buf[800];
  std::snprintf(buf, sizeof buf, "%.0Lf", v);
  return mpz_class(buf);
}

}  // namespace

double ln_factorial(std::int64_t x) {
  if (x < 0) fail(ErrorCode::invalid_argument, "factorial of a negative number");
  std::lock_guard<std::mutex> lock(table_mutex);
  while (static_cast<std::int64_t>(lnfact_table.size()) <= x) {
    double k = static_cast<double>(lnfact_table.size());
    lnfact_table.push_back(lnfact_table.back() + std::log(k));
  }
  return lnfact_table[static_cast<size_t>(x)];
}

double ln_of_mpz(const mpz_class& v) {
  if (v <= 0) fail(ErrorCode::invalid_argument, "ln of a non-positive integer");
  signed long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

// ---------------------------------------------------------------------------
// LogBound

LogBound LogBound::zero() {
  LogBound b;
  b.zero_ = true;
  b.ln_value_ = -std::numeric_limits<double>::infinity();
  b.exact_ = mpz_class(0);
  return b;
}

LogBound LogBound::from_exact(mpz_class value) {
  if (value < 0) fail(ErrorCode::invalid_argument, "bound value must be nonnegative");
  if (value == 0) return zero();
  LogBound b;
  b.ln_value_ = ln_of_mpz(value);
  b.exact_ = std::move(value);
  return b;
}

LogBound LogBound::from_terms(std::vector<BoundTerm> terms) {
  LogBound b;
  b.exact_.reset();
  double ln = 0.0;
  std::map<std::int64_t, mpq_class> aggregated;
  for (auto& t : terms) {
    if (t.factorial_arg < 0 || t.exp_den <= 0 || t.exp_num < 0) {
      fail(ErrorCode::invalid_argument, "malformed bound term");
    }
    ln += (static_cast<double>(t.exp_num) / static_cast<double>(t.exp_den)) *
          ln_factorial(t.factorial_arg);
    mpq_class e(t.exp_num, t.exp_den);
    e.canonicalize();
    aggregated[t.factorial_arg] += e;
  }
  b.ln_value_ = ln;
  b.terms_ = std::move(terms);

  bool integral = std::all_of(aggregated.begin(), aggregated.end(), [](const auto& kv) {
    return kv.second.get_den() == 1;
  });
  if (integral && ln <= kExactLnLimit) {
    mpz_class v = 1;
    for (const auto& [arg, e] : aggregated) {
      if (e == 0) continue;
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(arg));
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), f.get_mpz_t(), e.get_num().get_ui());
      v *= p;
    }
    b.exact_ = std::move(v);
  }
  return b;
}

double LogBound::log10() const { return ln_value_ / kLn10; }

LogBound LogBound::operator*(const LogBound& other) const {
  if (zero_ || other.zero_) return zero();
  auto is_identity = [](const LogBound& b) {
    return b.terms_.empty() && b.exact_ && *b.exact_ == 1;
  };
  if (is_identity(*this)) return other;
  if (is_identity(other)) return *this;
  if (!terms_.empty() && !other.terms_.empty()) {
    std::vector<BoundTerm> merged = terms_;
    merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
    return from_terms(std::move(merged));
  }
  LogBound b;
  b.ln_value_ = ln_value_ + other.ln_value_;
  b.exact_.reset();
  if (exact_ && other.exact_) b.exact_ = *exact_ * *other.exact_;
  return b;
}

LogBound::Floor LogBound::floor_value() const {
  if (zero_) return {mpz_class(0), true, true};
  if (exact_) return {*exact_, true, true};
  if (ln_value_ > kFloorLnLimit) {
    fail(ErrorCode::too_large, "floor not representable; use the scientific decomposition");
  }
  long double v = std::exp(static_cast<long double>(ln_value_));
  long double nearest = std::round(v);
  if (v > 1e15L) {
    // Integer digits beyond the mantissa are not trustworthy.
    return {mpz_from_long_double(std::floor(v)), false, false};
  }
  if (std::abs(v - nearest) <= 1e-6L * std::max(1.0L, v)) {
    return {mpz_from_long_double(nearest), false, false};
  }
  return {mpz_from_long_double(std::floor(v)), false, true};
}

// ---------------------------------------------------------------------------
// Theorem factors and bounds

namespace {

void check_band_args(int n, int j, int c2) {
  if (n < 1) fail(ErrorCode::invalid_argument, "n must be >= 1");
  if (j < 1 || j > n) fail(ErrorCode::invalid_argument, "j out of range 1..n");
  if (c2 < 0 || c2 > n) fail(ErrorCode::invalid_argument, "c2 out of range 0..n");
}

BoundTerm mu_term(int n, int i, int j, int c2) {
  std::int64_t arg = static_cast<std::int64_t>(n) * n - static_cast<std::int64_t>(i - 1) * n -
                     (j - 1);
  return {arg, static_cast<std::int64_t>(n) * n - static_cast<std::int64_t>(c2) * n, arg};
}

BoundTerm nu_term(int n, int j, int c2) {
  std::int64_t arg = static_cast<std::int64_t>(n) * n - static_cast<std::int64_t>(j - 1) * n;
  return {arg, static_cast<std::int64_t>(n) * n - static_cast<std::int64_t>(c2) * n, arg};
}

// The full double product of Theorem-3 shape: the first c1 row bands use
// the reduced exponent (n^2 - c2*n), the rest the plain n^2.
std::vector<BoundTerm> bound_terms(int n, int c1, int c2) {
  std::vector<BoundTerm> terms;
  for (int i = 1; i <= n; ++i) {
    int cc = i <= c1 ? c2 : 0;
    for (int j = 1; j <= i; ++j) {
      BoundTerm t = mu_term(n, i, j, cc);
      if (t.exp_num != 0) terms.push_back(t);
    }
    for (int j = i + 1; j <= n; ++j) {
      BoundTerm t = nu_term(n, j, cc);
      if (t.exp_num != 0) terms.push_back(t);
    }
  }
  return terms;
}

}  // namespace

LogBound mu(int n, int i, int j, int c2) {
  check_band_args(n, j, c2);
  if (i < 1 || i > n || j > i) fail(ErrorCode::invalid_argument, "need 1 <= j <= i <= n");
  BoundTerm t = mu_term(n, i, j, c2);
  if (t.exp_num == 0) return LogBound();
  return LogBound::from_terms({t});
}

LogBound nu(int n, int j, int c2) {
  check_band_args(n, j, c2);
  BoundTerm t = nu_term(n, j, c2);
  if (t.exp_num == 0) return LogBound();
  return LogBound::from_terms({t});
}

LogBound herzberg_bound(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "n must be >= 1");
  return LogBound::from_terms(bound_terms(n, 0, 0));
}

LogBound partly_filled_bound(const PartlyFilledSpec& spec) {
  spec.validate();
  return LogBound::from_terms(bound_terms(spec.n, spec.c1, spec.c2));
}

AsymptoticExponents asymptotic_exponents(double d1, double d2) {
  if (!(d1 >= 0.0 && d1 <= 1.0 && d2 >= 0.0 && d2 <= 1.0)) {
    fail(ErrorCode::invalid_argument, "d1 and d2 must lie in [0,1]");
  }
  double alpha = 2.0 * (1.0 - d1 * d2);
  double entropy = d1 == 1.0 ? 0.0 : (1.0 - d1) * d2 * std::log(1.0 - d1);  // 0 ln 0 = 0
  double beta = -2.5 + entropy + d1 * d2 + d1 * d1 * d2 / 2.0;
  return {alpha, beta};
}

}  // namespace scsudoku
