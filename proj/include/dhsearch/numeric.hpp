#ifndef DHSEARCH_NUMERIC_HPP
#define DHSEARCH_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace dhsearch {

using Complex = std::complex<double>;

// Kahan compensated accumulator. Summation order is the caller's
// responsibility; all enumeration loops in this project run in fixed
// history-index order so results do not depend on the thread schedule.
class KahanSum {
 public:
  void add(double value) {
    const double y = value - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KahanComplexSum {
 public:
  void add(const Complex& z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_, im_;
};

// log(exp(a) + exp(b)) without overflow; -inf operands drop out.
inline double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = a > b ? a : b;
  return m + std::log1p(std::exp(-(a > b ? a - b : b - a)));
}

// base^p for integer p >= 0; switches to exp(p*log(base)) for large p so
// classical-regime exponents (K ~ N) neither underflow early nor lose
// accuracy to repeated rounding.
inline double real_pow_int(double base, long long p) {
  if (p == 0) return 1.0;  // 0^0 == 1 by the degenerate-b convention
  if (base == 0.0) return 0.0;
  if (p > 1000) return std::exp(static_cast<double>(p) * std::log(base));
  double acc = 1.0, sq = base;
  long long e = p;
  while (e > 0) {
    if (e & 1) acc *= sq;
    sq *= sq;
    e >>= 1;
  }
  return acc;
}

// z^p for integer p >= 0 by binary exponentiation; z^0 == 1 even for z == 0.
inline Complex complex_pow_int(Complex z, long long p) {
  Complex acc{1.0, 0.0};
  while (p > 0) {
    if (p & 1) acc *= z;
    z *= z;
    p >>= 1;
  }
  return acc;
}

}  // namespace dhsearch

#endif  // DHSEARCH_NUMERIC_HPP
