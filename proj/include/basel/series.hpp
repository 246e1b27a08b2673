#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "basel/double_double.hpp"
#include "basel/transforms.hpp"
#include "basel/types.hpp"

namespace basel {

/// Partial sum of a positive series together with a proven bound on the
/// omitted tail and a bound on the rounding error of the sum itself.
///
/// The sum and the tail bound are held in double-double: the *_low fields
/// carry the words below partial_sum and tail_bound. rounding_bound covers the distance from
/// partial_sum + partial_sum_low to the exact partial sum.
struct SeriesResult {
  double partial_sum = 0.0;
  std::size_t terms_used = 0;
  double tail_bound = 0.0;
  double rounding_bound = 0.0;
  double partial_sum_low = 0.0;
  double tail_bound_low = 0.0;

  DoubleDouble sum() const { return {partial_sum, partial_sum_low}; }

  /// True when `limit` is certified to lie strictly inside
  /// (S, S + tail_bound), S the exact partial sum. Decided in double-double,
  /// with every rounding in the comparison charged against the margins.
  bool brackets(DoubleDouble limit) const {
    const DoubleDouble s = sum();
    const DoubleDouble tail(tail_bound, tail_bound_low);
    const double slack = rounding_bound + 8.0 * kDoubleDoubleEps * (std::abs(limit.hi) + tail.hi);
    const DoubleDouble below = limit - s;
    const DoubleDouble above = s + tail - limit;
    return DoubleDouble(slack) < below && DoubleDouble(slack) < above;
  }
  bool brackets(double limit) const { return brackets(DoubleDouble(limit)); }
};

/// Integrand -x^{2n} ln x on [0, 1]; 0 is declared singular.
inline Integrand term_integrand(unsigned n) {
  return Integrand([n](double x) { return -std::pow(x, 2.0 * n) * std::log(x); }, {0.0});
}

/// Quadrature of the integral of -x^{2n} ln x over [0, 1], whose exact
/// value is 1/(2n+1)^2.
inline QuadResult term_integral(unsigned n, const Tolerance& tol = {}) {
  return improper_integrate(term_integrand(n), Interval(0.0, 1.0), tol);
}

/// Integrand -x^{2N} ln x / (1 - x^2) on [0, 1]: what remains of
/// -ln x / (1 - x^2) after the first N geometric terms. Limit 1/2 at x = 1.
inline Integrand geometric_remainder_integrand(unsigned terms) {
  return Integrand(
      [terms](double x) {
        return std::pow(x, 2.0 * terms) * std::log(x) / ((x - 1.0) * (x + 1.0));
      },
      {0.0}, {{1.0, 0.5}});
}


/// sum_{n=0}^{N-1} 1/(2n+1)^2, accumulated in ascending n.
///
/// Tail: 1/(2n+1)^2 < 1/((2n)(2n+2)) = (1/n - 1/(n+1))/4, which telescopes
/// from n = N to 1/(4N). The true tail is 1/(4N) - 1/(48 N^3) + ..., so the
/// upper side of the bracket has almost no room. Terms and the running sum
/// are therefore kept in double-double; a binary64 sum would carry
/// rounding of order N eps, far more than the margin.
inline SeriesResult odd_square_partial_sum(std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("odd_square_partial_sum: N must be >= 1");
  DoubleDouble sum;
  for (std::size_t n = 0; n < terms; ++n) {
    const DoubleDouble odd(2.0 * static_cast<double>(n) + 1.0);
    sum = sum + DoubleDouble(1.0) / (odd * odd);
  }
  const double count = static_cast<double>(terms);
  SeriesResult r;
  r.partial_sum = sum.hi;
  r.partial_sum_low = sum.lo;
  r.terms_used = terms;
  const DoubleDouble tail = DoubleDouble(1.0) / DoubleDouble(4.0 * count);
  r.tail_bound = tail.hi;
  r.tail_bound_low = tail.lo;
  // A few eps^2 per term for the quotient and the addition.
  r.rounding_bound = 16.0 * kDoubleDoubleEps * (count + 1.0) * sum.hi;
  return r;
}

/// |1/(1 - x^2) - sum_{n<N} x^{2n}| for 0 < x < 1.
///
/// Both quantities are formed in double-double arithmetic; in binary64 the
/// subtraction would cancel away most of the residual x^{2N}/(1 - x^2).
/// The absolute accuracy is a few eps^2/(1 - x^2).
inline double geometric_truncation_residual(double x, std::size_t terms) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::invalid_argument("geometric_truncation_residual: x must be in (0, 1)");
  }
  if (terms == 0) throw std::invalid_argument("geometric_truncation_residual: N must be >= 1");

  const double x2_hi = x * x;
  const DoubleDouble x2{x2_hi, std::fma(x, x, -x2_hi)};
  const DoubleDouble one{1.0, 0.0};
  const DoubleDouble geometric = one / (one - x2);

  DoubleDouble partial{0.0, 0.0};
  DoubleDouble power = one;
  for (std::size_t n = 0; n < terms; ++n) {
    partial = partial + power;
    power = power * x2;
  }
  return std::abs((geometric - partial).to_double());
}

/// sum 1/n^2 = sum_odd + (1/4) sum 1/n^2, hence zeta(2) = (4/3) sum_odd.
inline double zeta2_from_odd(double odd_sum) {
  if (!(odd_sum > 0.0)) throw std::invalid_argument("zeta2_from_odd: odd_sum must be > 0");
  return odd_sum * 4.0 / 3.0;
}

}  // namespace basel
