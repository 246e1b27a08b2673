#pragma once

#include <cmath>
#include <limits>

namespace basel {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2: about 106 significant
/// bits. Each operation below has relative error of a few eps^2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h) {}  // NOLINT: implicit by design
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

/// Relative error scale of one double-double operation.
inline constexpr double kDoubleDoubleEps =
    std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon();

namespace detail {

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

}  // namespace detail

inline DoubleDouble operator-(DoubleDouble x) { return {-x.hi, -x.lo}; }

inline DoubleDouble operator+(DoubleDouble x, DoubleDouble y) {
  DoubleDouble s = detail::two_sum(x.hi, y.hi);
  const DoubleDouble t = detail::two_sum(x.lo, y.lo);
  s.lo += t.hi;
  s = detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(DoubleDouble x, DoubleDouble y) { return x + (-y); }

inline DoubleDouble operator*(DoubleDouble x, DoubleDouble y) {
  const double p = x.hi * y.hi;
  const double e = std::fma(x.hi, y.hi, -p);
  return detail::quick_two_sum(p, e + (x.hi * y.lo + x.lo * y.hi));
}

inline DoubleDouble operator/(DoubleDouble x, DoubleDouble y) {
  const double q1 = x.hi / y.hi;
  DoubleDouble r = x - y * DoubleDouble(q1);
  const double q2 = r.hi / y.hi;
  r = r - y * DoubleDouble(q2);
  const double q3 = r.hi / y.hi;
  return detail::quick_two_sum(q1, q2) + DoubleDouble(q3);
}

inline bool operator<(DoubleDouble x, DoubleDouble y) {
  return x.hi < y.hi || (x.hi == y.hi && x.lo < y.lo);
}

/// pi to about 32 digits.
inline constexpr DoubleDouble kPiDD{3.141592653589793116e+00, 1.224646799147353207e-16};

inline DoubleDouble pi_squared_dd() { return kPiDD * kPiDD; }

}  // namespace basel
