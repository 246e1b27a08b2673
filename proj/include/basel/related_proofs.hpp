#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "basel/constants.hpp"
#include "basel/quad2d.hpp"
#include "basel/transforms.hpp"
#include "basel/types.hpp"

namespace basel {

// Rotating the unit square by pi/4 (x = (u - v)/sqrt2, y = (u + v)/sqrt2)
// turns 1/(1 - xy) into 2/(2 - u^2 + v^2). Integrating v out in closed form
// over the two halves of the rotated square leaves the two arctan integrals
// below, and the box integral equals 4 (I1 + I2).

/// I1 = int_0^{1/sqrt2} arctan(u / sqrt(2 - u^2)) / sqrt(2 - u^2) du.
inline Integrand apostol_i1_integrand() {
  return Integrand([](double u) {
    const double root = std::sqrt((kSqrt2 - u) * (kSqrt2 + u));
    return std::atan(u / root) / root;
  });
}

/// I2 = int_{1/sqrt2}^{sqrt2} arctan((sqrt2 - u) / sqrt(2 - u^2)) / sqrt(2 - u^2) du.
/// The ratio is written as sqrt((sqrt2 - u)/(sqrt2 + u)) so nothing cancels
/// near u = sqrt2, which is declared singular.
inline Integrand apostol_i2_integrand() {
  return Integrand(
      [](double u) {
        const double gap = kSqrt2 - u;
        const double root = std::sqrt(gap * (kSqrt2 + u));
        return std::atan(std::sqrt(gap / (kSqrt2 + u))) / root;
      },
      {kSqrt2});
}

inline QuadResult apostol_i1(const Tolerance& tol = {}) {
  return improper_integrate(apostol_i1_integrand(), Interval(0.0, 1.0 / kSqrt2), tol);
}

inline QuadResult apostol_i2(const Tolerance& tol = {}) {
  return improper_integrate(apostol_i2_integrand(), Interval(1.0 / kSqrt2, kSqrt2), tol);
}

/// 1/(1 - xy) on the square [0, a]^2, a < 1 keeping (1, 1) outside.
inline Integrand2D beukers_box_integrand(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw std::invalid_argument("beukers_box_integrand: a must be in (0, 1)");
  }
  return {[](double x, double y) { return 1.0 / (1.0 - x * y); }, Interval(0.0, a),
          Interval(0.0, a)};
}

inline QuadResult beukers_box_partial(double a, const Tolerance& tol = {}) {
  return integrate_iterated(beukers_box_integrand(a), {Axis::X}, tol);
}

struct JacobianCheck {
  double analytic = 0.0;
  double numeric = 0.0;
};

/// x = sin u / cos v, y = sin v / cos u. The analytic Jacobian determinant
/// is 1 - x^2 y^2; the numeric one uses central differences with step 1e-6.
inline JacobianCheck bck_jacobian_check(double u, double v) {
  if (!(u > 0.0 && v > 0.0 && u + v < 0.5 * kPi)) {
    throw std::invalid_argument("bck_jacobian_check: need u, v > 0 and u + v < pi/2");
  }
  auto map_x = [](double s, double t) { return std::sin(s) / std::cos(t); };
  auto map_y = [](double s, double t) { return std::sin(t) / std::cos(s); };

  constexpr double step = 1e-6;
  const double dx_du = (map_x(u + step, v) - map_x(u - step, v)) / (2.0 * step);
  const double dx_dv = (map_x(u, v + step) - map_x(u, v - step)) / (2.0 * step);
  const double dy_du = (map_y(u + step, v) - map_y(u - step, v)) / (2.0 * step);
  const double dy_dv = (map_y(u, v + step) - map_y(u, v - step)) / (2.0 * step);

  const double x = map_x(u, v);
  const double y = map_y(u, v);
  return {1.0 - x * x * y * y, dx_du * dy_dv - dx_dv * dy_du};
}

struct InequalityCheck {
  double parameter = 0.0;
  double lower = 0.0;
  double middle = 0.0;  // partial sum of the series
  double upper = 0.0;
  bool strict = false;  // lower < middle < upper as computed
  double middle_tail_bound = 0.0;
  bool certified = false;  // strict ordering survives tail and rounding bounds
};

/// 2 arctan(a / (1 + sqrt(1 - a^2)))^2 < sum_n a^{4n+2}/(2n+1)^2 < 2 arctan(a)^2.
///
/// The series is cut after `terms` terms; its tail is majorized by the
/// geometric series a^{4N+2}/((2N+1)^2 (1 - a^4)). The check is certified
/// when the lower bound sits below the partial sum and the upper bound
/// above partial sum plus tail, both with rounding margins. Otherwise the
/// ordering is indeterminate at this N.
inline InequalityCheck hirschhorn_check(double a, std::size_t terms) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("hirschhorn_check: a must be in (0, 1)");
  if (terms == 0) throw std::invalid_argument("hirschhorn_check: N must be >= 1");
  constexpr double eps = std::numeric_limits<double>::epsilon();

  const double a2 = a * a;
  const double a4 = a2 * a2;
  double power = a2;
  double partial = 0.0;
  for (std::size_t n = 0; n < terms; ++n) {
    const double odd = 2.0 * static_cast<double>(n) + 1.0;
    partial += power / (odd * odd);
    power *= a4;
  }
  const double last_odd = 2.0 * static_cast<double>(terms) + 1.0;
  const double tail = power / (last_odd * last_odd * (1.0 - a4));

  const double half_angle = std::atan(a / (1.0 + std::sqrt(1.0 - a2)));
  const double lower = 2.0 * half_angle * half_angle;
  const double arctan_a = std::atan(a);
  const double upper = 2.0 * arctan_a * arctan_a;

  // Each power picks up one rounding per step, hence the 4 N margin.
  const double count = static_cast<double>(terms);
  const double partial_margin = 4.0 * (count + 2.0) * eps * partial;
  const double bound_margin = 8.0 * eps;

  InequalityCheck check;
  check.parameter = a;
  check.lower = lower;
  check.middle = partial;
  check.upper = upper;
  check.strict = lower < partial && partial < upper;
  check.middle_tail_bound = tail;
  check.certified = lower * (1.0 + bound_margin) < partial - partial_margin &&
                    partial + partial_margin + tail * (1.0 + bound_margin) <
                        upper * (1.0 - bound_margin);
  return check;
}

/// x / ((1 + x^2)(1 + x^2 y^2)) on (0, inf) x (0, 1). Integrating out x
/// gives -ln y / (1 - y^2), log-singular at y = 0.
inline Integrand2D harper_integrand() {
  return {[](double x, double y) {
            const double x2 = x * x;
            return x / ((1.0 + x2) * (1.0 + x2 * y * y));
          },
          Interval(0.0, kInf), Interval(0.0, 1.0), {}, {0.0}};
}

inline FubiniCheck harper_integral_check(const Tolerance& tol = {}) {
  return fubini_check(harper_integrand(), tol);
}

}  // namespace basel
