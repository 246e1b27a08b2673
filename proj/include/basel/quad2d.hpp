#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "basel/transforms.hpp"
#include "basel/types.hpp"

namespace basel {

/// Integrand on a product of two intervals.
///
/// The singular point lists are per axis: a point listed for x may be
/// singular both for the x-slices and for the marginal obtained by
/// integrating out y (and vice versa). Singularities are never detected
/// automatically.
struct Integrand2D {
  std::function<double(double, double)> eval;
  Interval x_domain;
  Interval y_domain;
  std::vector<double> x_singular_points{};
  std::vector<double> y_singular_points{};
};

enum class Axis { X, Y };

/// Which axis is integrated first.
struct IterationOrder {
  Axis inner_axis = Axis::X;
};

/// One inner integral with the outer variable held at `at`.
inline QuadResult integrate_slice(const Integrand2D& f, Axis inner, double at,
                                  const Tolerance& tol) {
  if (inner == Axis::X) {
    Integrand slice([&eval = f.eval, at](double x) { return eval(x, at); }, f.x_singular_points);
    return improper_integrate(slice, f.x_domain, tol);
  }
  Integrand slice([&eval = f.eval, at](double y) { return eval(at, y); }, f.y_singular_points);
  return improper_integrate(slice, f.y_domain, tol);
}

inline constexpr double kMinInnerRelTol = 1e-13;

/// Iterated integral in the given order.
///
/// Inner integrals run at 1/100 of the requested tolerance, but never at a
/// relative tolerance below kMinInnerRelTol, which is about as tight as a
/// binary64 error estimate can certify. On a finite
/// outer domain the propagated inner error is the outer measure times the
/// largest inner estimate. On an infinite outer domain an absolute inner
/// tolerance has no finite weight, so inner slices run relative-only and
/// the propagated error is the largest relative inner estimate times
/// |value|; this is a bound only for one-signed slices. The first inner
/// failure poisons the outer integrand with NaN, which ends the outer run.
inline QuadResult integrate_iterated(const Integrand2D& f, IterationOrder order,
                                     const Tolerance& tol = {}) {
  tol.validate();
  const Axis inner = order.inner_axis;
  const Interval& outer_domain = inner == Axis::X ? f.y_domain : f.x_domain;
  const auto& outer_singular = inner == Axis::X ? f.y_singular_points : f.x_singular_points;
  Tolerance inner_tol = tol.scaled(1e-2);
  if (inner_tol.rel_tol > 0.0) inner_tol.rel_tol = std::max(inner_tol.rel_tol, kMinInnerRelTol);
  if (!outer_domain.finite()) inner_tol.abs_tol = 0.0;

  std::size_t inner_evaluations = 0;
  double max_inner_error = 0.0;
  double max_inner_relative = 0.0;
  bool inner_failed = false;

  Integrand marginal(
      [&](double at) {
        if (inner_failed) return std::numeric_limits<double>::quiet_NaN();
        const QuadResult r = integrate_slice(f, inner, at, inner_tol);
        inner_evaluations += r.evaluations;
        if (!r.converged) {
          inner_failed = true;
          return std::numeric_limits<double>::quiet_NaN();
        }
        max_inner_error = std::max(max_inner_error, r.error_estimate);
        if (r.value != 0.0) {
          max_inner_relative = std::max(max_inner_relative, r.error_estimate / std::abs(r.value));
        }
        return r.value;
      },
      outer_singular);

  QuadResult outer = improper_integrate(marginal, outer_domain, tol);

  QuadResult result;
  result.value = outer.value;
  result.evaluations = inner_evaluations;
  result.subintervals = outer.subintervals;
  if (inner_failed || !outer.converged) {
    result.error_estimate = inner_failed ? kInf : outer.error_estimate;
    result.converged = false;
    return result;
  }

  const double propagated = outer_domain.finite()
                                ? outer_domain.length() * max_inner_error
                                : max_inner_relative * std::abs(outer.value);
  result.error_estimate = outer.error_estimate + propagated;
  result.converged = result.error_estimate <= tol.target(result.value);
  return result;
}

struct FubiniCheck {
  QuadResult inner_x;
  QuadResult inner_y;
  bool agree = false;
};

/// Both iteration orders, computed independently. They agree when
/// |v1 - v2| <= e1 + e2 + abs_tol and both converged.
inline FubiniCheck fubini_check(const Integrand2D& f, const Tolerance& tol = {}) {
  FubiniCheck check;
  check.inner_x = integrate_iterated(f, {Axis::X}, tol);
  check.inner_y = integrate_iterated(f, {Axis::Y}, tol);
  check.agree = check.inner_x.converged && check.inner_y.converged &&
                std::abs(check.inner_x.value - check.inner_y.value) <=
                    check.inner_x.error_estimate + check.inner_y.error_estimate + tol.abs_tol;
  return check;
}

}  // namespace basel
