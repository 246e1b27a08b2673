#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "basel/constants.hpp"
#include "basel/types.hpp"

namespace basel {

namespace detail {

// Hard limit on how close a node may get to an endpoint, as a fraction of
// the half width. In practice the per-side trimming below stops far
// earlier.
inline constexpr double kTanhSinhMinComplement = 1e-300;

inline constexpr int kTanhSinhMaxLevel = 12;
inline constexpr int kTanhSinhMinLevel = 3;

// Largest t whose endpoint distance stays above kTanhSinhMinComplement.
inline double tanh_sinh_t_max() {
  // complement = 2q/(1+q) with q = exp(-pi sinh t)
  const double s = -std::log(0.5 * kTanhSinhMinComplement) / kPi;
  return std::asinh(s);
}

struct TanhSinhNode {
  double complement;  // distance to the endpoint over the half width
  double weight;      // dx/dt over the half width
};

inline TanhSinhNode tanh_sinh_node(double t) {
  const double q = std::exp(-kPi * std::sinh(t));
  return {2.0 * q / (1.0 + q), 0.5 * kPi * std::cosh(t) * 4.0 * q / ((1.0 + q) * (1.0 + q))};
}

}  // namespace detail

/// Tanh-sinh (double exponential) quadrature over a finite interval.
///
/// Nodes are generated from their distance to the nearer endpoint, so
/// points close to an end are placed without cancellation. At the coarsest
/// level each side is walked outward in unit steps of t until a term is
/// negligible against the L1 mass gathered so far; that t bounds the side
/// for every finer level. The step is then halved until two successive
/// levels agree to `tol`. The error estimate is the last level difference,
/// floored at 64 eps times the discrete L1 mass.
///
/// Next to a declared singular endpoint b != 0 the node b - d cannot be
/// represented once d nears ulp(b), and a rounded node misplaces a steep
/// integrand badly. Nodes stop where rounding would move them by more than
/// d/1000; the mass left beyond, estimated as 4 d |f| at the last node
/// (enough for singularities up to (b - x)^{-3/4}), is added to the error.
inline QuadResult integrate_tanh_sinh(const Integrand& f, const Interval& iv,
                                      const Tolerance& tol = {}) {
  if (!iv.finite()) {
    throw std::invalid_argument("integrate_tanh_sinh: interval must be finite");
  }
  tol.validate();

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double a = iv.lo();
  const double b = iv.hi();
  const double half = 0.5 * (b - a);
  const double center = a + half;
  const double t_max = detail::tanh_sinh_t_max();
  const int max_level = std::min(detail::kTanhSinhMaxLevel, tol.max_depth);

  QuadResult result;
  result.subintervals = 1;
  bool failed = false;
  double sum = 0.0;
  double l1 = 0.0;

  // Sides 0 (left) and 1 (right).
  const bool guarded[2] = {a != 0.0 && f.is_singular(a), b != 0.0 && f.is_singular(b)};
  auto placeable = [&](double t, int side) {
    const double d = half * detail::tanh_sinh_node(t).complement;
    const double x = side == 0 ? a + d : b - d;
    if (!(a < x && x < b)) return false;
    if (!guarded[side]) return true;
    const double moved = side == 0 ? x - a : b - x;
    return std::abs(moved - d) <= 1e-3 * d;
  };
  bool walled[2] = {false, false};
  double last_t[2] = {0.0, 0.0};
  double last_mass[2] = {0.0, 0.0};

  // Adds the node at parameter t on the given side. Returns the absolute
  // term, or -1 when the node cannot be placed or f is not finite there.
  auto add_node = [&](double t, int side) -> double {
    if (!placeable(t, side)) return -1.0;
    const auto node = detail::tanh_sinh_node(t);
    const double d = half * node.complement;
    const double y = f(side == 0 ? a + d : b - d);
    ++result.evaluations;
    if (!std::isfinite(y)) {
      failed = true;
      return -1.0;
    }
    const double term = half * node.weight * y;
    sum += term;
    l1 += std::abs(term);
    if (t > last_t[side]) {
      last_t[side] = t;
      last_mass[side] = d * std::abs(y);
    }
    return std::abs(term);
  };

  // Level 0: h = 1.
  {
    const double fc = f(center);
    ++result.evaluations;
    if (!std::isfinite(fc)) failed = true;
    sum = half * 0.5 * kPi * fc;
    l1 = std::abs(sum);
  }
  double t_side[2] = {0.0, 0.0};
  for (int side = 0; side < 2 && !failed; ++side) {
    for (double t = 1.0; t <= t_max; t += 1.0) {
      if (guarded[side] && !placeable(t, side)) {
        // Move the side bound up to the last placeable t.
        double lo = t - 1.0;
        double hi = t;
        for (int i = 0; i < 40; ++i) {
          const double mid = 0.5 * (lo + hi);
          (placeable(mid, side) ? lo : hi) = mid;
        }
        t_side[side] = lo;
        walled[side] = true;
        break;
      }
      const double term = add_node(t, side);
      if (failed || term < 0.0) break;
      t_side[side] = t;
      if (term <= eps * l1) break;
    }
  }

  double h = 1.0;
  double estimate = sum;
  double error = kInf;
  int level = 0;

  auto level_cost = [&](double step) {
    return static_cast<std::size_t>((t_side[0] + t_side[1]) / (2.0 * step)) + 2;
  };

  while (!failed && level < max_level) {
    const double next_h = 0.5 * h;
    if (result.evaluations + level_cost(next_h) > tol.max_evals) break;

    for (int side = 0; side < 2 && !failed; ++side) {
      for (std::size_t k = 1;; k += 2) {
        const double t = static_cast<double>(k) * next_h;
        if (t > t_side[side]) break;
        if (add_node(t, side) < 0.0 && failed) break;
      }
    }
    if (failed) break;

    h = next_h;
    ++level;
    const double previous = estimate;
    estimate = h * sum;
    error = std::max(std::abs(estimate - previous), 64.0 * eps * h * l1);
    for (int side = 0; side < 2; ++side) {
      if (walled[side]) error += 4.0 * last_mass[side];
    }
    if (level >= detail::kTanhSinhMinLevel && error <= tol.target(estimate)) break;
  }

  if (failed) {
    result.value = std::numeric_limits<double>::quiet_NaN();
    result.error_estimate = kInf;
    result.converged = false;
    return result;
  }

  result.value = estimate;
  result.error_estimate = error;
  result.converged = error <= tol.target(estimate);
  return result;
}

}  // namespace basel
