#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "basel/types.hpp"

namespace basel {

namespace detail {

// 15-point Kronrod abscissae on [-1, 1], descending, non-negative half.
// Odd indices are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace detail

struct PanelEstimate {
  double value = 0.0;
  double error_estimate = 0.0;
  bool ok = true;  // false if any node evaluation was non-finite
};

inline constexpr std::size_t kPanelEvaluations = 15;

/// G7/K15 estimate of the integral of `f` over the finite panel [a, b].
///
/// The error is the scaled, damped Gauss/Kronrod discrepancy
///   resasc * min(1, (200 |K - G| / resasc)^1.5)
/// floored at 50 eps times the panel's L1 mass so that roundoff is never
/// reported as zero. All nodes are strictly interior.
template <class F>
PanelEstimate gauss_kronrod_panel(const F& f, double a, double b) {
  using detail::kGaussWeights;
  using detail::kKronrodNodes;
  using detail::kKronrodWeights;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 7> left{};
  std::array<double, 7> right{};
  const double fc = f(center);
  bool ok = std::isfinite(fc);

  double gauss = fc * kGaussWeights[3];
  double kronrod = fc * kKronrodWeights[7];
  double res_abs = std::abs(kronrod);

  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    left[j] = f(center - dx);
    right[j] = f(center + dx);
    ok = ok && std::isfinite(left[j]) && std::isfinite(right[j]);
    const double pair = left[j] + right[j];
    kronrod += kKronrodWeights[j] * pair;
    res_abs += kKronrodWeights[j] * (std::abs(left[j]) + std::abs(right[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }

  if (!ok) {
    return {std::numeric_limits<double>::quiet_NaN(), kInf, false};
  }

  const double mean = 0.5 * kronrod;
  double res_asc = kKronrodWeights[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    res_asc += kKronrodWeights[j] * (std::abs(left[j] - mean) + std::abs(right[j] - mean));
  }

  const double abs_half = std::abs(half);
  res_abs *= abs_half;
  res_asc *= abs_half;

  double err = std::abs((kronrod - gauss) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > tiny / (50.0 * eps)) {
    err = std::max(50.0 * eps * res_abs, err);
  }
  return {kronrod * half, err, true};
}

namespace detail {

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  int depth;
};

// Largest error first; ties go to the lower endpoint.
struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const noexcept {
    if (x.error != y.error) return x.error < y.error;
    return x.lo > y.lo;
  }
};

}  // namespace detail

/// Globally adaptive G7/K15 quadrature over a finite interval.
///
/// The panel with the largest error is bisected until the summed error meets
/// `tol`. Declared removable points inside the interval are always panel
/// boundaries. Panels at `max_depth` are frozen; the run stops early when
/// `max_evals` would be exceeded, when frozen panels alone carry more error
/// than the target, or when a node value is non-finite.
inline QuadResult integrate_adaptive(const Integrand& f, const Interval& iv,
                                     const Tolerance& tol = {}) {
  if (!iv.finite()) {
    throw std::invalid_argument("integrate_adaptive: interval must be finite");
  }
  tol.validate();

  std::vector<double> cuts{iv.lo()};
  for (const auto& r : f.removable_points) {
    if (iv.contains_interior(r.point)) cuts.push_back(r.point);
  }
  cuts.push_back(iv.hi());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  QuadResult result;
  if ((cuts.size() - 1) * kPanelEvaluations > tol.max_evals) {
    result.value = std::numeric_limits<double>::quiet_NaN();
    result.error_estimate = kInf;
    return result;
  }

  std::priority_queue<detail::Panel, std::vector<detail::Panel>, detail::PanelOrder> pending;
  std::vector<detail::Panel> frozen;
  double total_value = 0.0;
  double total_error = 0.0;

  auto fail = [&]() {
    result.value = std::numeric_limits<double>::quiet_NaN();
    result.error_estimate = kInf;
    result.subintervals = pending.size() + frozen.size();
    result.converged = false;
    return result;
  };

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto p = gauss_kronrod_panel(f, cuts[i], cuts[i + 1]);
    result.evaluations += kPanelEvaluations;
    if (!p.ok) return fail();
    pending.push({cuts[i], cuts[i + 1], p.value, p.error_estimate, 0});
    total_value += p.value;
    total_error += p.error_estimate;
  }

  double frozen_error = 0.0;
  while (total_error > tol.target(total_value) && !pending.empty()) {
    if (result.evaluations + 2 * kPanelEvaluations > tol.max_evals) break;
    if (frozen_error > tol.target(total_value)) break;

    const detail::Panel worst = pending.top();
    pending.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (worst.depth >= tol.max_depth || !(worst.lo < mid && mid < worst.hi)) {
      frozen.push_back(worst);
      frozen_error += worst.error;
      continue;
    }

    const auto left = gauss_kronrod_panel(f, worst.lo, mid);
    const auto right = gauss_kronrod_panel(f, mid, worst.hi);
    result.evaluations += 2 * kPanelEvaluations;
    if (!left.ok || !right.ok) return fail();

    pending.push({worst.lo, mid, left.value, left.error_estimate, worst.depth + 1});
    pending.push({mid, worst.hi, right.value, right.error_estimate, worst.depth + 1});
    total_value += left.value + right.value - worst.value;
    total_error += left.error_estimate + right.error_estimate - worst.error;
  }

  // Final sums are recomputed in interval order so the running-sum drift
  // does not leak into the result.
  std::vector<detail::Panel> panels = std::move(frozen);
  while (!pending.empty()) {
    panels.push_back(pending.top());
    pending.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const detail::Panel& x, const detail::Panel& y) { return x.lo < y.lo; });
  double value = 0.0;
  double error = 0.0;
  for (const auto& p : panels) {
    value += p.value;
    error += p.error;
  }

  result.value = value;
  result.error_estimate = error;
  result.subintervals = panels.size();
  result.converged = error <= tol.target(value);
  return result;
}

}  // namespace basel
