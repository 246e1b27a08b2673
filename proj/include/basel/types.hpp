#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace basel {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Integration domain on the extended real line. Only the endpoints may be
/// infinite; lo < hi always holds.
class Interval {
 public:
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi) || !(lo < hi) || lo == kInf ||
        hi == -kInf) {
      throw std::invalid_argument("Interval: requires lo < hi, got [" +
                                  std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
    }
  }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  bool lower_infinite() const noexcept { return std::isinf(lo_); }
  bool upper_infinite() const noexcept { return std::isinf(hi_); }
  bool finite() const noexcept { return !lower_infinite() && !upper_infinite(); }

  double length() const noexcept { return hi_ - lo_; }

  bool contains_interior(double x) const noexcept { return lo_ < x && x < hi_; }
  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

struct RemovablePoint {
  double point;
  double limit;
};

/// A real integrand plus the points where its formula cannot be evaluated.
///
/// Singular points are integrable singularities (log, algebraic); calling
/// the integrand there yields NaN without touching `eval`. Removable points
/// are served from their stored limit value.
struct Integrand {
  std::function<double(double)> eval;
  std::vector<double> singular_points;
  std::vector<RemovablePoint> removable_points;

  Integrand() = default;

  // NOLINTNEXTLINE(google-explicit-constructor)
  Integrand(std::function<double(double)> f,
            std::vector<double> singular = {},
            std::vector<RemovablePoint> removable = {})
      : eval(std::move(f)),
        singular_points(std::move(singular)),
        removable_points(std::move(removable)) {}

  bool is_singular(double x) const noexcept {
    return std::find(singular_points.begin(), singular_points.end(), x) !=
           singular_points.end();
  }

  double operator()(double x) const {
    for (const auto& r : removable_points) {
      if (r.point == x) return r.limit;
    }
    if (is_singular(x)) return std::numeric_limits<double>::quiet_NaN();
    return eval(x);
  }
};

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_evals = 1'000'000;
  int max_depth = 60;

  /// Acceptable error for an integral of the given magnitude.
  double target(double value) const noexcept {
    return std::max(abs_tol, rel_tol * std::abs(value));
  }

  /// Same budget, tolerances scaled by `factor`.
  Tolerance scaled(double factor) const noexcept {
    Tolerance t = *this;
    t.abs_tol *= factor;
    t.rel_tol *= factor;
    return t;
  }

  void validate() const {
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
      throw std::invalid_argument("Tolerance: abs_tol and rel_tol must be >= 0");
    }
    if (abs_tol == 0.0 && rel_tol == 0.0) {
      throw std::invalid_argument("Tolerance: abs_tol and rel_tol both zero");
    }
    if (max_evals == 0 || max_depth <= 0) {
      throw std::invalid_argument("Tolerance: budgets must be positive");
    }
  }
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  std::size_t subintervals = 0;
  bool converged = false;
};

}  // namespace basel
