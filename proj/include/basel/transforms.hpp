#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "basel/quad1d.hpp"
#include "basel/types.hpp"

namespace basel {

/// A strictly monotone change of variable x = forward(u), u in `source`,
/// mapping onto `image`. `inverse` is used only to carry singular and
/// removable point metadata across.
struct Substitution {
  std::string name;
  std::function<double(double)> forward;
  std::function<double(double)> jacobian;
  std::function<double(double)> inverse;
  Interval source;
  Interval image;

  bool increasing() const {
    double probe = 0.0;
    if (source.finite()) {
      probe = 0.5 * (source.lo() + source.hi());
    } else if (!source.lower_infinite()) {
      probe = source.lo() + 1.0;
    } else if (!source.upper_infinite()) {
      probe = source.hi() - 1.0;
    }
    return jacobian(probe) > 0.0;
  }
};

namespace detail {

inline std::vector<Substitution> make_substitution_table() {
  std::vector<Substitution> table;
  table.push_back({"identity",
                   [](double u) { return u; },
                   [](double) { return 1.0; },
                   [](double x) { return x; },
                   Interval(-kInf, kInf),
                   Interval(-kInf, kInf)});
  table.push_back({"square",
                   [](double u) { return u * u; },
                   [](double u) { return 2.0 * u; },
                   [](double x) { return std::sqrt(x); },
                   Interval(0.0, kInf),
                   Interval(0.0, kInf)});
  table.push_back({"reciprocal",
                   [](double u) { return 1.0 / u; },
                   [](double u) { return -1.0 / (u * u); },
                   [](double x) { return 1.0 / x; },
                   Interval(0.0, 1.0),
                   Interval(1.0, kInf)});
  // t/(1 - t) written in s = 1 - t, so that infinity sits at s = 0 (see
  // compactify below).
  table.push_back({"compactify",
                   [](double s) { return (1.0 - s) / s; },
                   [](double s) { return -1.0 / (s * s); },
                   [](double x) { return 1.0 / (1.0 + x); },
                   Interval(0.0, 1.0),
                   Interval(0.0, kInf)});
  return table;
}

}  // namespace detail

/// Registered substitutions, in a fixed order.
inline std::span<const Substitution> registered_substitutions() {
  static const std::vector<Substitution> table = detail::make_substitution_table();
  return table;
}

inline const Substitution& find_substitution(std::string_view name) {
  for (const auto& s : registered_substitutions()) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("unknown substitution: " + std::string(name));
}

/// g(u) = f(forward(u)) |jacobian(u)|, so that the integral of g over
/// s.source equals the integral of f over s.image.
inline Integrand apply_substitution(const Substitution& s, const Integrand& f) {
  Integrand g;
  g.eval = [forward = s.forward, jacobian = s.jacobian, f](double u) {
    return f(forward(u)) * std::abs(jacobian(u));
  };

  for (double x : f.singular_points) {
    if (s.image.contains(x) && std::isfinite(x)) g.singular_points.push_back(s.inverse(x));
  }
  for (const auto& r : f.removable_points) {
    if (!s.image.contains(r.point)) continue;
    const double u = s.inverse(r.point);
    g.removable_points.push_back({u, r.limit * std::abs(s.jacobian(u))});
  }

  // A finite source endpoint that maps to an infinite image endpoint is
  // where the Jacobian blows up.
  const bool up = s.increasing();
  const double to_lo = up ? s.source.lo() : s.source.hi();
  const double to_hi = up ? s.source.hi() : s.source.lo();
  if (s.image.lower_infinite() && std::isfinite(to_lo)) g.singular_points.push_back(to_lo);
  if (s.image.upper_infinite() && std::isfinite(to_hi)) g.singular_points.push_back(to_hi);

  std::sort(g.singular_points.begin(), g.singular_points.end());
  g.singular_points.erase(std::unique(g.singular_points.begin(), g.singular_points.end()),
                          g.singular_points.end());
  return g;
}

/// Maps an interval with infinite endpoint(s) onto [0, 1].
///
/// [a, inf) uses x = a + (1 - s)/s, which is t/(1 - t) with t = 1 - s; the
/// point at infinity lands on s = 0, where binary64 resolves nodes to full
/// relative precision. (-inf, b] is the mirror image. The whole line is
/// split at 0 and both halves are folded onto the same s. s = 0 is marked
/// singular. The Jacobian 1/s^2 is applied as two divisions so that an
/// underflowing s^2 cannot turn a vanishing tail value into 0/0.
inline std::pair<Integrand, Interval> compactify(const Integrand& f, const Interval& iv) {
  if (iv.finite()) {
    throw std::invalid_argument("compactify: interval has no infinite endpoint");
  }
  Integrand g;
  g.singular_points.push_back(0.0);

  auto add_metadata = [&](auto to_s) {
    for (double x : f.singular_points) {
      if (!iv.contains(x)) continue;
      const double s = to_s(x);
      if (s > 0.0) g.singular_points.push_back(s);
    }
    for (const auto& r : f.removable_points) {
      if (!iv.contains(r.point)) continue;
      const double s = to_s(r.point);
      if (s > 0.0) g.removable_points.push_back({s, r.limit / (s * s)});
    }
  };

  if (iv.lower_infinite() && iv.upper_infinite()) {
    g.eval = [f](double s) {
      const double w = (1.0 - s) / s;
      return (f(w) + f(-w)) / s / s;
    };
    add_metadata([](double x) { return 1.0 / (1.0 + std::abs(x)); });
  } else if (iv.upper_infinite()) {
    const double a = iv.lo();
    g.eval = [f, a](double s) { return f(a + (1.0 - s) / s) / s / s; };
    add_metadata([a](double x) { return 1.0 / (1.0 + (x - a)); });
  } else {
    const double b = iv.hi();
    g.eval = [f, b](double s) { return f(b - (1.0 - s) / s) / s / s; };
    add_metadata([b](double x) { return 1.0 / (1.0 + (b - x)); });
  }

  std::sort(g.singular_points.begin(), g.singular_points.end());
  g.singular_points.erase(std::unique(g.singular_points.begin(), g.singular_points.end()),
                          g.singular_points.end());
  return {std::move(g), Interval(0.0, 1.0)};
}

namespace detail {

inline void accumulate(QuadResult& total, const QuadResult& piece) {
  total.value += piece.value;
  total.error_estimate += piece.error_estimate;
  total.evaluations += piece.evaluations;
  total.subintervals += piece.subintervals;
  total.converged = total.converged && piece.converged;
}

// Finite piece: tanh-sinh when an endpoint is singular, G7/K15 otherwise.
inline QuadResult integrate_finite_piece(const Integrand& f, const Interval& iv,
                                         const Tolerance& tol) {
  if (f.is_singular(iv.lo()) || f.is_singular(iv.hi())) {
    return integrate_tanh_sinh(f, iv, tol);
  }
  return integrate_adaptive(f, iv, tol);
}

}  // namespace detail

/// Integral of `f` over any interval.
///
/// The interval is cut at interior singular and removable points, at 0 when
/// both ends are infinite, and one unit in from every finite endpoint of an
/// infinite piece. Infinite pieces are compactified. The absolute tolerance
/// is shared equally between pieces; converged only if every piece is.
inline QuadResult improper_integrate(const Integrand& f, const Interval& iv,
                                     const Tolerance& tol = {}) {
  tol.validate();

  std::vector<double> cuts;
  for (double x : f.singular_points) {
    if (iv.contains_interior(x)) cuts.push_back(x);
  }
  for (const auto& r : f.removable_points) {
    if (iv.contains_interior(r.point)) cuts.push_back(r.point);
  }
  if (iv.lower_infinite() && iv.upper_infinite() && cuts.empty()) cuts.push_back(0.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  if (!cuts.empty()) {
    if (iv.lower_infinite()) cuts.insert(cuts.begin(), cuts.front() - 1.0);
    if (iv.upper_infinite()) cuts.push_back(cuts.back() + 1.0);
  } else if (iv.lower_infinite()) {
    cuts.push_back(iv.hi() - 1.0);
  } else if (iv.upper_infinite()) {
    cuts.push_back(iv.lo() + 1.0);
  }

  std::vector<double> bounds;
  bounds.reserve(cuts.size() + 2);
  bounds.push_back(iv.lo());
  bounds.insert(bounds.end(), cuts.begin(), cuts.end());
  bounds.push_back(iv.hi());

  const std::size_t pieces = bounds.size() - 1;
  Tolerance piece_tol = tol;
  piece_tol.abs_tol = tol.abs_tol / static_cast<double>(pieces);

  QuadResult total;
  total.converged = true;
  for (std::size_t i = 0; i < pieces; ++i) {
    const Interval piece(bounds[i], bounds[i + 1]);
    if (piece.finite()) {
      detail::accumulate(total, detail::integrate_finite_piece(f, piece, piece_tol));
    } else {
      const auto [g, domain] = compactify(f, piece);
      detail::accumulate(total, detail::integrate_finite_piece(g, domain, piece_tol));
    }
  }
  return total;
}

}  // namespace basel
