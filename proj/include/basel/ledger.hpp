#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "basel/constants.hpp"
#include "basel/quad2d.hpp"
#include "basel/related_proofs.hpp"
#include "basel/series.hpp"
#include "basel/transforms.hpp"
#include "basel/types.hpp"
#include "basel/version.hpp"

namespace basel::ledger {

/// Exact value numerator/denominator * pi^pi_power, rounded to binary64 only
/// when compared.
struct ClosedForm {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  int pi_power = 0;

  double value() const {
    long double v = static_cast<long double>(numerator);
    for (int i = 0; i < pi_power; ++i) v *= kPiLong;
    return static_cast<double>(v / static_cast<long double>(denominator));
  }

  std::string to_string() const {
    std::string s = std::to_string(numerator);
    if (pi_power == 1) s += "*pi";
    if (pi_power > 1) s += "*pi^" + std::to_string(pi_power);
    if (denominator != 1) s += "/" + std::to_string(denominator);
    return s;
  }
};

/// A named display of the proof chain: its key and formula.
struct SourceDisplay {
  std::string_view key;
  std::string_view formula;
};

inline constexpr std::array<SourceDisplay, 16> kSourceDisplays = {{
    {"basel-series", "sum_{n>=1} 1/n^2 = pi^2/6"},
    {"odd-square-series", "sum_{n>=0} 1/(2n+1)^2 = pi^2/8"},
    {"double-integral", "int_0^inf int_0^inf dx dy / ((1+y)(1+x^2 y))"},
    {"inner-x-evaluation", "(pi/2) int_0^inf dy / (sqrt(y)(1+y)) = pi^2/2, y = u^2"},
    {"reversed-order", "int_0^inf 1/(1-x^2) (1/(1+y) - x^2/(1+x^2 y)) dy dx = 2 int_0^inf ln x/(x^2-1) dx"},
    {"log-integral-full", "int_0^inf ln x/(x^2-1) dx = pi^2/4"},
    {"split-and-reflect", "int_1^inf ln x/(x^2-1) dx = int_0^1 ln u/(u^2-1) du, x = 1/u"},
    {"log-integral-unit", "int_0^1 ln x/(x^2-1) dx = pi^2/8"},
    {"geometric-expansion", "int_0^1 -ln x/(1-x^2) dx = sum_{n>=0} int_0^1 -x^{2n} ln x dx"},
    {"term-by-parts", "int_0^1 -x^{2n} ln x dx = 1/(2n+1)^2"},
    {"series-identity", "int_0^1 ln x/(x^2-1) dx = sum_{n>=0} 1/(2n+1)^2"},
    {"beukers-box", "int_0^1 int_0^1 dx dy / (1 - xy)"},
    {"apostol-integrals", "I1, I2 = int arctan(.)/sqrt(2-u^2) du over [0, 1/sqrt2], [1/sqrt2, sqrt2]"},
    {"bck-substitution", "x = sin u / cos v, y = sin v / cos u"},
    {"hirschhorn-inequality",
     "2 arctan(a/(1+sqrt(1-a^2)))^2 < sum_{n>=0} a^{4n+2}/(2n+1)^2 < 2 arctan(a)^2"},
    {"harper-integral", "int_0^inf int_0^1 x / ((1+x^2)(1+x^2 y^2)) dx dy"},
}};

inline const SourceDisplay* find_display(std::string_view key) {
  for (const auto& d : kSourceDisplays) {
    if (d.key == key) return &d;
  }
  return nullptr;
}

/// What a step's computation hands back to the runner.
struct Computation {
  double computed = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
  bool checks_passed = true;   // step-specific side conditions
  bool indeterminate = false;  // could neither confirm nor refute
  std::string diagnostics;
};

struct ProofStep {
  std::string id;
  std::string title;
  std::string paper_ref;  // "<display key>: <formula>"
  std::function<Computation(const Tolerance&)> compute;
  ClosedForm expected;
  Tolerance tolerance;
};

enum class Status { Pass, Fail, Indeterminate };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Indeterminate:
      return "indeterminate";
  }
  return "fail";
}

struct StepOutcome {
  std::string step_id;
  std::string title;
  std::string paper_ref;
  double computed = 0.0;
  double expected_value = 0.0;
  double abs_diff = 0.0;
  double error_estimate = 0.0;
  bool pass = false;
  Status status = Status::Fail;
  std::size_t evaluations = 0;
  std::chrono::duration<double, std::milli> elapsed{0.0};
  std::string diagnostics;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t indeterminate = 0;
};

struct Report {
  std::vector<StepOutcome> outcomes;
  Summary summary;
  std::string artifact_version = kArtifactVersion;

  bool all_passed() const noexcept {
    return summary.fail == 0 && summary.indeterminate == 0;
  }
};

struct StepInfo {
  std::string id;
  std::string title;
  std::string paper_ref;
};

struct RunConfig {
  std::vector<std::string> step_ids;  // empty: every step
  std::optional<Tolerance> tolerance_override;
  bool parallel = true;
};

namespace detail {

// Quadrature is requested this much tighter than the step's pass threshold.
inline constexpr double kRequestScale = 1e-3;

inline std::string cite(std::string_view key) {
  const SourceDisplay* d = find_display(key);
  if (d == nullptr) throw std::logic_error("unknown display key");
  return std::string(d->key) + ": " + std::string(d->formula);
}

inline Computation from_quad(const QuadResult& r) {
  Computation c;
  c.computed = r.value;
  c.error_estimate = r.error_estimate;
  c.evaluations = r.evaluations;
  c.converged = r.converged;
  if (!r.converged) c.diagnostics = "quadrature did not converge";
  return c;
}

inline void add_check(Computation& c, bool ok, std::string_view what) {
  if (ok) return;
  c.checks_passed = false;
  if (!c.diagnostics.empty()) c.diagnostics += "; ";
  c.diagnostics += what;
}

inline Integrand log_ratio_integrand() {
  return Integrand([](double x) { return std::log(x) / ((x - 1.0) * (x + 1.0)); }, {0.0},
                   {{1.0, 0.5}});
}

inline Integrand2D basel_double_integrand() {
  return {[](double x, double y) { return 1.0 / ((1.0 + y) * (1.0 + x * x * y)); },
          Interval(0.0, kInf), Interval(0.0, kInf), {0.0}, {0.0}};
}

inline double pi_multiple(std::int64_t num, std::int64_t den, int power) {
  return ClosedForm{num, den, power}.value();
}

// sum_{n>=1} z^n / n^2 for 0 < z < 1, summed until the geometric majorant
// of the tail drops below 1e-17.
inline double dilog_series(double z) {
  double sum = 0.0;
  double power = 1.0;
  for (std::size_t n = 1;; ++n) {
    power *= z;
    const double nn = static_cast<double>(n);
    sum += power / (nn * nn);
    const double next = nn + 1.0;
    if (power * z / (next * next * (1.0 - z)) < 1e-17) break;
  }
  return sum;
}

inline Computation compute_double_integral(const Tolerance& tol) {
  return from_quad(integrate_iterated(basel_double_integrand(), {Axis::X}, tol.scaled(kRequestScale)));
}

inline Computation compute_reversed_order(const Tolerance& tol) {
  const FubiniCheck check = fubini_check(basel_double_integrand(), tol.scaled(kRequestScale));
  Computation c = from_quad(check.inner_y);
  c.evaluations += check.inner_x.evaluations;
  c.converged = check.inner_x.converged && check.inner_y.converged;
  add_check(c, check.agree, "iteration orders disagree");
  return c;
}

inline Computation compute_log_integral_full(const Tolerance& tol) {
  return from_quad(improper_integrate(log_ratio_integrand(), Interval(0.0, kInf),
                                      tol.scaled(kRequestScale)));
}

inline Computation compute_log_integral_unit(const Tolerance& tol) {
  const Tolerance request = tol.scaled(kRequestScale);
  const Integrand f = log_ratio_integrand();
  const QuadResult unit = improper_integrate(f, Interval(0.0, 1.0), request);
  const Substitution& reciprocal = find_substitution("reciprocal");
  const QuadResult reflected =
      improper_integrate(apply_substitution(reciprocal, f), reciprocal.source, request);

  Computation c = from_quad(unit);
  c.evaluations += reflected.evaluations;
  c.converged = unit.converged && reflected.converged;
  add_check(c,
            std::abs(unit.value - reflected.value) <=
                unit.error_estimate + reflected.error_estimate + tol.abs_tol,
            "x = 1/u reflection disagrees with [0,1] integral");
  return c;
}

inline Computation compute_split_symmetry(const Tolerance& tol) {
  const Tolerance request = tol.scaled(kRequestScale);
  const Integrand f = log_ratio_integrand();
  const QuadResult unit = improper_integrate(f, Interval(0.0, 1.0), request);
  const QuadResult upper = improper_integrate(f, Interval(1.0, kInf), request);
  const QuadResult full = improper_integrate(f, Interval(0.0, kInf), request);

  Computation c = from_quad(upper);
  c.evaluations += unit.evaluations + full.evaluations;
  c.converged = unit.converged && upper.converged && full.converged;
  add_check(c, std::abs(unit.value - upper.value) <= 0.1 * tol.abs_tol,
            "[0,1] and [1,inf) pieces differ");
  add_check(c, std::abs(unit.value - 0.5 * full.value) <= tol.abs_tol,
            "[0,1] piece is not half of [0,inf)");
  add_check(c, std::abs(upper.value - 0.5 * full.value) <= tol.abs_tol,
            "[1,inf) piece is not half of [0,inf)");
  return c;
}

inline Computation compute_term_integrals(const Tolerance& tol) {
  Computation c;
  c.computed = 0.0;
  for (unsigned n = 0; n <= 20; ++n) {
    const QuadResult r = term_integral(n, tol.scaled(kRequestScale));
    const double odd = 2.0 * n + 1.0;
    c.computed = std::max(c.computed, std::abs(r.value - 1.0 / (odd * odd)));
    c.error_estimate = std::max(c.error_estimate, r.error_estimate);
    c.evaluations += r.evaluations;
    if (!r.converged) {
      c.converged = false;
      add_check(c, false, "term " + std::to_string(n) + " did not converge");
    }
  }
  return c;
}

inline Computation compute_odd_bracket(const Tolerance&) {
  Computation c;
  const DoubleDouble target = pi_squared_dd() / DoubleDouble(8.0);
  for (std::size_t terms : {std::size_t{1}, std::size_t{10}, std::size_t{1000}, std::size_t{1000000}}) {
    const SeriesResult s = odd_square_partial_sum(terms);
    add_check(c, s.brackets(target), "bracket fails at N = " + std::to_string(terms));
    // The reported value drops the low word, and the binary64 expected
    // value is off from pi^2/8 by up to half an ulp.
    c.computed = s.partial_sum;
    c.error_estimate = std::abs(s.partial_sum_low) + s.rounding_bound +
                       0.5 * std::numeric_limits<double>::epsilon() * target.hi;
    c.evaluations += terms;
  }
  return c;
}

inline Computation compute_zeta2(const Tolerance& tol) {
  // Odd-square sum = first 25 terms + integral of what the geometric
  // expansion leaves behind.
  constexpr unsigned kTerms = 25;
  const SeriesResult head = odd_square_partial_sum(kTerms);
  const QuadResult rest = improper_integrate(geometric_remainder_integrand(kTerms),
                                             Interval(0.0, 1.0), tol.scaled(kRequestScale));
  Computation c;
  c.computed = zeta2_from_odd(head.partial_sum + rest.value);
  c.error_estimate = 4.0 / 3.0 * (rest.error_estimate + head.rounding_bound);
  c.evaluations = rest.evaluations + kTerms;
  c.converged = rest.converged;

  const SeriesResult million = odd_square_partial_sum(1000000);
  const double via_series = zeta2_from_odd(million.partial_sum);
  const double zeta2 = pi_multiple(1, 6, 2);
  add_check(c, via_series < zeta2 && zeta2 - via_series <= 3.4e-7,
            "(4/3) S_N is not within 3.4e-7 below zeta(2)");
  return c;
}

inline Computation compute_apostol(const Tolerance& tol) {
  const Tolerance request = tol.scaled(kRequestScale);
  const QuadResult i1 = apostol_i1(request);
  const QuadResult i2 = apostol_i2(request);
  Computation c;
  c.computed = 4.0 * (i1.value + i2.value);
  c.error_estimate = 4.0 * (i1.error_estimate + i2.error_estimate);
  c.evaluations = i1.evaluations + i2.evaluations;
  c.converged = i1.converged && i2.converged;
  add_check(c, std::abs(i1.value - pi_multiple(1, 72, 2)) <= 0.1 * tol.abs_tol + i1.error_estimate,
            "I1 != pi^2/72");
  add_check(c, std::abs(i2.value - pi_multiple(1, 36, 2)) <= tol.abs_tol + i2.error_estimate,
            "I2 != pi^2/36");
  return c;
}

inline constexpr std::size_t kHirschhornTerms = 1000;

inline Computation compute_hirschhorn(const Tolerance&) {
  Computation c;
  std::size_t certified = 0;
  for (int k = 1; k <= 19; ++k) {
    const double a = 0.05 * k;
    const InequalityCheck check = hirschhorn_check(a, kHirschhornTerms);
    c.evaluations += kHirschhornTerms;
    if (check.certified) {
      ++certified;
    } else if (check.strict) {
      c.indeterminate = true;
    } else {
      add_check(c, false, "ordering violated at a = " + std::to_string(a));
    }
  }
  c.computed = static_cast<double>(certified);
  return c;
}

inline Computation compute_harper(const Tolerance& tol) {
  const FubiniCheck check = harper_integral_check(tol.scaled(kRequestScale));
  Computation c = from_quad(check.inner_x);
  c.error_estimate = std::max(check.inner_x.error_estimate, check.inner_y.error_estimate);
  c.evaluations += check.inner_y.evaluations;
  c.converged = check.inner_x.converged && check.inner_y.converged;
  add_check(c, check.agree, "iteration orders disagree");
  add_check(c,
            std::abs(check.inner_y.value - pi_multiple(1, 8, 2)) <=
                tol.abs_tol + check.inner_y.error_estimate,
            "inner-y order misses pi^2/8");
  return c;
}

inline Computation compute_bck_jacobian(const Tolerance&) {
  constexpr int kGrid = 50;
  const double limit = 0.5 * kPi - 0.01;
  Computation c;
  for (int i = 1; i <= kGrid; ++i) {
    for (int j = 1; j <= kGrid; ++j) {
      const double u = limit * i / (kGrid + 1);
      const double v = limit * j / (kGrid + 1);
      if (u + v >= limit) continue;
      const JacobianCheck jc = bck_jacobian_check(u, v);
      c.computed = std::max(c.computed, std::abs(jc.analytic - jc.numeric) / std::abs(jc.analytic));
      c.evaluations += 8;
    }
  }
  return c;
}

inline constexpr std::array<double, 11> kBoxGrid = {0.1, 0.2, 0.3, 0.4,  0.5,  0.6,
                                                    0.7, 0.8, 0.9, 0.99, 0.999};

inline Computation compute_beukers_box(const Tolerance& tol) {
  Computation c;
  double previous = 0.0;
  const double zeta2 = pi_multiple(1, 6, 2);
  for (double a : kBoxGrid) {
    const QuadResult r = beukers_box_partial(a, tol.scaled(kRequestScale));
    c.evaluations += r.evaluations;
    c.converged = c.converged && r.converged;
    c.error_estimate = std::max(c.error_estimate, r.error_estimate);
    c.computed = std::max(c.computed, std::abs(r.value - dilog_series(a * a)));
    add_check(c, r.value > previous, "box integral not increasing at a = " + std::to_string(a));
    add_check(c, r.value < zeta2 + 1e-9, "box integral exceeds zeta(2)");
    previous = r.value;
  }
  return c;
}

inline std::vector<ProofStep> make_registry() {
  const Tolerance one_d{1e-9, 1e-9};
  const Tolerance two_d{1e-7, 1e-7};

  std::vector<ProofStep> steps;
  steps.push_back({"S1-double-integral",
                   "double integral, x integrated first, equals pi^2/2",
                   cite("double-integral"), compute_double_integral, {1, 2, 2}, two_d});
  steps.push_back({"S2-reversed-order",
                   "same double integral, y integrated first, agrees with S1",
                   cite("reversed-order"), compute_reversed_order, {1, 2, 2}, two_d});
  steps.push_back({"S3-log-integral-full", "int_0^inf ln x/(x^2-1) dx = pi^2/4",
                   cite("log-integral-full"), compute_log_integral_full, {1, 4, 2}, one_d});
  steps.push_back({"S4-log-integral-unit",
                   "int_0^1 ln x/(x^2-1) dx = pi^2/8, x = 1/u reflection consistent",
                   cite("log-integral-unit"), compute_log_integral_unit, {1, 8, 2}, one_d});
  steps.push_back({"S5-split-symmetry", "[0,1] and [1,inf) pieces are equal halves",
                   cite("split-and-reflect"), compute_split_symmetry, {1, 8, 2}, one_d});
  steps.push_back({"S6-term-integral",
                   "max_n |int_0^1 -x^{2n} ln x dx - 1/(2n+1)^2|, n = 0..20",
                   cite("term-by-parts"), compute_term_integrals, {0, 1, 0},
                   Tolerance{1e-12, 1e-9}});
  steps.push_back({"S7-odd-bracket",
                   "S_N < pi^2/8 < S_N + 1/(4N) for N = 1, 10, 1e3, 1e6 (value at 1e6)",
                   cite("odd-square-series"), compute_odd_bracket, {1, 8, 2},
                   Tolerance{0.25e-6, 0.0}});
  steps.push_back({"S8-zeta2",
                   "zeta(2) = (4/3) (S_25 + int_0^1 -x^50 ln x/(1-x^2) dx) = pi^2/6",
                   cite("basel-series"), compute_zeta2, {1, 6, 2}, one_d});
  steps.push_back({"S9-apostol", "4 (I1 + I2) = pi^2/6 with I1 = pi^2/72, I2 = pi^2/36",
                   cite("apostol-integrals"), compute_apostol, {1, 6, 2}, one_d});
  steps.push_back({"S10-hirschhorn",
                   "certified strict ordering at a = 0.05k, k = 1..19 (count)",
                   cite("hirschhorn-inequality"), compute_hirschhorn, {19, 1, 0},
                   Tolerance{0.5, 0.0}});
  steps.push_back({"S11-harper", "both iteration orders equal pi^2/8",
                   cite("harper-integral"), compute_harper, {1, 8, 2}, two_d});
  steps.push_back({"S12-bck-jacobian",
                   "max relative |(1 - x^2 y^2) - finite-difference det| on 50x50 grid",
                   cite("bck-substitution"), compute_bck_jacobian, {0, 1, 0},
                   Tolerance{1e-6, 0.0}});
  steps.push_back({"S13-beukers-box",
                   "max |int_[0,a]^2 dx dy/(1-xy) - sum a^{2n}/n^2|, monotone in a, below pi^2/6",
                   cite("beukers-box"), compute_beukers_box, {0, 1, 0}, two_d});
  return steps;
}

}  // namespace detail

/// The registry, built once; immutable afterwards.
inline const std::vector<ProofStep>& registry() {
  static const std::vector<ProofStep> steps = detail::make_registry();
  return steps;
}

inline std::vector<StepInfo> list_steps() {
  std::vector<StepInfo> out;
  for (const auto& s : registry()) out.push_back({s.id, s.title, s.paper_ref});
  return out;
}

inline const ProofStep& find_step(std::string_view id) {
  for (const auto& s : registry()) {
    if (s.id == id) return s;
  }
  throw std::out_of_range("unknown step id: " + std::string(id));
}

inline StepOutcome run_step(std::string_view id, std::optional<Tolerance> tol_override = {}) {
  const ProofStep& step = find_step(id);
  const Tolerance tol = tol_override.value_or(step.tolerance);
  tol.validate();

  const auto start = std::chrono::steady_clock::now();
  const Computation c = step.compute(tol);
  const auto stop = std::chrono::steady_clock::now();

  StepOutcome out;
  out.step_id = step.id;
  out.title = step.title;
  out.paper_ref = step.paper_ref;
  out.computed = c.computed;
  out.expected_value = step.expected.value();
  out.abs_diff = std::abs(c.computed - out.expected_value);
  out.error_estimate = c.error_estimate;
  out.evaluations = c.evaluations;
  out.elapsed = stop - start;
  out.diagnostics = c.diagnostics;

  const bool within = out.abs_diff <= tol.abs_tol + c.error_estimate;
  out.pass = c.converged && c.checks_passed && !c.indeterminate && within;
  if (out.pass) {
    out.status = Status::Pass;
  } else if (c.indeterminate && c.converged && c.checks_passed) {
    out.status = Status::Indeterminate;
  } else {
    out.status = Status::Fail;
    if (!within) {
      if (!out.diagnostics.empty()) out.diagnostics += "; ";
      out.diagnostics += "difference exceeds tolerance + error estimate";
    }
  }
  return out;
}

/// Runs the selected steps (independently, possibly concurrently) and
/// assembles the report in registry order.
inline Report run_all(const RunConfig& config = {}) {
  std::vector<std::string> ids;
  if (config.step_ids.empty()) {
    for (const auto& s : registry()) ids.push_back(s.id);
  } else {
    for (const auto& s : registry()) {
      if (std::find(config.step_ids.begin(), config.step_ids.end(), s.id) != config.step_ids.end()) {
        ids.push_back(s.id);
      }
    }
    for (const auto& wanted : config.step_ids) find_step(wanted);
  }

  Report report;
  if (config.parallel) {
    std::vector<std::future<StepOutcome>> pending;
    pending.reserve(ids.size());
    for (const auto& id : ids) {
      pending.push_back(std::async(std::launch::async, [id, &config] {
        return run_step(id, config.tolerance_override);
      }));
    }
    for (auto& f : pending) report.outcomes.push_back(f.get());
  } else {
    for (const auto& id : ids) report.outcomes.push_back(run_step(id, config.tolerance_override));
  }

  for (const auto& o : report.outcomes) {
    switch (o.status) {
      case Status::Pass:
        ++report.summary.pass;
        break;
      case Status::Fail:
        ++report.summary.fail;
        break;
      case Status::Indeterminate:
        ++report.summary.indeterminate;
        break;
    }
  }
  return report;
}

}  // namespace basel::ledger
