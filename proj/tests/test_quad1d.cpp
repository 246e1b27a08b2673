#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "basel/quad1d.hpp"
#include "basel/transforms.hpp"
#include "calibration.hpp"

using namespace basel;

namespace {

const double kPi2_8 = static_cast<double>(calib::kPi * calib::kPi / 8);

Integrand log_ratio_unit() { return Integrand(calib::log_ratio, {0.0}, {{1.0, 0.5}}); }

}  // namespace

TEST(Panel, SquareIsExact) {
  const auto p = gauss_kronrod_panel([](double x) { return x * x; }, 0.0, 1.0);
  EXPECT_TRUE(p.ok);
  EXPECT_NEAR(p.value, 1.0 / 3.0, 1e-15);
  EXPECT_LE(p.error_estimate, 1e-14);
}

TEST(Panel, ConstantOnWiderInterval) {
  const auto p = gauss_kronrod_panel([](double) { return 1.0; }, 2.0, 5.0);
  EXPECT_DOUBLE_EQ(p.value, 3.0);
}

TEST(Panel, DegreeThirteen) {
  const auto p = gauss_kronrod_panel([](double x) { return std::pow(x, 13); }, 0.0, 1.0);
  EXPECT_LE(std::abs(p.value - 1.0 / 14.0) * 14.0, 1e-13);
}

TEST(Panel, NonFiniteNodeMarksFailure) {
  const auto p = gauss_kronrod_panel(
      [](double x) { return x > 0.7 ? std::numeric_limits<double>::quiet_NaN() : x; }, 0.0, 1.0);
  EXPECT_FALSE(p.ok);
}

TEST(Adaptive, NegativeLog) {
  const auto r = integrate_adaptive(Integrand([](double x) { return -std::log(x); }, {0.0}),
                                    Interval(0, 1));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-10);
}

TEST(Adaptive, LogRatioWithRemovablePoint) {
  const auto r = integrate_adaptive(log_ratio_unit(), Interval(0, 1));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.2337005501, 1e-9);
}

TEST(Adaptive, TermAtOne) {
  const auto r = integrate_adaptive(
      Integrand([](double x) { return -x * x * std::log(x); }, {0.0}), Interval(0, 1));
  EXPECT_NEAR(r.value, 1.0 / 9.0, 1e-12);
}

TEST(Adaptive, MonomialsNeedOnePanel) {
  for (int k = 0; k <= 13; ++k) {
    const auto r = integrate_adaptive(Integrand([k](double x) { return std::pow(x, k); }),
                                      Interval(0, 1));
    EXPECT_TRUE(r.converged) << "k = " << k;
    EXPECT_EQ(r.subintervals, 1u) << "k = " << k;
    EXPECT_EQ(r.evaluations, kPanelEvaluations) << "k = " << k;
    EXPECT_LE(std::abs(r.value * (k + 1) - 1.0), 1e-13) << "k = " << k;
  }
}

TEST(Adaptive, NonFiniteValueFails) {
  const auto r = integrate_adaptive(Integrand([](double x) { return 1.0 / (x - 0.3); }),
                                    Interval(0, 1));
  EXPECT_FALSE(r.converged);
}

TEST(Adaptive, EvaluationBudgetIsRespected) {
  Tolerance tol;
  tol.max_evals = 100;
  const auto r = integrate_adaptive(Integrand([](double x) { return std::sqrt(x); }),
                                    Interval(0, 1), tol);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.evaluations, tol.max_evals);
  EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-3);
}

TEST(Adaptive, DepthBudgetIsRespected) {
  Tolerance tol;
  tol.max_depth = 2;
  const auto r = integrate_adaptive(Integrand([](double x) { return std::sqrt(x); }),
                                    Interval(0, 1), tol);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.subintervals, 4u);
}

TEST(Adaptive, RejectsInfiniteInterval) {
  EXPECT_THROW(integrate_adaptive(Integrand([](double) { return 1.0; }), Interval(0, kInf)),
               std::invalid_argument);
}

TEST(TanhSinh, NegativeLog) {
  const auto r = integrate_tanh_sinh(Integrand([](double x) { return -std::log(x); }, {0.0}),
                                     Interval(0, 1));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(TanhSinh, InverseSquareRoot) {
  const auto r = integrate_tanh_sinh(
      Integrand([](double x) { return 1.0 / std::sqrt(x); }, {0.0}), Interval(0, 1));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 2.0, 1e-10);
}

TEST(TanhSinh, LogRatio) {
  const auto r = integrate_tanh_sinh(log_ratio_unit(), Interval(0, 1));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, kPi2_8, 1e-10);
}

TEST(TanhSinh, SingularInteriorValueFails) {
  const auto r = integrate_tanh_sinh(
      Integrand([](double x) { return x == 0.5 ? std::numeric_limits<double>::infinity() : 1.0; }),
      Interval(0, 1));
  EXPECT_FALSE(r.converged);
}

TEST(TanhSinh, EvaluationBudgetIsRespected) {
  Tolerance tol;
  tol.max_evals = 40;
  const auto r = integrate_tanh_sinh(
      Integrand([](double x) { return std::cos(40.0 * x); }), Interval(0, 1), tol);
  EXPECT_LE(r.evaluations, tol.max_evals);
  EXPECT_FALSE(r.converged);
}

TEST(Soundness, CalibrationSuite) {
  for (const auto& c : calib::cases()) {
    const auto r = improper_integrate(c.f, c.domain);
    ASSERT_TRUE(r.converged) << c.name;
    EXPECT_LE(std::abs(r.value - c.truth), 10.0 * r.error_estimate)
        << c.name << ": value " << r.value << ", error estimate " << r.error_estimate;
  }
}

TEST(Soundness, AdaptiveOnFiniteCalibration) {
  for (const auto& c : calib::cases()) {
    if (!c.domain.finite()) continue;
    const auto r = integrate_adaptive(c.f, c.domain);
    if (!r.converged) continue;
    EXPECT_LE(std::abs(r.value - c.truth), 10.0 * r.error_estimate) << c.name;
  }
}

TEST(Soundness, ConvergedMatchesTarget) {
  const Tolerance tol{1e-9, 1e-9};
  for (const auto& c : calib::cases()) {
    const auto r = improper_integrate(c.f, c.domain, tol);
    if (c.domain.finite()) {
      const auto a = integrate_adaptive(c.f, c.domain, tol);
      EXPECT_EQ(a.converged, a.error_estimate <= tol.target(a.value)) << c.name;
    }
    EXPECT_LE(r.evaluations, tol.max_evals) << c.name;
  }
}

TEST(Additivity, RandomSplitPoints) {
  std::mt19937_64 rng(20240517);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const Integrand smooth([](double x) { return std::exp(x) * std::sin(3.0 * x); });
  const Interval whole(0.0, 2.0);
  const auto full = integrate_adaptive(smooth, whole);
  for (int i = 0; i < 50; ++i) {
    const double c = 2.0 * (0.01 + 0.98 * unit(rng));
    const auto left = integrate_adaptive(smooth, Interval(0.0, c));
    const auto right = integrate_adaptive(smooth, Interval(c, 2.0));
    EXPECT_LE(std::abs(left.value + right.value - full.value),
              left.error_estimate + right.error_estimate + full.error_estimate + 1e-13)
        << "c = " << c;
  }

  const Integrand log_ratio = log_ratio_unit();
  const auto unit_full = improper_integrate(log_ratio, Interval(0, 1));
  for (int i = 0; i < 20; ++i) {
    const double c = 0.01 + 0.98 * unit(rng);
    const auto left = improper_integrate(log_ratio, Interval(0.0, c));
    const auto right = improper_integrate(log_ratio, Interval(c, 1.0));
    EXPECT_LE(std::abs(left.value + right.value - unit_full.value),
              left.error_estimate + right.error_estimate + unit_full.error_estimate + 1e-13)
        << "c = " << c;
  }
}

TEST(Determinism, RepeatedRunsAreBitIdentical) {
  for (const auto& c : calib::cases()) {
    const auto a = improper_integrate(c.f, c.domain);
    const auto b = improper_integrate(c.f, c.domain);
    EXPECT_EQ(a.value, b.value) << c.name;
    EXPECT_EQ(a.error_estimate, b.error_estimate) << c.name;
    EXPECT_EQ(a.evaluations, b.evaluations) << c.name;
    EXPECT_EQ(a.subintervals, b.subintervals) << c.name;
  }
}

TEST(Removable, StoredLimitMatchesNumericLimit) {
  // ln x/(x^2 - 1) = 1/2 - (x - 1)/2 + O((x - 1)^2) around x = 1.
  const Integrand f = log_ratio_unit();
  const double lo = f.eval(1.0 - 1e-6);
  const double hi = f.eval(1.0 + 1e-6);
  EXPECT_NEAR(lo, 0.5, 0.5 * 1e-4);
  EXPECT_NEAR(hi, 0.5, 0.5 * 1e-4);
  EXPECT_EQ(f(1.0), 0.5);
}

TEST(Integrand, EvalNeverCalledAtDeclaredPoints) {
  std::vector<double> seen;
  const Integrand f(
      [&seen](double x) {
        seen.push_back(x);
        return calib::log_ratio(x);
      },
      {0.0}, {{1.0, 0.5}});
  EXPECT_TRUE(std::isnan(f(0.0)));
  integrate_adaptive(f, Interval(0, 2));
  integrate_tanh_sinh(f, Interval(0, 1));
  integrate_tanh_sinh(f, Interval(0, 3));
  improper_integrate(f, Interval(0, kInf));
  ASSERT_FALSE(seen.empty());
  for (double x : seen) {
    EXPECT_NE(x, 0.0);
    EXPECT_NE(x, 1.0);
  }
}

TEST(Interval, Validation) {
  EXPECT_THROW(Interval(1, 1), std::invalid_argument);
  EXPECT_THROW(Interval(2, 1), std::invalid_argument);
  EXPECT_THROW(Interval(std::nan(""), 1), std::invalid_argument);
  EXPECT_THROW(Interval(kInf, kInf), std::invalid_argument);
  EXPECT_THROW(Interval(-kInf, -kInf), std::invalid_argument);
  const Interval line(-kInf, kInf);
  EXPECT_TRUE(line.lower_infinite());
  EXPECT_TRUE(line.upper_infinite());
  EXPECT_FALSE(line.finite());
  EXPECT_TRUE(Interval(0, 1).contains_interior(0.5));
  EXPECT_FALSE(Interval(0, 1).contains_interior(1.0));
}

TEST(Tolerance, Validation) {
  EXPECT_THROW((Tolerance{0.0, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((Tolerance{-1.0, 1e-9}.validate()), std::invalid_argument);
  Tolerance no_budget;
  no_budget.max_evals = 0;
  EXPECT_THROW(no_budget.validate(), std::invalid_argument);
  EXPECT_NO_THROW((Tolerance{0.0, 1e-9}.validate()));
  const Tolerance defaults;
  EXPECT_EQ(defaults.abs_tol, 1e-12);
  EXPECT_EQ(defaults.rel_tol, 1e-12);
  EXPECT_EQ(defaults.max_evals, 1'000'000u);
  EXPECT_EQ(defaults.max_depth, 60);
  EXPECT_EQ((Tolerance{1e-9, 1e-6}.target(1e-2)), 1e-8);
}
