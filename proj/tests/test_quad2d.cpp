#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "basel/quad2d.hpp"
#include "basel/related_proofs.hpp"
#include "calibration.hpp"

using namespace basel;

namespace {

const double kPi2_2 = static_cast<double>(calib::kPi * calib::kPi / 2);
const double kPi2_8 = static_cast<double>(calib::kPi * calib::kPi / 8);
const Tolerance kTwoD{1e-10, 1e-10};

double double_integrand(double x, double y) { return 1.0 / ((1.0 + y) * (1.0 + x * x * y)); }

Integrand2D double_integral() {
  // The x-slices at large y are spikes of width y^{-1/2} at x = 0.
  return {double_integrand, Interval(0, kInf), Interval(0, kInf), {0.0}, {0.0}};
}

}  // namespace

TEST(Iterated, InnerXOrder) {
  const auto r = integrate_iterated(double_integral(), {Axis::X}, kTwoD);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 4.9348022005, 1e-7);
  EXPECT_NEAR(r.value, kPi2_2, 1e-7);
  EXPECT_LE(std::abs(r.value - kPi2_2), 10.0 * r.error_estimate);
}

TEST(Iterated, InnerYOrder) {
  const auto r = integrate_iterated(double_integral(), {Axis::Y}, kTwoD);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, kPi2_2, 1e-7);
}

TEST(Iterated, ConstantOnUnitSquare) {
  for (double c : {1.0, -2.5, 7.0}) {
    const Integrand2D f{[c](double, double) { return c; }, Interval(0, 1), Interval(0, 1)};
    for (Axis inner : {Axis::X, Axis::Y}) {
      const auto r = integrate_iterated(f, {inner});
      EXPECT_TRUE(r.converged);
      EXPECT_NEAR(r.value, c, 1e-12);
    }
  }
}

TEST(Iterated, SeparableProduct) {
  // int_0^1 int_0^2 x^2 e^{-y} dy dx = (1/3)(1 - e^{-2})
  const Integrand2D f{[](double x, double y) { return x * x * std::exp(-y); }, Interval(0, 1),
                      Interval(0, 2)};
  const double truth = (1.0 - std::exp(-2.0)) / 3.0;
  EXPECT_NEAR(integrate_iterated(f, {Axis::X}).value, truth, 1e-13);
  EXPECT_NEAR(integrate_iterated(f, {Axis::Y}).value, truth, 1e-13);
}

TEST(Iterated, InnerFailurePoisonsResult) {
  const Integrand2D f{[](double x, double y) {
                        return x > 0.5 && y > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
                      },
                      Interval(0, 1), Interval(0, 1)};
  const auto r = integrate_iterated(f, {Axis::X});
  EXPECT_FALSE(r.converged);
  const auto check = fubini_check(f);
  EXPECT_FALSE(check.agree);
  EXPECT_FALSE(check.inner_x.converged);
  EXPECT_FALSE(check.inner_y.converged);
}

TEST(Iterated, EvaluationsCountInnerWork) {
  const auto r = integrate_iterated(double_integral(), {Axis::X}, kTwoD);
  EXPECT_GT(r.evaluations, 1000u);
  const auto again = integrate_iterated(double_integral(), {Axis::X}, kTwoD);
  EXPECT_EQ(r.value, again.value);
  EXPECT_EQ(r.evaluations, again.evaluations);
}

TEST(Fubini, DoubleIntegralOrdersAgree) {
  const auto check = fubini_check(double_integral(), kTwoD);
  EXPECT_TRUE(check.agree);
  EXPECT_NEAR(check.inner_x.value, kPi2_2, 1e-7);
  EXPECT_NEAR(check.inner_y.value, kPi2_2, 1e-7);
  EXPECT_LE(std::abs(check.inner_x.value - check.inner_y.value),
            check.inner_x.error_estimate + check.inner_y.error_estimate + 1e-8);
}

TEST(Fubini, HarperOrdersAgree) {
  const auto check = fubini_check(harper_integrand(), kTwoD);
  EXPECT_TRUE(check.agree);
  EXPECT_NEAR(check.inner_x.value, 1.2337005501, 1e-8);
  EXPECT_NEAR(check.inner_y.value, kPi2_8, 1e-8);
  EXPECT_LE(std::abs(check.inner_x.value - check.inner_y.value),
            check.inner_x.error_estimate + check.inner_y.error_estimate + 1e-8);
}

TEST(Fubini, AntisymmetricIntegrandVanishes) {
  const Integrand2D f{[](double x, double y) { return x - y; }, Interval(0, 1), Interval(0, 1)};
  const auto check = fubini_check(f);
  EXPECT_TRUE(check.agree);
  EXPECT_NEAR(check.inner_x.value, 0.0, 1e-12);
  EXPECT_NEAR(check.inner_y.value, 0.0, 1e-12);
}

TEST(Fubini, BeukersBoxOrdersAgree) {
  const auto check = fubini_check(beukers_box_integrand(0.9), kTwoD);
  EXPECT_TRUE(check.agree);
  EXPECT_LE(std::abs(check.inner_x.value - check.inner_y.value),
            check.inner_x.error_estimate + check.inner_y.error_estimate + 1e-8);
}

TEST(Slices, InnerXMatchesArctanClosedForm) {
  // int_0^inf dx/(1 + x^2 y) = arctan(sqrt(y) x)/sqrt(y) |_0^inf = pi/(2 sqrt y)
  const Integrand2D f{[](double x, double y) { return 1.0 / (1.0 + x * x * y); },
                      Interval(0, kInf), Interval(0, kInf)};
  const Tolerance tol{0.0, 1e-12};
  const double pi = static_cast<double>(calib::kPi);
  for (int k = 1; k <= 60; ++k) {
    const double y = 100.0 * std::pow(k / 60.0, 3);
    const auto r = integrate_slice(f, Axis::X, y, tol);
    const double truth = pi / (2.0 * std::sqrt(y));
    EXPECT_TRUE(r.converged) << "y = " << y;
    EXPECT_LE(std::abs(r.value - truth), 1e-10 * truth) << "y = " << y;
  }
}

TEST(Slices, PartialFractionIdentity) {
  // 1/((1+y)(1+x^2 y)) = (1/(1-x^2)) (1/(1+y) - x^2/(1+x^2 y)) for x != 1
  std::vector<double> xs;
  for (int i = 1; i < 20; ++i) xs.push_back(0.05 * i);
  for (int i = 1; i <= 18; ++i) xs.push_back(1.0 + 0.5 * i);
  for (double x : xs) {
    for (int j = 1; j < 50; ++j) {
      const double y = 1.0 * j;
      const double lhs = double_integrand(x, y);
      const double rhs = (1.0 / (1.0 - x * x)) * (1.0 / (1.0 + y) - x * x / (1.0 + x * x * y));
      EXPECT_LE(std::abs(lhs - rhs), 1e-13) << "x = " << x << ", y = " << y;
    }
  }
}

TEST(Slices, InnerYGivesReversedOrderIntegrand) {
  // int_0^inf dy/((1+y)(1+x^2 y)) = 2 ln x/(x^2 - 1)
  const Tolerance tol{0.0, 1e-12};
  for (double x : {0.01, 0.1, 0.5, 0.9, 1.5, 3.0, 10.0, 100.0}) {
    const auto r = integrate_slice(double_integral(), Axis::Y, x, tol);
    const double truth = 2.0 * calib::log_ratio(x);
    EXPECT_LE(std::abs(r.value - truth), 1e-10 * truth) << "x = " << x;
  }
}
