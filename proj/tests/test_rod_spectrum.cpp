#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "freeplate/error.hpp"
#include "freeplate/rod_spectrum.hpp"
#include "oracles.hpp"

using namespace freeplate;
using std::numbers::pi;

namespace {

// determinants written directly from u''(1) = 0 and tau u'(1) - u'''(1) = 0
double odd_pos(double tau, double a) {
  double b = std::sqrt(a * a + tau);
  return a * a * a * std::sin(a) * std::cosh(b) - b * b * b * std::sinh(b) * std::cos(a);
}
double even_pos(double tau, double a) {
  double b = std::sqrt(a * a + tau);
  return a * a * a * std::cos(a) * std::sinh(b) + b * b * b * std::cosh(b) * std::sin(a);
}
double odd_trig(double tau, double a) {
  double b = std::sqrt(-tau - a * a);
  return a * a * a * std::sin(a) * std::cos(b) - b * b * b * std::sin(b) * std::cos(a);
}
double even_trig(double tau, double a) {
  double b = std::sqrt(-tau - a * a);
  return b * b * b * std::sin(a) * std::cos(b) - a * a * a * std::cos(a) * std::sin(b);
}

std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi, int n) {
  std::vector<double> out;
  double x0 = lo, f0 = f(lo);
  for (int i = 1; i <= n; ++i) {
    double x1 = lo + (hi - lo) * i / n, f1 = f(x1);
    if ((f0 < 0) != (f1 < 0)) out.push_back(oracle::bisect(f, x0, x1));
    x0 = x1;
    f0 = f1;
  }
  return out;
}

// u'''' - tau u'' - omega u and the two free-end conditions by finite differences
void check_mode_by_differences(const RodMode& m) {
  auto u = [&](double x) { return rod_mode_value(m, x); };
  double peak = 0;
  for (int i = 0; i <= 200; ++i) peak = std::fmax(peak, std::fabs(u(-1 + i / 100.0)));
  REQUIRE(peak > 0);
  double k = std::fmax(std::fmax(m.a, m.b), 1.0);
  double h = 2e-3;
  for (double x : {-0.55, 0.1, 0.6}) {
    double u4 = (u(x + 2 * h) - 4 * u(x + h) + 6 * u(x) - 4 * u(x - h) + u(x - 2 * h)) / std::pow(h, 4);
    double u2 = (u(x + h) - 2 * u(x) + u(x - h)) / (h * h);
    double res = u4 - m.tau * u2 - m.omega * u(x);
    CHECK_MESSAGE(std::fabs(res) <= 1e-3 * peak * (std::pow(k, 4) + std::fabs(m.tau) * k * k + std::fabs(m.omega)),
                  "ode residual " << res << " regime " << to_string(m.regime));
  }
  for (double x : {1.0, -1.0}) {
    double e = 1e-3;
    double u2 = (u(x + e) - 2 * u(x) + u(x - e)) / (e * e);
    double u1 = (u(x + e) - u(x - e)) / (2 * e);
    double g = 5e-3;
    double u3 = (u(x + 2 * g) - 2 * u(x + g) + 2 * u(x - g) - u(x - 2 * g)) / (2 * g * g * g);
    double scale = peak * (k * k * k + std::fabs(m.tau) * k);
    CHECK_MESSAGE(std::fabs(u2) <= 1e-3 * peak * k * k, "moment " << u2 << " regime " << to_string(m.regime));
    CHECK_MESSAGE(std::fabs(m.tau * u1 - u3) <= 1e-3 * scale, "shear regime " << to_string(m.regime));
  }
}

}  // namespace

TEST_CASE("positive modes against a dense scan") {
  for (double tau : {0.5, 2.0, 10.0, -3.0}) {
    auto modes = positive_modes(tau, 12);
    REQUIRE(modes.size() == 12);
    double lo = tau < 0 ? std::sqrt(-tau) + 1e-9 : 1e-9;
    auto odd = scan_roots([tau](double a) { return odd_pos(tau, a); }, lo, lo + 8 * pi, 100000);
    auto even = scan_roots([tau](double a) { return even_pos(tau, a); }, lo, lo + 8 * pi, 100000);
    std::vector<std::pair<double, Parity>> all;
    for (double a : odd) all.push_back({a, Parity::odd});
    for (double a : even) all.push_back({a, Parity::even});
    std::sort(all.begin(), all.end());
    for (size_t i = 0; i < modes.size(); ++i) {
      CHECK(modes[i].a == doctest::Approx(all[i].first).epsilon(1e-10));
      CHECK(modes[i].parity == all[i].second);
      CHECK(modes[i].residual <= 1e-9);
      double b2 = modes[i].a * modes[i].a + tau;
      CHECK(modes[i].omega == doctest::Approx(modes[i].a * modes[i].a * b2).epsilon(1e-14));
    }
  }
}

TEST_CASE("modes solve the rod problem by finite differences") {
  for (const auto& m : positive_modes(2.0, 4)) check_mode_by_differences(m);
  for (const auto& m : positive_modes(-10.0, 2)) check_mode_by_differences(m);
  for (const auto& m : trig_modes(-30.0, 4)) check_mode_by_differences(m);
  for (const auto& m : hyperbolic_candidates(-10.0, 2)) check_mode_by_differences(m);
  auto deg = degenerate_mode(degenerate_point().tau);
  REQUIRE(deg.has_value());
  check_mode_by_differences(*deg);
  for (const auto& m : zero_mode_degeneracy(-pi * pi).extra_modes) check_mode_by_differences(m);
  for (const auto& m : zero_mode_degeneracy(-9 * pi * pi / 4).extra_modes) check_mode_by_differences(m);
}

TEST_CASE("reduced determinants") {
  for (double tau : {0.5, 3.0})
    for (double a : {0.3, 1.0, 2.5, 7.0}) {
      double b = std::sqrt(a * a + tau);
      CHECK(det_odd_positive(tau, a) == doctest::Approx(odd_pos(tau, a) / std::cosh(b)).epsilon(1e-12));
      CHECK(det_even_positive(tau, a) == doctest::Approx(even_pos(tau, a) / std::cosh(b)).epsilon(1e-12));
    }
  for (double tau : {-10.0, -40.0})
    for (double a : {0.3, 1.0, 1.9}) {
      double b = std::sqrt(-tau - a * a);
      CHECK(det_odd_trig(tau, a) == doctest::Approx(odd_trig(tau, a) / (b - a)).epsilon(1e-10));
      CHECK(det_even_trig(tau, a) == doctest::Approx(even_trig(tau, a) / (b - a)).epsilon(1e-10));
    }
  // diagonal a = b is continuous
  double tau = -6.0, c = std::sqrt(3.0);
  CHECK(det_odd_trig(tau, c) == doctest::Approx(det_odd_trig(tau, c * (1 - 1e-6))).epsilon(1e-4));
  CHECK(det_even_trig(tau, c) == doctest::Approx(det_even_trig(tau, c * (1 - 1e-6))).epsilon(1e-4));
}

TEST_CASE("interlacing and first mode") {
  for (double tau : {0.5, 2.0, 10.0}) {
    auto r = check_interlacing(tau, 9);
    CHECK(r.holds);
    CHECK(r.checked == 20);
    CHECK(r.worst_margin > 0);
    auto m = positive_modes(tau, 20);
    CHECK(m.front().parity == Parity::odd);
    CHECK(m.front().a < pi / 2);
    for (size_t i = 1; i < m.size(); ++i) CHECK(m[i].parity != m[i - 1].parity);
  }
  CHECK_THROWS_AS(check_interlacing(-1.0, 3), DomainError);
}

TEST_CASE("zero eigenvalue degeneracies") {
  for (int k = 1; k <= 3; ++k) {
    auto odd = zero_mode_degeneracy(-k * k * pi * pi);
    REQUIRE(odd.degenerate);
    CHECK(odd.residual <= 1e-9);
    CHECK(odd.extra_modes.front().parity == Parity::odd);
    CHECK(odd.extra_modes.front().a == doctest::Approx(k * pi).epsilon(1e-14));
    CHECK_FALSE(odd.extra_modes.front().coeff_ratio.has_value());
    auto even = zero_mode_degeneracy(-(2 * k + 1) * (2 * k + 1) * pi * pi / 4);
    REQUIRE(even.degenerate);
    CHECK(even.residual <= 1e-9);
    CHECK(even.extra_modes.front().parity == Parity::even);
  }
  CHECK_FALSE(zero_mode_degeneracy(1.0).degenerate);
  CHECK_FALSE(zero_mode_degeneracy(-5.0).degenerate);
  CHECK(zero_mode_degeneracy(0.0).degenerate);
}

TEST_CASE("trigonometric modes against a dense scan") {
  for (double tau : {-10.0, -30.0, -60.0}) {
    double amax = std::sqrt(-tau / 2);
    auto modes = trig_modes(tau, 50);
    auto odd = scan_roots([tau](double a) { return odd_trig(tau, a); }, 1e-9, amax * (1 - 1e-6), 100000);
    auto even = scan_roots([tau](double a) { return even_trig(tau, a); }, 1e-9, amax * (1 - 1e-6), 100000);
    REQUIRE(modes.size() == odd.size() + even.size());
    for (const auto& m : modes) {
      const auto& ref = m.parity == Parity::odd ? odd : even;
      double nearest = INFINITY;
      for (double a : ref) nearest = std::fmin(nearest, std::fabs(a - m.a));
      CHECK(nearest <= 1e-10 * std::fmax(1.0, m.a));
      CHECK(m.omega < 0);
      CHECK(m.omega > -tau * tau / 4);
      CHECK(m.residual <= 1e-9);
    }
  }
}

TEST_CASE("degenerate point") {
  double a = oracle::bisect([](double x) { return std::sin(2 * x) - 2 * x / 3; }, 1.0, 1.3);
  DegeneratePoint p = degenerate_point();
  CHECK(p.a == doctest::Approx(a).epsilon(1e-14));
  CHECK(p.tau == doctest::Approx(-2 * a * a).epsilon(1e-14));
  CHECK(p.omega == doctest::Approx(-a * a * a * a).epsilon(1e-14));
  CHECK(std::fabs(p.a - 1.13943) <= 1e-4);
  CHECK(std::fabs(p.tau + 2.5966) <= 1e-3);
  CHECK(std::fabs(p.omega + 1.6856) <= 1e-3);
  CHECK(std::fabs(p.c_over_d + 0.4174) <= 1e-3);
  CHECK(p.c_over_d == doctest::Approx(p.c_over_d_alt).epsilon(1e-10));
  CHECK_FALSE(degenerate_mode(-3.0).has_value());
}

TEST_CASE("branch crossings") {
  struct X {
    double tau, a;
  };
  for (X c : {X{-5 * pi * pi, pi}, X{-10 * pi * pi / 4, pi / 2}}) {
    bool odd = false, even = false;
    for (const auto& m : trig_modes(c.tau, 100))
      if (std::fabs(m.a - c.a) < 1e-7) (m.parity == Parity::odd ? odd : even) = true;
    CHECK(odd);
    CHECK(even);
  }
}

TEST_CASE("single-term hyperbolic form excluded") {
  for (double tau : {-0.1, -1.0, -10.0, -100.0})
    for (double b = 0.05; b <= 20; b += 0.05) {
      double a = std::sqrt(b * b - tau / 2);
      CHECK(hyperbolic_residual(tau, a, b).excluded_forms);
    }
  CHECK_THROWS_AS(hyperbolic_residual(-1.0, 1.0, 1.0), Error);
}

TEST_CASE("branch table") {
  auto t = branch_curves(-12.0, -8.0, 5, 4);
  CHECK(t.errors.empty());
  // pi^2 lies in range and is added as an event
  bool has_event = false;
  for (const auto& r : t.rows) has_event = has_event || std::fabs(r.tau + pi * pi) < 1e-15;
  CHECK(has_event);
  for (size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i].tau >= t.rows[i - 1].tau);
    if (t.rows[i].tau == t.rows[i - 1].tau) CHECK(t.rows[i].mode.omega >= t.rows[i - 1].mode.omega);
  }
  CHECK_THROWS_AS(branch_curves(1.0, 0.0, 5, 3), InvalidArgument);
  CHECK_THROWS_AS(branch_curves(0.0, 1.0, 0, 3), InvalidArgument);
}
