#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "freeplate/error.hpp"
#include "freeplate/numerics.hpp"

using namespace freeplate;

TEST_CASE("brackets every sign change of sin") {
  auto br = bracket_roots([](double x) { return std::sin(x); }, {0.5, 20.0}, 1000);
  REQUIRE(br.size() == 6);
  for (size_t k = 0; k < br.size(); ++k) {
    double r = refine_root([](double x) { return std::sin(x); }, br[k], 1e-15);
    CHECK(r == doctest::Approx((k + 1) * M_PI).epsilon(1e-15));
  }
}

TEST_CASE("exact zero on a grid point") {
  auto br = bracket_roots([](double x) { return x - 1.0; }, {0.0, 2.0}, 3);
  REQUIRE(br.size() == 1);
  CHECK(br[0].exact);
  CHECK(refine_root([](double x) { return x - 1.0; }, br[0], 1e-12) == 1.0);
}

TEST_CASE("refine converges on a one-sided function") {
  // regula falsi alone stalls on this shape
  auto f = [](double x) { return std::pow(x, 10) - 0.5; };
  auto br = bracket_roots(f, {0.0, 1.5}, 4);
  REQUIRE(br.size() == 1);
  CHECK(refine_root(f, br[0], 1e-15) == doctest::Approx(std::pow(0.5, 0.1)).epsilon(1e-15));
}

TEST_CASE("refine rejects a bracket without a sign change") {
  Bracket b{0.0, 1.0, 1.0, 2.0};
  CHECK_THROWS_AS(refine_root([](double x) { return x + 1; }, b, 1e-12), InvalidArgument);
}

TEST_CASE("non-finite values are reported with their abscissa") {
  try {
    bracket_roots([](double x) { return x > 0.5 ? NAN : x; }, {0.0, 1.0}, 10);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.abscissa > 0.5);
  }
}

TEST_CASE("adaptive Simpson") {
  CHECK(integrate_1d([](double x) { return std::exp(x); }, {0, 1}, {1e-14, 40, 2}) ==
        doctest::Approx(std::exp(1.0) - 1).epsilon(1e-13));
  CHECK(integrate_1d([](double x) { return 1 / (1 + 25 * x * x); }, {-1, 1}, {1e-13, 40, 2}) ==
        doctest::Approx(0.4 * std::atan(5.0)).epsilon(1e-12));
  // reversed interval flips the sign
  CHECK(integrate_1d([](double x) { return x * x; }, {1, 0}) == doctest::Approx(-1.0 / 3).epsilon(1e-12));
  CHECK_THROWS_AS(integrate_1d([](double x) { return std::sin(1 / x); }, {1e-9, 1}, {1e-15, 8, 2}), DepthExceeded);
  CHECK_THROWS_AS(integrate_1d([](double x) { return x; }, {0, 1}, {-1, 40, 2}), InvalidArgument);
}

TEST_CASE("finite differences with an error estimate") {
  Derivative d1 = fd_derivative([](double x) { return std::sin(x); }, 0.7, 1, 1e-2);
  CHECK(std::fabs(d1.value - std::cos(0.7)) <= std::fmax(d1.error, 1e-12));
  CHECK(std::fabs(d1.value - std::cos(0.7)) < 1e-10);
  Derivative d2 = fd_derivative([](double x) { return std::exp(2 * x); }, 0.3, 2, 1e-2);
  CHECK(d2.value == doctest::Approx(4 * std::exp(0.6)).epsilon(1e-8));
  CHECK_THROWS_AS(fd_derivative([](double x) { return x; }, 0, 3, 1e-2), InvalidArgument);
}
