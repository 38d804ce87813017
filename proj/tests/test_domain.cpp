#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "freeplate/domain.hpp"
#include "freeplate/error.hpp"
#include "freeplate/special_functions.hpp"

using namespace freeplate;

namespace {

// ray intervals by stepping along the ray and testing membership
double marched_length(const DomainSpec& s, const Point& o, const Point& u, double tmax) {
  const int n = 200000;
  double len = 0, h = tmax / n;
  for (int i = 0; i < n; ++i) {
    double t = (i + 0.5) * h;
    Point x(o.size());
    for (size_t k = 0; k < o.size(); ++k) x[k] = o[k] + t * u[k];
    if (s.contains(x)) len += h;
  }
  return len;
}

double interval_length(const std::vector<std::pair<double, double>>& iv) {
  double s = 0;
  for (auto [a, b] : iv) s += b - a;
  return s;
}

}  // namespace

TEST_CASE("parsing") {
  auto e = parse_domain("kind=ellipse aspect=2");
  CHECK(e.kind() == DomainKind::ellipsoid);
  CHECK(e.volume() == doctest::Approx(2 * M_PI));
  auto b = parse_domain("# a comment line\nkind=box\nsides=1,2,3  # trailing\n");
  CHECK(b.dim() == 3);
  CHECK(b.volume() == doctest::Approx(6.0));
  auto p = parse_domain("kind=polygon vertices=0,0;1,0;0,1 center=0.5,0.5");
  CHECK(p.volume() == doctest::Approx(0.5));
  CHECK(p.contains({0.6, 0.6}));
  CHECK(parse_domain("kind=ball d=4 radius=2").volume() == doctest::Approx(unit_ball_volume(4) * 16));
  CHECK(parse_domain("kind=lshape").volume() == doctest::Approx(3.0));
  CHECK_THROWS_AS(parse_domain("kind=ball radius=1 radius=2"), ParseError);
  CHECK_THROWS_AS(parse_domain("kind=ball colour=red"), ParseError);
  CHECK_THROWS_AS(parse_domain("radius=1"), ParseError);
  CHECK_THROWS_AS(parse_domain("kind=blob"), ParseError);
  CHECK_THROWS_AS(parse_domain("kind=ball radius"), ParseError);
  CHECK_THROWS_AS(parse_domain("kind=ball radius=abc"), ParseError);
  CHECK_THROWS_AS(parse_domain("kind=ball radius=0"), DomainError);
  CHECK_THROWS_AS(parse_domain("kind=polygon vertices=0,0;1,1;2,2"), DomainError);
}

TEST_CASE("normalization, translation, centroid") {
  auto sq = normalize_volume(parse_domain("kind=square"));
  CHECK(sq.volume() == doctest::Approx(M_PI).epsilon(1e-14));
  auto l = parse_domain("kind=lshape");
  Point c = l.centroid();
  CHECK(c[0] == doctest::Approx(5.0 / 6));
  CHECK(c[1] == doctest::Approx(5.0 / 6));
  auto ls = l.scaled(2.0);
  CHECK(ls.volume() == doctest::Approx(12.0));
  CHECK(ls.centroid()[0] == doctest::Approx(5.0 / 6));
  auto lt = l.translated({1.0, -2.0});
  CHECK(lt.contains({1.5, -1.5}));
  CHECK_FALSE(lt.contains({2.5, -0.5}));
  CHECK(lt.bounding_radius() >= std::hypot(3.0, 2.0) - 1e-12);
}

TEST_CASE("ray intervals against marching") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::vector<DomainSpec> doms = {parse_domain("kind=ellipse aspect=2"), parse_domain("kind=box sides=2,1,0.5"),
                                  parse_domain("kind=lshape"), parse_domain("kind=ball d=3 radius=1.3"),
                                  parse_domain("kind=polygon vertices=0,0;3,0;3,3;2,3;2,1;1,1;1,3;0,3")};
  for (const auto& s : doms) {
    for (int trial = 0; trial < 8; ++trial) {
      Point o = s.centroid(), u(s.dim());
      double n = 0;
      for (auto& x : u) {
        x = g(rng);
        n += x * x;
      }
      for (auto& x : u) x /= std::sqrt(n);
      auto iv = s.ray_intervals(o, u);
      double tmax = 2 * s.bounding_radius() + 1;
      CHECK(interval_length(iv) == doctest::Approx(marched_length(s, o, u, tmax)).epsilon(1e-4));
    }
  }
}

TEST_CASE("direction samplers") {
  for (int d : {2, 3, 5}) {
    DirectionSampler a(d, 42, 4096), b(d, 42, 4096), c(d, 43, 4096);
    REQUIRE(a.size() == 4096);
    CHECK(a.directions() == b.directions());
    CHECK(a.directions() != c.directions());
    Point mean(d, 0.0);
    double second = 0;
    for (const auto& u : a.directions()) {
      double n = 0;
      for (int k = 0; k < d; ++k) {
        n += u[k] * u[k];
        mean[k] += u[k] / a.size();
      }
      CHECK(n == doctest::Approx(1.0).epsilon(1e-14));
      second += u[0] * u[0] / a.size();
    }
    for (double m : mean) CHECK(std::fabs(m) < (d >= 4 ? 0.05 : 1e-3));
    CHECK(second == doctest::Approx(1.0 / d).epsilon(d >= 4 ? 0.1 : 1e-3));
  }
}

TEST_CASE("radial table") {
  RadialTable t([](double r) { return std::cos(r); }, 2, 3.0);
  for (double x : {0.0, 0.3, 1.0, 1.77, 2.999, 3.0}) {
    double exact = x * std::sin(x) + std::cos(x) - 1;  // int_0^x cos(r) r dr
    CHECK(t.cumulative(x) == doctest::Approx(exact).epsilon(1e-12).scale(1));
  }
  // kink at r = 1 is not smeared by partial cells
  RadialTable k([](double r) { return r < 1 ? r : 2 - r; }, 2, 2.0);
  double x = 1.0007;  // int_0^1 r^2 + int_1^x (2 - r) r
  double exact = 1.0 / 3 + (x * x - 1) - (x * x * x - 1) / 3;
  CHECK(k.cumulative(x) == doctest::Approx(exact).epsilon(1e-12).scale(1));
}

TEST_CASE("radial integrals") {
  DirectionSampler s2(2, 1), s3(3, 1);
  auto one = [](double) { return 1.0; };
  auto ball = DomainSpec::ball(3, 1.0);
  CHECK(radial_integral(ball, {0, 0, 0}, one, s3) == doctest::Approx(4 * M_PI / 3).epsilon(1e-12));
  auto sq = parse_domain("kind=square");
  CHECK(radial_integral(sq, {0, 0}, one, s2) == doctest::Approx(1.0).epsilon(1e-3));
  // int over the unit disk of r^2 = pi/2 from an off-center point
  auto disk = DomainSpec::ball(2, 1.0);
  RadialTable tab([](double r) { return r * r; }, 2, 3.0);
  Point c = {0.2, -0.1};
  double expect = M_PI / 2 + M_PI * (0.04 + 0.01);
  CHECK(radial_integral(disk, c, tab, s2) == doctest::Approx(expect).epsilon(1e-5));
  CHECK(inside_fraction(disk, {0, 0}, 0.5, s2) == 1.0);
  CHECK(inside_fraction(disk, {0, 0}, 1.5, s2) == 0.0);
}
