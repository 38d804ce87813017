#include <array>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "freeplate/error.hpp"
#include "freeplate/isoperimetric.hpp"
#include "freeplate/numerics.hpp"
#include "freeplate/special_functions.hpp"

namespace freeplate {

double poly_P(double x, int d) {
  double D = d;
  return 24 * D * D * D * D + 60 * D * D * D - 120 * D * D - 432 * D - 40 * D * D * D * x - 119 * D * D * x -
         6 * D * x + 432 * x + 43 * D * D * x * x + 113 * D * x * x + 54 * x * x - 15 * D * x * x * x -
         30 * x * x * x;
}

double poly_Q(double x, double s) {
  return (1 - 3 * x / (2 * s)) * (s - x) * (36 - 5 * x) * (12 + 4 * x) - (36 * s + (6 * s - 36) * x) * (12 - 7 * x);
}

long long poly_g(long long d) { return 24 * d * d * d * d - 60 * d * d * d - 477 * d * d - 855 * d - 810; }

long long poly_g_prime(long long d) { return 96 * d * d * d - 180 * d * d - 954 * d - 855; }

namespace {

// dense coefficient vectors, lowest degree first
using Coeffs = std::vector<double>;

Coeffs mul(const Coeffs& p, const Coeffs& q) {
  Coeffs r(p.size() + q.size() - 1, 0.0);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

Coeffs sub(Coeffs p, const Coeffs& q) {
  if (q.size() > p.size()) p.resize(q.size(), 0.0);
  for (size_t i = 0; i < q.size(); ++i) p[i] -= q[i];
  return p;
}

double eval(const Coeffs& p, double x) {
  double v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

// real roots of the derivative of a cubic c0 + c1 x + c2 x^2 + c3 x^3
std::vector<double> cubic_critical_points(const Coeffs& c) {
  double A = 3 * c[3], B = 2 * c[2], C = c[1];
  std::vector<double> out;
  double disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  double sq = std::sqrt(disc);
  double q = -0.5 * (B + std::copysign(sq, B));
  out.push_back(q / A);
  if (q != 0) out.push_back(C / q);
  return out;
}

Coeffs q_over_x(double s) {
  Coeffs Q = sub(mul(mul(mul({1.0, -3.0 / (2 * s)}, {s, -1.0}), {36.0, -5.0}), {12.0, 4.0}),
                 mul({36 * s, 6 * s - 36}, {12.0, -7.0}));
  return Coeffs(Q.begin() + 1, Q.end());
}

}  // namespace

CheckReport polynomial_lemma_check() {
  CheckReport rep;
  rep.add("poly1-g7", poly_g(7) == 6876, static_cast<double>(poly_g(7)), 0.0);
  rep.add("poly1-gprime5", poly_g_prime(5) == 1875, static_cast<double>(poly_g_prime(5)), 0.0);

  const int pts = 10000;
  double min_p = INFINITY;
  for (int d = 3; d <= 50; ++d) {
    double hi = 3.0 * (d + 2) / (d + 5);
    for (int i = 1; i <= pts; ++i) min_p = std::fmin(min_p, poly_P(hi * i / (pts + 1), d));
  }
  rep.add("poly1-nonneg", min_p >= 0, min_p, 0.0);

  // P(x, 3) as a cubic in x
  Coeffs p3 = {24 * 81 + 60 * 27 - 120 * 9 - 432 * 3, -40 * 27 - 119 * 9 - 6 * 3 + 432.0, 43 * 9 + 113 * 3 + 54.0,
               -15 * 3 - 30.0};
  double crit = NAN;
  for (double c : cubic_critical_points(p3))
    if (c > 0 && c < 15.0 / 8) crit = eval(p3, c);
  rep.add("poly1-P3-critical", std::fabs(crit - 79) <= 0.05 * 79, crit, 0.05 * 79);

  const double s = p11(2) * p11(2);
  Coeffs g = q_over_x(s);
  double min_q = INFINITY;
  for (int i = 0; i < pts; ++i) min_q = std::fmin(min_q, eval(g, (12.0 / 7) * i / (pts - 1)));
  rep.add("poly2-positive", min_q > 0, min_q, 0.0);
  double qcrit = NAN;
  for (double c : cubic_critical_points(g))
    if (c > 0 && c < 12.0 / 7) qcrit = eval(g, c);
  rep.add("poly2-critical-positive", qcrit > 0, qcrit, 0.0);
  return rep;
}

namespace {

double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

// (c1 r + c2 r^2 + c3 r^3) exp(-alpha r^2) with closed-form derivatives
struct TestProfile {
  double c1, c2, c3, alpha;
  double value(double r) const { return (c1 * r + c2 * r * r + c3 * r * r * r) * std::exp(-alpha * r * r); }
  double d1(double r) const {
    double p = c1 * r + c2 * r * r + c3 * r * r * r, dp = c1 + 2 * c2 * r + 3 * c3 * r * r;
    return (dp - 2 * alpha * r * p) * std::exp(-alpha * r * r);
  }
  double d2(double r) const {
    double p = c1 * r + c2 * r * r + c3 * r * r * r, dp = c1 + 2 * c2 * r + 3 * c3 * r * r;
    double ddp = 2 * c2 + 6 * c3 * r;
    return (ddp - 4 * alpha * r * dp - 2 * alpha * p + 4 * alpha * alpha * r * r * p) * std::exp(-alpha * r * r);
  }
};

struct Sums {
  double u2, du2, d2u2, lap2;
};

Sums closed_form(const TestProfile& rho, int d, double r) {
  double p = rho.value(r), p1 = rho.d1(r), p2 = rho.d2(r);
  double A = p - r * p1;
  return {p * p, (d - 1) * p * p / (r * r) + p1 * p1, p2 * p2 + 3 * (d - 1) * A * A / std::pow(r, 4),
          std::pow((d - 1) * A / (r * r) - p2, 2)};
}

Sums finite_difference(const TestProfile& rho, int d, const Point& x0) {
  const double h = 2e-2;
  Sums s{0, 0, 0, 0};
  for (int k = 0; k < d; ++k) {
    auto u_at = [&](const Point& x) {
      double r = 0;
      for (double v : x) r += v * v;
      r = std::sqrt(r);
      return x[k] * rho.value(r) / r;
    };
    auto along = [&](const Point& dir, double t) {
      Point x = x0;
      for (int i = 0; i < d; ++i) x[i] += t * dir[i];
      return u_at(x);
    };
    double u = u_at(x0);
    s.u2 += u * u;
    std::vector<Point> axes(d, Point(d, 0.0));
    for (int i = 0; i < d; ++i) axes[i][i] = 1.0;
    std::vector<std::vector<double>> H(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i) {
      double g = fd_derivative([&](double t) { return along(axes[i], t); }, 0.0, 1, h).value;
      s.du2 += g * g;
      H[i][i] = fd_derivative([&](double t) { return along(axes[i], t); }, 0.0, 2, h).value;
    }
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        Point plus(d, 0.0), minus(d, 0.0);
        plus[i] = plus[j] = 1.0;
        minus[i] = 1.0;
        minus[j] = -1.0;
        double dp = fd_derivative([&](double t) { return along(plus, t); }, 0.0, 2, h).value;
        double dm = fd_derivative([&](double t) { return along(minus, t); }, 0.0, 2, h).value;
        H[i][j] = H[j][i] = 0.25 * (dp - dm);
      }
    double lap = 0;
    for (int i = 0; i < d; ++i) {
      lap += H[i][i];
      for (int j = 0; j < d; ++j) s.d2u2 += H[i][j] * H[i][j];
    }
    s.lap2 += lap * lap;
  }
  return s;
}

double rel_err(double fd, double exact) { return std::fabs(fd - exact) / std::fmax(std::fabs(exact), 1e-12); }

// sparse polynomial with integer coefficients, keyed by exponent vector
using Mono = std::array<int, 3>;
using IntPoly = std::map<Mono, long long>;

IntPoly add(const IntPoly& p, const IntPoly& q, long long sq = 1) {
  IntPoly r = p;
  for (auto& [m, c] : q) r[m] += sq * c;
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

IntPoly mul(const IntPoly& p, const IntPoly& q) {
  IntPoly r;
  for (auto& [m1, c1] : p)
    for (auto& [m2, c2] : q) r[{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}] += c1 * c2;
  return add(r, {});
}

IntPoly diff(const IntPoly& p, int i) {
  IntPoly r;
  for (auto& [m, c] : p)
    if (m[i] > 0) {
      Mono n = m;
      --n[i];
      r[n] += c * m[i];
    }
  return add(r, {});
}

IntPoly laplacian(const IntPoly& p, int d) {
  IntPoly r;
  for (int i = 0; i < d; ++i) r = add(r, diff(diff(p, i), i));
  return r;
}

IntPoly random_poly(std::mt19937_64& gen, int d, int degree) {
  IntPoly p;
  for (int e0 = 0; e0 <= degree; ++e0)
    for (int e1 = 0; e0 + e1 <= degree; ++e1)
      for (int e2 = 0; e0 + e1 + e2 <= degree; ++e2) {
        if (d < 3 && e2 > 0) continue;
        long long c = static_cast<long long>(gen() % 11) - 5;
        if (c != 0) p[{e0, e1, e2}] = c;
      }
  return p;
}

// number of coefficients where 2|D^2u|^2 and Delta|Du|^2 - 2 D(Delta u).Du differ
long long ptwise_mismatch(const IntPoly& u, int d) {
  IntPoly lhs, grad2, cross;
  IntPoly lap = laplacian(u, d);
  for (int i = 0; i < d; ++i) {
    IntPoly ui = diff(u, i);
    grad2 = add(grad2, mul(ui, ui));
    cross = add(cross, mul(diff(lap, i), ui));
    for (int j = 0; j < d; ++j) {
      IntPoly uij = diff(ui, j);
      lhs = add(lhs, mul(uij, uij));
    }
  }
  IntPoly rhs = add(laplacian(grad2, d), cross, -2);
  IntPoly diffp = add(add(lhs, lhs), rhs, -1);
  return static_cast<long long>(diffp.size());
}

}  // namespace

CheckReport calculus_identity_check(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  double worst[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 20; ++trial) {
    int d = trial < 10 ? 2 : 3;
    TestProfile rho{0.5 + uniform01(gen), 2 * uniform01(gen) - 1, 2 * uniform01(gen) - 1, 0.2 + 0.8 * uniform01(gen)};
    Point x(d);
    double r = 0;
    do {
      r = 0;
      for (double& v : x) {
        v = 2.4 * uniform01(gen) - 1.2;
        r += v * v;
      }
      r = std::sqrt(r);
    } while (r < 0.3 || r > 1.2);
    Sums exact = closed_form(rho, d, r), fd = finite_difference(rho, d, x);
    worst[0] = std::fmax(worst[0], rel_err(fd.u2, exact.u2));
    worst[1] = std::fmax(worst[1], rel_err(fd.du2, exact.du2));
    worst[2] = std::fmax(worst[2], rel_err(fd.d2u2, exact.d2u2));
    worst[3] = std::fmax(worst[3], rel_err(fd.lap2, exact.lap2));
  }
  CheckReport rep;
  rep.add("derivs-sum-u2", worst[0] <= 1e-6, worst[0], 1e-6);
  rep.add("derivs-sum-grad2", worst[1] <= 1e-6, worst[1], 1e-6);
  rep.add("derivs-sum-hessian2", worst[2] <= 1e-6, worst[2], 1e-6);
  rep.add("derivs-sum-laplacian2", worst[3] <= 1e-6, worst[3], 1e-6);

  long long mismatches = 0;
  for (int d = 2; d <= 3; ++d)
    for (int k = 0; k < 25; ++k) mismatches += ptwise_mismatch(random_poly(gen, d, 1 + k % 4), d);
  rep.add("ptwise-identity", mismatches == 0, static_cast<double>(mismatches), 0.0);
  return rep;
}

}  // namespace freeplate
