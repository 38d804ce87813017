#include "freeplate/numerics.hpp"

#include <cmath>
#include <limits>

#include "freeplate/error.hpp"

namespace freeplate {

namespace {

double checked(const RealFn& f, double x) {
  double v = f(x);
  if (!std::isfinite(v)) throw EvaluationError(x, "non-finite function value");
  return v;
}

bool opposite(double a, double b) { return (a < 0 && b > 0) || (a > 0 && b < 0); }

}  // namespace

std::vector<Bracket> bracket_roots(const RealFn& f, Interval iv, int grid_n) {
  if (grid_n < 2) throw InvalidArgument("bracket_roots: grid_n must be >= 2");
  if (!(iv.hi > iv.lo)) throw InvalidArgument("bracket_roots: empty interval");

  const double h = (iv.hi - iv.lo) / (grid_n - 1);
  std::vector<Bracket> out;
  double x_prev = iv.lo;
  double f_prev = checked(f, x_prev);
  bool prev_exact = f_prev == 0.0;
  if (prev_exact) out.push_back({x_prev - 0.5 * h, x_prev + 0.5 * h, 0.0, 0.0, true});

  for (int i = 1; i < grid_n; ++i) {
    double x = (i == grid_n - 1) ? iv.hi : iv.lo + i * h;
    double fx = checked(f, x);
    if (fx == 0.0) {
      out.push_back({x - 0.5 * h, x + 0.5 * h, 0.0, 0.0, true});
    } else if (!prev_exact && opposite(f_prev, fx)) {
      out.push_back({x_prev, x, f_prev, fx, false});
    }
    prev_exact = fx == 0.0;
    x_prev = x;
    f_prev = fx;
  }
  return out;
}

double refine_root(const RealFn& f, const Bracket& b, double tol) {
  if (b.exact) return b.center();
  if (!(b.hi > b.lo) || !opposite(b.f_lo, b.f_hi))
    throw InvalidArgument("refine_root: bracket does not straddle a sign change");

  double lo = b.lo, hi = b.hi, flo = b.f_lo, fhi = b.f_hi;
  bool try_secant = true;
  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double x = mid;
    if (try_secant) {
      double s = lo - flo * (hi - lo) / (fhi - flo);
      if (s > lo && s < hi) x = s;
    }
    double fx = checked(f, x);
    if (fx == 0.0) return x;
    double width = hi - lo;
    if (opposite(fx, flo)) {
      hi = x;
      fhi = fx;
    } else {
      lo = x;
      flo = fx;
    }
    try_secant = (hi - lo) <= 0.5 * width;
  }
  // the end with the smaller residual beats the midpoint once secant steps have run one-sided
  return std::fabs(flo) <= std::fabs(fhi) ? lo : hi;
}

namespace {

struct Simpson {
  const RealFn& f;
  const QuadraturePolicy& p;

  double run(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = checked(f, lm), frm = checked(f, rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth >= p.min_depth && std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= p.max_depth) throw DepthExceeded(a, b);
    return run(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           run(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

double integrate_1d(const RealFn& f, Interval iv, const QuadraturePolicy& policy) {
  if (!(policy.abs_tol > 0) || policy.max_depth < 1)
    throw InvalidArgument("integrate_1d: invalid quadrature policy");
  if (iv.lo == iv.hi) return 0.0;
  if (iv.lo > iv.hi) return -integrate_1d(f, {iv.hi, iv.lo}, policy);
  double a = iv.lo, b = iv.hi, m = 0.5 * (a + b);
  double fa = checked(f, a), fm = checked(f, m), fb = checked(f, b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  Simpson s{f, policy};
  return s.run(a, b, fa, fm, fb, whole, policy.abs_tol, 0);
}

Derivative fd_derivative(const RealFn& f, double x, int order, double h0) {
  if (order != 1 && order != 2) throw InvalidArgument("fd_derivative: order must be 1 or 2");
  if (!(h0 > 0)) throw InvalidArgument("fd_derivative: step must be positive");

  double fmax = 0.0;
  auto central = [&](double h) {
    double fp = checked(f, x + h), fm = checked(f, x - h);
    fmax = std::fmax(fmax, std::fmax(std::fabs(fp), std::fabs(fm)));
    if (order == 1) return (fp - fm) / (2.0 * h);
    double f0 = checked(f, x);
    fmax = std::fmax(fmax, std::fabs(f0));
    return (fp - 2.0 * f0 + fm) / (h * h);
  };

  double d0 = central(h0), d1 = central(0.5 * h0), d2 = central(0.25 * h0);
  double r0 = (4.0 * d1 - d0) / 3.0;
  double r1 = (4.0 * d2 - d1) / 3.0;
  double value = (16.0 * r1 - r0) / 15.0;

  double hmin = 0.25 * h0;
  double roundoff = 16.0 * std::numeric_limits<double>::epsilon() * std::fmax(fmax, 1e-300) /
                    (order == 1 ? hmin : hmin * hmin);
  return {value, std::fabs(value - r1) + roundoff};
}

}  // namespace freeplate
