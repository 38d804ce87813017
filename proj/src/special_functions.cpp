#include "freeplate/special_functions.hpp"

#include <cmath>
#include <initializer_list>

#include "freeplate/error.hpp"
#include "freeplate/numerics.hpp"

namespace freeplate {

UltraIndex::UltraIndex(int d, int l) : d_(d), l_(l) {
  if (d < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(d));
  if (l < 0) throw DomainError("order must be >= 0, got " + std::to_string(l));
}

long double half_integer_gamma(int n) {
  if (n < 1) throw DomainError("half_integer_gamma: argument must be positive");
  long double g;
  long double x;
  if (n % 2 == 0) {
    g = 1.0L;
    x = 1.0L;
  } else {
    g = std::sqrt(3.14159265358979323846264338327950288L);
    x = 0.5L;
  }
  while (2.0L * x < n) {
    g *= x;
    x += 1.0L;
  }
  return g;
}

double unit_ball_volume(int d) {
  if (d < 1) throw DomainError("unit_ball_volume: d must be >= 1");
  long double pi = 3.14159265358979323846264338327950288L;
  return static_cast<double>(std::pow(pi, 0.5L * d) / half_integer_gamma(d + 2));
}

double unit_sphere_area(int d) { return d * unit_ball_volume(d); }

namespace {

void check_args(int m, double z, const SeriesPolicy& p) {
  if (m < 0 || m > 4) throw DomainError("derivative order must be in 0..4");
  if (!(z >= 0.0)) throw DomainError("argument must be >= 0");
  if (z > p.z_max) throw DomainError("argument exceeds z_max=" + std::to_string(p.z_max));
  if (!(p.rel_tol > 0 && p.rel_tol < 1e-6) || p.max_terms < 50 || !(p.z_max > 0))
    throw InvalidArgument("invalid series policy");
}

long double falling(int p, int m) {
  long double r = 1.0L;
  for (int i = 0; i < m; ++i) r *= (p - i);
  return r;
}

// sum_k sign^k 2^{1-d/2} / (k! Gamma(k + d/2 + l)) (z/2)^{2k+l}, differentiated m times
long double series(const UltraIndex& idx, int m, double zd, bool alternating, const SeriesPolicy& pol) {
  check_args(m, zd, pol);
  const int d = idx.d(), l = idx.l();
  const long double z = zd;
  // coefficient of z^{2k+l}
  long double c = std::pow(2.0L, 1.0L - 0.5L * d - l) / half_integer_gamma(d + 2 * l);
  const long double k_min = std::ceil(0.5L * z);

  long double sum = 0.0L;
  long double zpow = 0.0L;
  bool started = false;
  int small_run = 0;
  for (int k = 0; k < pol.max_terms; ++k) {
    int p = 2 * k + l;
    if (p >= m) {
      if (!started) {
        zpow = std::pow(z, static_cast<long double>(p - m));
        started = true;
      } else {
        zpow *= z * z;
      }
      long double term = c * falling(p, m) * zpow;
      sum += term;
      if (k >= k_min && std::fabs(term) <= pol.rel_tol * std::fabs(sum)) {
        if (++small_run == 3) return sum;
      } else {
        small_run = 0;
      }
    }
    c /= 4.0L * (k + 1) * (k + 0.5L * d + l);
    if (alternating) c = -c;
  }
  throw ConvergenceError("ultraspherical series did not converge within max_terms at z=" +
                         std::to_string(zd));
}

}  // namespace

double ultra_j(const UltraIndex& idx, int m, double z, const SeriesPolicy& policy) {
  return static_cast<double>(series(idx, m, z, true, policy));
}

double ultra_i(const UltraIndex& idx, int m, double z, const SeriesPolicy& policy) {
  return static_cast<double>(series(idx, m, z, false, policy));
}

double first_deriv_zero(const UltraIndex& idx, const SeriesPolicy& policy) {
  const int d = idx.d(), l = idx.l();
  if (l < 1) throw DomainError("first_deriv_zero needs l >= 1");
  const double hi = 2.0 * std::sqrt(static_cast<double>(l) * (d + 2 * l));
  auto f = [&](double z) { return ultra_j(idx, 1, z, policy); };
  const int n = 2000;
  const double h = hi / n;
  auto brackets = bracket_roots(f, {h, hi}, n);
  if (brackets.empty()) throw NoRootError("no zero of j_l' found below " + std::to_string(hi));
  return refine_root(f, brackets.front(), 1e-13);
}

double p11(int d) { return first_deriv_zero(UltraIndex(d, 1)); }

namespace {

RelationResidual rel(const char* name, long double lhs, std::initializer_list<long double> terms) {
  long double rhs = 0.0L;
  for (long double t : terms) rhs += t;
  return {name, true, static_cast<double>(std::fabs(lhs - rhs) / std::fmax(1.0L, std::fabs(lhs)))};
}

}  // namespace

std::array<RelationResidual, 8> recurrence_residuals(const UltraIndex& idx, double zd,
                                                     const SeriesPolicy& policy) {
  if (!(zd > 0)) throw DomainError("recurrence check needs z > 0");
  const int d = idx.d(), l = idx.l();
  const long double z = zd;
  UltraIndex up(d, l + 1);
  long double j = ultra_j(idx, 0, zd, policy), jp = ultra_j(idx, 1, zd, policy),
              jpp = ultra_j(idx, 2, zd, policy), jn = ultra_j(up, 0, zd, policy);
  long double i = ultra_i(idx, 0, zd, policy), ip = ultra_i(idx, 1, zd, policy),
              ipp = ultra_i(idx, 2, zd, policy), in = ultra_i(up, 0, zd, policy);

  std::array<RelationResidual, 8> out;
  out[1] = rel("j2", jp, {l / z * j, -jn});
  out[3] = rel("j4", jpp, {(l * l - l) / (z * z) * j, -j, (d - 1) / z * jn});
  out[5] = rel("i2", ip, {l / z * i, in});
  out[7] = rel("i4", ipp, {(l * l - l) / (z * z) * i, i, -(d - 1) / z * in});
  if (l == 0) {
    out[0] = {"j1", false, 0.0};
    out[2] = {"j3", false, 0.0};
    out[4] = {"i1", false, 0.0};
    out[6] = {"i3", false, 0.0};
    return out;
  }
  UltraIndex down(d, l - 1);
  long double jm = ultra_j(down, 0, zd, policy), im = ultra_i(down, 0, zd, policy);
  out[0] = rel("j1", (d - 2 + 2 * l) / z * j, {jm, jn});
  out[2] = rel("j3", jp, {jm, -(l + d - 2) / z * j});
  out[4] = rel("i1", (d - 2 + 2 * l) / z * i, {im, -in});
  out[6] = rel("i3", ip, {im, -(l + d - 2) / z * i});
  return out;
}

}  // namespace freeplate
