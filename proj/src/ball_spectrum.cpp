#include "freeplate/ball_spectrum.hpp"

#include <cmath>

#include "freeplate/error.hpp"
#include "freeplate/numerics.hpp"
#include "freeplate/special_functions.hpp"

namespace freeplate {

namespace {

constexpr int kScanPoints = 4000;

void check_dim_tau(int d, double tau) {
  if (d < 2) throw DomainError("dimension must be >= 2");
  if (!(tau > 0) || !std::isfinite(tau)) throw DomainError("tension must be positive and finite");
}

// boundary rows of j_l(ar) and i_l(br) on the sphere of radius R
struct Rows {
  double mj, mi, vj, vi;
  double scale;  // magnitude of the shear contributions for the residual check
};

Rows boundary_rows(int d, int l, double tau, double a, double radius) {
  UltraIndex idx(d, l);
  const double b = std::sqrt(a * a + tau);
  const double R = radius;
  const double za = a * R, zb = b * R;
  const double k = l * (l + d - 2.0);
  double j = ultra_j(idx, 0, za), jp = ultra_j(idx, 1, za), jpp = ultra_j(idx, 2, za);
  double i = ultra_i(idx, 0, zb), ip = ultra_i(idx, 1, zb), ipp = ultra_i(idx, 2, zb);
  Rows r;
  r.mj = a * a * jpp;
  r.mi = b * b * ipp;
  r.vj = tau * a * jp + k / (R * R) * (a * jp - j / R) + a * a * a * jp;
  r.vi = tau * b * ip + k / (R * R) * (b * ip - i / R) - b * b * b * ip;
  r.scale = 0.0;
  double gamma = -r.mj / r.mi;
  r.scale = std::fabs(tau * a * jp) + std::fabs(a * a * a * jp) +
            std::fabs(gamma) * (std::fabs(tau * b * ip) + std::fabs(b * b * b * ip));
  return r;
}

BallTone make_tone(int d, int l, double tau, double a, double radius) {
  Rows r = boundary_rows(d, l, tau, a, radius);
  BallTone t;
  t.d = d;
  t.l = l;
  t.tau = tau;
  t.radius = radius;
  t.a = a;
  t.b = std::sqrt(a * a + tau);
  t.omega = a * a * t.b * t.b;
  t.gamma = -r.mj / r.mi;
  t.k = l * (l + d - 2);
  return t;
}

std::optional<double> first_root(int d, int l, double tau, double radius, double a_cap) {
  auto f = [&](double a) { return boundary_determinant(d, l, tau, a, radius); };
  const double h = a_cap / kScanPoints;
  auto br = bracket_roots(f, {h, a_cap}, kScanPoints);
  if (br.empty()) return std::nullopt;
  return refine_root(f, br.front(), 1e-15 * a_cap);
}

}  // namespace

double boundary_determinant(int d, int l, double tau, double a, double radius) {
  check_dim_tau(d, tau);
  if (!(a > 0)) throw DomainError("determinant needs a > 0");
  if (!(radius > 0)) throw DomainError("radius must be positive");
  Rows r = boundary_rows(d, l, tau, a, radius);
  return r.mj * r.vi / r.mi - r.vj;
}

BallTone fundamental_tone_on_radius(int d, double tau, double radius) {
  check_dim_tau(d, tau);
  if (!(radius > 0)) throw DomainError("radius must be positive");
  const double cap = 3.0 * p11(d) / radius;
  auto a = first_root(d, 1, tau, radius, cap);
  if (!a) throw NoRootError("no l=1 root of the boundary determinant below a=" + std::to_string(cap));
  return make_tone(d, 1, tau, *a, radius);
}

BallTone fundamental_tone(int d, double tau) {
  BallTone t = fundamental_tone_on_radius(d, tau, 1.0);
  const double p = p11(d);
  if (t.omega < tau * p * p || t.omega > tau * (d + 2))
    throw BoundViolation("fundamental tone " + std::to_string(t.omega) + " outside [tau p11^2, tau (d+2)]");
  return t;
}

std::optional<BallTone> tone_for_order(int d, int l, double tau) {
  check_dim_tau(d, tau);
  if (l < 0) throw DomainError("order must be >= 0");
  if (l == 1) return fundamental_tone(d, tau);
  auto a = first_root(d, l, tau, 1.0, 3.0 * p11(d));
  if (!a) return std::nullopt;
  return make_tone(d, l, tau, *a, 1.0);
}

double scaled_tone(int d, double tau, double radius) {
  if (!(radius > 0)) throw DomainError("radius must be positive");
  double r2 = radius * radius;
  return fundamental_tone(d, r2 * tau).omega / (r2 * r2);
}

BoundaryResiduals boundary_residuals(const BallTone& t) {
  Rows r = boundary_rows(t.d, t.l, t.tau, t.a, t.radius);
  BoundaryResiduals out;
  out.moment = std::fabs(r.mj + t.gamma * r.mi) / std::fmax(std::fabs(r.mj), 1e-300);
  out.shear_scale = r.scale;
  out.shear = std::fabs(r.vj + t.gamma * r.vi) / std::fmax(r.scale, 1e-300);
  return out;
}

RadialProfile::RadialProfile(const BallTone& t) : RadialProfile(t.d, t.tau, t.a, t.b, t.gamma) {
  if (t.l != 1) throw InvalidArgument("radial profile needs an l=1 tone");
  if (t.radius != 1.0) throw InvalidArgument("radial profile is defined on the unit ball");
}

RadialProfile::RadialProfile(int d, double tau, double a, double b, double gamma)
    : d_(d), tau_(tau), a_(a), b_(b), gamma_(gamma) {
  if (d < 2) throw DomainError("dimension must be >= 2");
  edge_value_ = 0.0;
  edge_slope_ = 0.0;
  edge_value_ = value(1.0);
  edge_slope_ = d1(1.0);
}

double RadialProfile::value(double r) const {
  if (r > 1.0) return edge_value_ + (r - 1.0) * edge_slope_;
  UltraIndex idx(d_, 1);
  return ultra_j(idx, 0, a_ * r) + gamma_ * ultra_i(idx, 0, b_ * r);
}

double RadialProfile::d1(double r) const {
  if (r > 1.0) return edge_slope_;
  UltraIndex idx(d_, 1);
  return a_ * ultra_j(idx, 1, a_ * r) + gamma_ * b_ * ultra_i(idx, 1, b_ * r);
}

double RadialProfile::d2(double r) const {
  if (r > 1.0) return 0.0;
  UltraIndex idx(d_, 1);
  return a_ * a_ * ultra_j(idx, 2, a_ * r) + gamma_ * b_ * b_ * ultra_i(idx, 2, b_ * r);
}

double RadialProfile::over_r(double r) const {
  if (r == 0.0) return d1(0.0);
  return value(r) / r;
}

double RadialProfile::gap(double r) const {
  if (r > 1.0) return edge_value_ - edge_slope_;
  UltraIndex idx(d_, 2);
  double za = a_ * r, zb = b_ * r;
  return za * ultra_j(idx, 0, za) - gamma_ * zb * ultra_i(idx, 0, zb);
}

double RadialProfile::gap_over_r2(double r) const {
  if (r == 0.0) return 0.0;
  if (r > 1.0) return (edge_value_ - edge_slope_) / (r * r);
  UltraIndex idx(d_, 2);
  return (a_ * ultra_j(idx, 0, a_ * r) - gamma_ * b_ * ultra_i(idx, 0, b_ * r)) / r;
}

double RadialProfile::gap_over_r2_identity(double r) const {
  if (r > 1.0) return gap_over_r2(r);
  UltraIndex i1(d_, 1), i3(d_, 3);
  double za = a_ * r, zb = b_ * r;
  return (a_ * a_ * (ultra_j(i1, 0, za) + ultra_j(i3, 0, za)) +
          gamma_ * b_ * b_ * (ultra_i(i3, 0, zb) - ultra_i(i1, 0, zb))) /
         (d_ + 2.0);
}

double RadialProfile::inner_factor(double r) const {
  return 6.0 * gap_over_r2(r) + 3.0 * d2(r) + tau_ * value(r);
}

RadialProfile radial_profile(const BallTone& tone) { return RadialProfile(tone); }

double N_of_rho(const RadialProfile& rho, double tau, int d, double r) {
  if (r < 0) throw DomainError("radius must be >= 0");
  double p2 = rho.d2(r), p1 = rho.d1(r), q = rho.over_r(r), A = rho.gap_over_r2(r);
  return p2 * p2 + 3.0 * (d - 1) * A * A + tau * p1 * p1 + tau * (d - 1) * q * q;
}

double membrane_hessian_constant(int d) {
  RadialProfile v(d, 0.0, p11(d), 0.0, 0.0);
  QuadraturePolicy pol;
  pol.abs_tol = 1e-13;
  auto num = integrate_1d(
      [&](double r) {
        double p2 = v.d2(r), A = v.gap_over_r2(r);
        return (p2 * p2 + 3.0 * (d - 1) * A * A) * std::pow(r, d - 1);
      },
      {0.0, 1.0}, pol);
  auto den = integrate_1d(
      [&](double r) {
        double p = v.value(r);
        return p * p * std::pow(r, d - 1);
      },
      {0.0, 1.0}, pol);
  return num / den;
}

std::vector<CurveRow> tone_curve(int d, std::span<const double> taus) {
  std::vector<CurveRow> rows;
  rows.reserve(taus.size());
  for (double tau : taus) {
    CurveRow row{tau, std::nullopt, {}};
    try {
      row.tone = fundamental_tone(d, tau);
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

InertiaCheck inertia_bound_check(int d, double tau) {
  BallTone t = fundamental_tone(d, tau);
  // the l=1 tone is d-fold degenerate; sum of 1/omega over the first d nontrivial tones
  double lhs = tau * unit_ball_volume(d) * d / t.omega;
  double rhs = unit_sphere_area(d) / (d + 2.0);
  return {lhs, rhs};
}

}  // namespace freeplate
