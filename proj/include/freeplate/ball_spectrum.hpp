#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace freeplate {

struct BallTone {
  int d = 2;
  int l = 1;
  double tau = 0.0;
  double radius = 1.0;
  double a = 0.0;
  double b = 0.0;
  double omega = 0.0;  // a^2 b^2
  double gamma = 0.0;  // weight of the i-part in j_l(ar) + gamma i_l(br)
  int k = 0;           // l (l + d - 2)
};

// Normalized boundary determinant of the ball of the given radius: W_l / (b^2 i_l''(bR)).
// On the unit ball its zeros in a are the tones a^2 (a^2 + tau) of angular order l.
double boundary_determinant(int d, int l, double tau, double a, double radius = 1.0);

BallTone fundamental_tone(int d, double tau);
std::optional<BallTone> tone_for_order(int d, int l, double tau);

// fundamental tone solved directly on the ball of the given radius
BallTone fundamental_tone_on_radius(int d, double tau, double radius);

// omega(tau, B_R) = R^{-4} omega(R^2 tau, B_1)
double scaled_tone(int d, double tau, double radius);

struct BoundaryResiduals {
  double moment;     // |M| / |a^2 j''|
  double shear;      // |V| / scale
  double shear_scale;
};

BoundaryResiduals boundary_residuals(const BallTone& tone);

// Radial part of the fundamental mode on the unit ball, extended linearly for r > 1.
class RadialProfile {
 public:
  explicit RadialProfile(const BallTone& tone);
  RadialProfile(int d, double tau, double a, double b, double gamma);

  int d() const { return d_; }
  double tau() const { return tau_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double gamma() const { return gamma_; }

  double value(double r) const;
  double d1(double r) const;
  double d2(double r) const;
  double over_r(double r) const;       // rho / r, with the limit rho'(0) at r = 0
  double gap(double r) const;          // rho - r rho'
  double gap_over_r2(double r) const;  // (rho - r rho') / r^2
  double inner_factor(double r) const; // 6 gap/r^2 + 3 rho'' + tau rho

  // same quotient via recurrence identities, used as a cross-check
  double gap_over_r2_identity(double r) const;

 private:
  int d_;
  double tau_, a_, b_, gamma_;
  double edge_value_, edge_slope_;
};

RadialProfile radial_profile(const BallTone& tone);

// rho''^2 + 3(d-1) A^2/r^4 + tau rho'^2 + tau (d-1) rho^2/r^2 with A = rho - r rho'
double N_of_rho(const RadialProfile& rho, double tau, int d, double r);

// Hessian constant of the free membrane mode j_1(p11 r) on the unit ball
double membrane_hessian_constant(int d);

struct CurveRow {
  double tau;
  std::optional<BallTone> tone;
  std::string error;
};

std::vector<CurveRow> tone_curve(int d, std::span<const double> taus);

struct InertiaCheck {
  double lhs;  // omega
  double rhs;  // lower bound from the inertia estimate
};

InertiaCheck inertia_bound_check(int d, double tau);

}  // namespace freeplate
