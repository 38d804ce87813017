#pragma once

#include <optional>
#include <string>
#include <vector>

namespace freeplate {

enum class Parity { even, odd };
enum class RodRegime { positive, zero, trigonometric, degenerate, hyperbolic_candidate };

const char* to_string(Parity p);
const char* to_string(RodRegime r);

// Eigenpair of u'''' - tau u'' = omega u on (-1, 1) with free ends.
// The mode is c1 * phi1(x) + c2 * phi2(x) with the regime's basis:
//   positive      odd: sin(ax), sinh(bx)            even: cos(ax), cosh(bx)
//   trigonometric odd: sin(ax), sin(bx)             even: cos(ax), cos(bx)
//   degenerate    even: cos(ax), x sin(ax)
//   hyperbolic    odd: cos(ax)sinh(bx), sin(ax)cosh(bx)   even: sin(ax)sinh(bx), cos(ax)cosh(bx)
//   zero          odd: x or sin(ax)                 even: 1 or cos(ax)   (c2 unused)
// Hyperbolic-type coefficients multiply the basis divided by cosh(b).
struct RodMode {
  Parity parity = Parity::odd;
  RodRegime regime = RodRegime::positive;
  double tau = 0.0;
  double a = 0.0;
  double b = 0.0;
  double omega = 0.0;
  double c1 = 1.0;
  double c2 = 0.0;
  std::optional<double> coeff_ratio;  // B/A, D/C, A/B, C/D as appropriate; empty for zero modes
  double residual = 0.0;              // worst relative residual of the two boundary equations
};

double rod_mode_value(const RodMode& m, double x);

// Determinants for tau > 0 side branches, normalized by cosh b; b = sqrt(a^2 + tau)
double det_odd_positive(double tau, double a);
double det_even_positive(double tau, double a);

// trigonometric regime, a^2 + b^2 = -tau: determinants divided by (b - a)
double det_odd_trig(double tau, double a);
double det_even_trig(double tau, double a);

std::vector<RodMode> positive_modes(double tau, int count);

struct ZeroModeInfo {
  bool degenerate = false;
  std::vector<RodMode> extra_modes;
  double residual = 1.0;  // distance of the nearest degeneracy condition from zero
};

ZeroModeInfo zero_mode_degeneracy(double tau, double tol = 1e-9);

std::vector<RodMode> trig_modes(double tau, int count);

struct DegeneratePoint {
  double a;
  double tau;
  double omega;
  double c_over_d;
  double c_over_d_alt;  // same ratio from the second boundary equation
};

DegeneratePoint degenerate_point();
std::optional<RodMode> degenerate_mode(double tau, double tol = 1e-6);

struct HyperbolicCheck {
  double det_odd;
  double det_even;
  bool excluded_forms;  // tanh^2 b < 2 + 4 b^2 / |tau|
};

HyperbolicCheck hyperbolic_residual(double tau, double a, double b);
std::vector<RodMode> hyperbolic_candidates(double tau, int count);

struct BranchRow {
  double tau;
  RodMode mode;
};

struct BranchError {
  double tau;
  std::string message;
};

struct BranchTable {
  std::vector<BranchRow> rows;
  std::vector<BranchError> errors;
};

BranchTable branch_curves(double tau_min, double tau_max, int n_tau, int max_modes);

// k-th odd root of det_odd_positive lies in (k pi, k pi + pi/2), k-th even in (k pi + pi/2, (k+1) pi)
struct InterlacingResult {
  bool holds;
  int checked;
  double worst_margin;  // smallest distance from a root to its interval end
};

InterlacingResult check_interlacing(double tau, int k_max);

}  // namespace freeplate
