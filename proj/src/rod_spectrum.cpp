#include "freeplate/rod_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "freeplate/error.hpp"
#include "freeplate/numerics.hpp"

namespace freeplate {

using std::numbers::pi;

const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

const char* to_string(RodRegime r) {
  switch (r) {
    case RodRegime::positive: return "positive";
    case RodRegime::zero: return "zero";
    case RodRegime::trigonometric: return "trig";
    case RodRegime::degenerate: return "degenerate";
    case RodRegime::hyperbolic_candidate: return "hyperbolic_candidate";
  }
  return "unknown";
}

namespace {

constexpr int kScanPoints = 4000;

// value and first three derivatives at x = 1
struct Jet {
  double v, d1, d2, d3;
};

Jet sin_jet(double a) {
  double s = std::sin(a), c = std::cos(a);
  return {s, a * c, -a * a * s, -a * a * a * c};
}

Jet cos_jet(double a) {
  double s = std::sin(a), c = std::cos(a);
  return {c, -a * s, -a * a * c, a * a * a * s};
}

// sinh(bx) / cosh(b) and cosh(bx) / cosh(b)
Jet sinh_jet(double b) {
  double t = std::tanh(b);
  return {t, b, b * b * t, b * b * b};
}

Jet cosh_jet(double b) {
  double t = std::tanh(b);
  return {1.0, b * t, b * b, b * b * b * t};
}

Jet x_sin_jet(double a) {
  double s = std::sin(a), c = std::cos(a);
  return {s, s + a * c, 2 * a * c - a * a * s, -3 * a * a * s - a * a * a * c};
}

Jet product(const Jet& f, const Jet& g) {
  return {f.v * g.v, f.d1 * g.v + f.v * g.d1, f.d2 * g.v + 2 * f.d1 * g.d1 + f.v * g.d2,
          f.d3 * g.v + 3 * f.d2 * g.d1 + 3 * f.d1 * g.d2 + f.v * g.d3};
}

// free-end conditions: u''(1) = 0 and tau u'(1) - u'''(1) = 0
struct Rows {
  double m1, m2, v1, v2;
};

Rows rows_for(double tau, const Jet& p, const Jet& q) {
  return {p.d2, q.d2, tau * p.d1 - p.d3, tau * q.d1 - q.d3};
}

std::pair<Jet, Jet> basis(RodRegime regime, Parity parity, double a, double b) {
  bool odd = parity == Parity::odd;
  switch (regime) {
    case RodRegime::positive:
      return odd ? std::pair{sin_jet(a), sinh_jet(b)} : std::pair{cos_jet(a), cosh_jet(b)};
    case RodRegime::trigonometric:
      return odd ? std::pair{sin_jet(a), sin_jet(b)} : std::pair{cos_jet(a), cos_jet(b)};
    case RodRegime::degenerate:
      return {cos_jet(a), x_sin_jet(a)};
    case RodRegime::hyperbolic_candidate:
      return odd ? std::pair{product(cos_jet(a), sinh_jet(b)), product(sin_jet(a), cosh_jet(b))}
                 : std::pair{product(sin_jet(a), sinh_jet(b)), product(cos_jet(a), cosh_jet(b))};
    case RodRegime::zero:
      break;
  }
  throw InvalidArgument("no two-term basis for zero modes");
}

double row_residual(double p, double q, double c1, double c2) {
  double den = std::fabs(p * c1) + std::fabs(q * c2);
  if (den == 0.0) return 0.0;
  return std::fabs(p * c1 + q * c2) / den;
}

// coefficients from the better conditioned boundary row, scaled so max |c| = 1
void fill_coefficients(RodMode& m) {
  auto [p, q] = basis(m.regime, m.parity, m.a, m.b);
  Rows r = rows_for(m.tau, p, q);
  double s2 = m.a * m.a + m.b * m.b;
  double m_scale = std::fmax(s2, 1e-300);
  double v_scale = std::fmax(std::fabs(m.tau) * (m.a + m.b) + std::pow(m.a, 3) + std::pow(m.b, 3) + s2, 1e-300);
  double m_size = (std::fabs(r.m1) + std::fabs(r.m2)) / m_scale;
  double v_size = (std::fabs(r.v1) + std::fabs(r.v2)) / v_scale;
  double c1, c2;
  if (m_size >= v_size) {
    c1 = r.m2;
    c2 = -r.m1;
  } else {
    c1 = r.v2;
    c2 = -r.v1;
  }
  double n = std::fmax(std::fabs(c1), std::fabs(c2));
  if (n == 0.0) throw NoRootError("rod boundary rows vanish; no coefficient vector");
  m.c1 = c1 / n;
  m.c2 = c2 / n;
  m.residual = std::fmax(row_residual(r.m1, r.m2, m.c1, m.c2), row_residual(r.v1, r.v2, m.c1, m.c2));

  double ch = std::cosh(m.b);
  switch (m.regime) {
    case RodRegime::positive:
      // stored c2 multiplies sinh(bx)/cosh(b) or cosh(bx)/cosh(b)
      if (m.c1 != 0.0) m.coeff_ratio = m.c2 / (m.c1 * ch);
      break;
    case RodRegime::trigonometric:
    case RodRegime::degenerate:
      if (m.c2 != 0.0) m.coeff_ratio = m.c1 / m.c2;
      break;
    case RodRegime::hyperbolic_candidate:
      if (m.c1 != 0.0) m.coeff_ratio = m.c2 / m.c1;
      break;
    case RodRegime::zero:
      break;
  }
}

void require_finite(double tau) {
  if (!std::isfinite(tau)) throw DomainError("tension must be finite");
}

std::vector<double> roots_on(const RealFn& f, double lo, double hi, int n) {
  std::vector<double> out;
  for (const Bracket& b : bracket_roots(f, {lo, hi}, n)) out.push_back(refine_root(f, b, 1e-15 * hi));
  return out;
}

}  // namespace

double rod_mode_value(const RodMode& m, double x) {
  double a = m.a, b = m.b;
  bool odd = m.parity == Parity::odd;
  double ch = std::cosh(b);
  switch (m.regime) {
    case RodRegime::zero:
      if (a == 0.0) return odd ? m.c1 * x : m.c1;
      return m.c1 * (odd ? std::sin(a * x) : std::cos(a * x));
    case RodRegime::positive:
      return odd ? m.c1 * std::sin(a * x) + m.c2 * std::sinh(b * x) / ch
                 : m.c1 * std::cos(a * x) + m.c2 * std::cosh(b * x) / ch;
    case RodRegime::trigonometric:
      return odd ? m.c1 * std::sin(a * x) + m.c2 * std::sin(b * x)
                 : m.c1 * std::cos(a * x) + m.c2 * std::cos(b * x);
    case RodRegime::degenerate:
      return m.c1 * std::cos(a * x) + m.c2 * x * std::sin(a * x);
    case RodRegime::hyperbolic_candidate:
      return odd ? (m.c1 * std::cos(a * x) * std::sinh(b * x) + m.c2 * std::sin(a * x) * std::cosh(b * x)) / ch
                 : (m.c1 * std::sin(a * x) * std::sinh(b * x) + m.c2 * std::cos(a * x) * std::cosh(b * x)) / ch;
  }
  return 0.0;
}

double det_odd_positive(double tau, double a) {
  double b = std::sqrt(a * a + tau);
  return a * a * a * std::sin(a) - b * b * b * std::cos(a) * std::tanh(b);
}

double det_even_positive(double tau, double a) {
  double b = std::sqrt(a * a + tau);
  return a * a * a * std::cos(a) * std::tanh(b) + b * b * b * std::sin(a);
}

namespace {

double trig_b(double tau, double a) { return std::sqrt(std::fmax(-tau - a * a, 0.0)); }

// b - a without cancellation
double trig_gap(double tau, double a, double b) { return (-tau - 2 * a * a) / (a + b); }

}  // namespace

double det_odd_trig(double tau, double a) {
  double b = trig_b(tau, a);
  double g = trig_gap(tau, a, b);
  if (std::fabs(g) < 1e-7 * std::fmax(a, 1e-300)) {
    double c = std::sqrt(-tau / 2);
    return -c * c * (c + 1.5 * std::sin(2 * c));
  }
  return (a * a * a * std::sin(a) * std::cos(b) - b * b * b * std::sin(b) * std::cos(a)) / g;
}

double det_even_trig(double tau, double a) {
  double b = trig_b(tau, a);
  double g = trig_gap(tau, a, b);
  if (std::fabs(g) < 1e-7 * std::fmax(a, 1e-300)) {
    double c = std::sqrt(-tau / 2);
    return -c * c * (c - 1.5 * std::sin(2 * c));
  }
  return (b * b * b * std::cos(b) * std::sin(a) - a * a * a * std::cos(a) * std::sin(b)) / g;
}

std::vector<RodMode> positive_modes(double tau, int count) {
  require_finite(tau);
  if (count < 0) throw InvalidArgument("mode count must be >= 0");
  std::vector<RodMode> modes;
  if (count == 0) return modes;
  const double a_min = tau < 0 ? std::sqrt(-tau) : 0.0;
  double span = (count / 2 + 2) * pi;
  for (;;) {
    int n = std::max(kScanPoints, static_cast<int>(span * 400));
    double h = span / n;
    modes.clear();
    for (Parity par : {Parity::odd, Parity::even}) {
      RealFn f = par == Parity::odd ? RealFn([tau](double a) { return det_odd_positive(tau, a); })
                                    : RealFn([tau](double a) { return det_even_positive(tau, a); });
      for (double a : roots_on(f, a_min + h, a_min + span, n)) {
        RodMode m;
        m.parity = par;
        m.regime = RodRegime::positive;
        m.tau = tau;
        m.a = a;
        m.b = std::sqrt(a * a + tau);
        m.omega = a * a * m.b * m.b;
        fill_coefficients(m);
        modes.push_back(m);
      }
    }
    if (static_cast<int>(modes.size()) >= count) break;
    span *= 2;
  }
  std::sort(modes.begin(), modes.end(), [](const RodMode& x, const RodMode& y) { return x.omega < y.omega; });
  modes.resize(count);
  return modes;
}

ZeroModeInfo zero_mode_degeneracy(double tau, double tol) {
  require_finite(tau);
  ZeroModeInfo info;
  if (tau > 0) return info;
  RodMode m;
  m.regime = RodRegime::zero;
  m.tau = tau;
  m.omega = 0.0;
  m.c1 = 1.0;
  m.c2 = 0.0;
  if (tau == 0.0) {
    m.parity = Parity::odd;
    m.residual = 0.0;
    info.degenerate = true;
    info.residual = 0.0;
    info.extra_modes.push_back(m);
    return info;
  }
  double a = std::sqrt(-tau);
  m.a = a;
  double rs = std::fabs(std::sin(a)), rc = std::fabs(std::cos(a));
  info.residual = std::fmin(rs, rc);
  if (rs <= tol) {
    m.parity = Parity::odd;
    m.residual = rs;
    info.extra_modes.push_back(m);
  }
  if (rc <= tol) {
    m.parity = Parity::even;
    m.residual = rc;
    info.extra_modes.push_back(m);
  }
  info.degenerate = !info.extra_modes.empty();
  return info;
}

std::vector<RodMode> trig_modes(double tau, int count) {
  require_finite(tau);
  if (!(tau < 0)) throw DomainError("trigonometric regime needs tau < 0");
  if (count < 0) throw InvalidArgument("mode count must be >= 0");
  const double a_max = std::sqrt(-tau / 2);
  const double h = a_max / kScanPoints;
  std::vector<RodMode> modes;
  for (Parity par : {Parity::odd, Parity::even}) {
    RealFn f = par == Parity::odd ? RealFn([tau](double a) { return det_odd_trig(tau, a); })
                                  : RealFn([tau](double a) { return det_even_trig(tau, a); });
    for (double a : roots_on(f, h, a_max, kScanPoints)) {
      // a root on the diagonal a = b is the degenerate point, not a trigonometric mode
      if (a_max - a <= 1e-9 * a_max) continue;
      RodMode m;
      m.parity = par;
      m.regime = RodRegime::trigonometric;
      m.tau = tau;
      m.a = a;
      m.b = trig_b(tau, a);
      m.omega = -a * a * m.b * m.b;
      fill_coefficients(m);
      modes.push_back(m);
    }
  }
  std::sort(modes.begin(), modes.end(), [](const RodMode& x, const RodMode& y) { return x.omega < y.omega; });
  if (static_cast<int>(modes.size()) > count) modes.resize(count);
  return modes;
}

DegeneratePoint degenerate_point() {
  auto f = [](double a) { return std::sin(2 * a) - 2 * a / 3; };
  Bracket br{1.0, 1.3, f(1.0), f(1.3), false};
  double a = refine_root(f, br, 1e-16);
  double s = std::sin(a), c = std::cos(a);
  DegeneratePoint p;
  p.a = a;
  p.tau = -2 * a * a;
  p.omega = -a * a * a * a;
  p.c_over_d = (2 * c - a * s) / (a * c);
  p.c_over_d_alt = (a * c - s) / (a * s);
  return p;
}

std::optional<RodMode> degenerate_mode(double tau, double tol) {
  require_finite(tau);
  DegeneratePoint p = degenerate_point();
  if (std::fabs(tau - p.tau) > tol) return std::nullopt;
  RodMode m;
  m.parity = Parity::even;
  m.regime = RodRegime::degenerate;
  m.tau = p.tau;
  m.a = p.a;
  m.b = p.a;
  m.omega = p.omega;
  fill_coefficients(m);
  m.tau = tau;
  return m;
}

namespace {

double hyperbolic_det(double tau, double a, double b, Parity par) {
  auto [p, q] = basis(RodRegime::hyperbolic_candidate, par, a, b);
  Rows r = rows_for(tau, p, q);
  return r.m1 * r.v2 - r.m2 * r.v1;
}

}  // namespace

HyperbolicCheck hyperbolic_residual(double tau, double a, double b) {
  require_finite(tau);
  if (!(tau < 0)) throw DomainError("hyperbolic regime needs tau < 0");
  if (!(a > 0) || !(b > 0)) throw DomainError("hyperbolic regime needs a, b > 0");
  if (std::fabs(2 * (b * b - a * a) - tau) > 1e-10 * std::fmax(1.0, std::fabs(tau)))
    throw DomainError("hyperbolic regime needs 2(b^2 - a^2) = tau");
  HyperbolicCheck h;
  h.det_odd = hyperbolic_det(tau, a, b, Parity::odd);
  h.det_even = hyperbolic_det(tau, a, b, Parity::even);
  double t = std::tanh(b);
  h.excluded_forms = t * t < 2 + 4 * b * b / std::fabs(tau);
  return h;
}

std::vector<RodMode> hyperbolic_candidates(double tau, int count) {
  require_finite(tau);
  if (!(tau < 0)) throw DomainError("hyperbolic regime needs tau < 0");
  if (count < 0) throw InvalidArgument("mode count must be >= 0");
  const double a0 = std::sqrt(-tau / 2);
  const double span = (count + 2) * pi;
  const double h = span / kScanPoints;
  std::vector<RodMode> modes;
  for (Parity par : {Parity::odd, Parity::even}) {
    auto f = [tau, a0, par](double a) {
      // a = a0 would give b = 0, where the sinh column vanishes identically
      double b = std::sqrt(std::fmax(a * a - a0 * a0, 0.0));
      return hyperbolic_det(tau, a, b, par) / std::pow(a * a + b * b, 3);
    };
    for (double a : roots_on(f, a0 + h, a0 + span, kScanPoints)) {
      RodMode m;
      m.parity = par;
      m.regime = RodRegime::hyperbolic_candidate;
      m.tau = tau;
      m.a = a;
      m.b = std::sqrt(a * a - a0 * a0);
      double s2 = a * a + m.b * m.b;
      m.omega = -s2 * s2;
      fill_coefficients(m);
      modes.push_back(m);
    }
  }
  std::sort(modes.begin(), modes.end(), [](const RodMode& x, const RodMode& y) { return x.omega < y.omega; });
  if (static_cast<int>(modes.size()) > count) modes.resize(count);
  return modes;
}

BranchTable branch_curves(double tau_min, double tau_max, int n_tau, int max_modes) {
  if (!std::isfinite(tau_min) || !std::isfinite(tau_max) || !(tau_max >= tau_min))
    throw InvalidArgument("branch_curves: need finite tau_min <= tau_max");
  if (n_tau < 1) throw InvalidArgument("branch_curves: need at least one tension value");
  if (max_modes < 1) throw InvalidArgument("branch_curves: need max_modes >= 1");

  std::vector<double> taus;
  for (int i = 0; i < n_tau; ++i)
    taus.push_back(n_tau == 1 ? tau_min : tau_min + (tau_max - tau_min) * i / (n_tau - 1));
  // tensions where extra zero modes or the degenerate point appear
  auto add_event = [&](double t) {
    if (t >= tau_min && t <= tau_max) taus.push_back(t);
  };
  add_event(0.0);
  add_event(degenerate_point().tau);
  for (int k = 1; k * k * pi * pi <= -tau_min + 1; ++k) add_event(-k * k * pi * pi);
  for (int k = 0; (2 * k + 1) * (2 * k + 1) * pi * pi / 4 <= -tau_min + 1; ++k)
    add_event(-(2 * k + 1) * (2 * k + 1) * pi * pi / 4);
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

  BranchTable out;
  for (double tau : taus) {
    std::vector<RodMode> modes;
    try {
      for (auto& m : positive_modes(tau, max_modes)) modes.push_back(m);
      for (auto& m : zero_mode_degeneracy(tau).extra_modes) modes.push_back(m);
      if (tau < 0) {
        for (auto& m : trig_modes(tau, max_modes)) modes.push_back(m);
        if (auto m = degenerate_mode(tau)) modes.push_back(*m);
        for (auto& m : hyperbolic_candidates(tau, max_modes)) modes.push_back(m);
      }
    } catch (const Error& e) {
      out.errors.push_back({tau, e.what()});
      continue;
    }
    std::stable_sort(modes.begin(), modes.end(),
                     [](const RodMode& x, const RodMode& y) { return x.omega < y.omega; });
    for (auto& m : modes) out.rows.push_back({tau, m});
  }
  return out;
}

InterlacingResult check_interlacing(double tau, int k_max) {
  if (!(tau > 0)) throw DomainError("interlacing is stated for tau > 0");
  auto modes = positive_modes(tau, 2 * (k_max + 1));
  std::vector<double> odd, even;
  for (auto& m : modes) (m.parity == Parity::odd ? odd : even).push_back(m.a);
  InterlacingResult r{true, 0, INFINITY};
  for (int k = 0; k <= k_max; ++k) {
    auto test = [&](const std::vector<double>& v, double lo, double hi) {
      if (k >= static_cast<int>(v.size())) {
        r.holds = false;
        return;
      }
      double a = v[k];
      double margin = std::fmin(a - lo, hi - a);
      r.worst_margin = std::fmin(r.worst_margin, margin);
      if (margin <= 0) r.holds = false;
      ++r.checked;
    };
    test(odd, k * pi, k * pi + pi / 2);
    test(even, k * pi + pi / 2, (k + 1) * pi);
  }
  return r;
}

}  // namespace freeplate
