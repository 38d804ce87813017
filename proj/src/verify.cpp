#include "freeplate/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "freeplate/ball_spectrum.hpp"
#include "freeplate/error.hpp"
#include "freeplate/isoperimetric.hpp"
#include "freeplate/rod_spectrum.hpp"
#include "freeplate/special_functions.hpp"
#include "freeplate/table.hpp"
#include "json.hpp"

namespace freeplate {

using std::numbers::pi;

const std::vector<std::string>& verify_modules() {
  static const std::vector<std::string> m = {"special_functions", "ball_spectrum", "rod_spectrum", "isoperimetric"};
  return m;
}

const std::vector<ManifestEntry>& verify_manifest() {
  static const std::vector<ManifestEntry> m = {
      {"propLS", "special_functions", "Lorch-Szego bracket d < p11^2 < d+2 and p11 = 1.84118 for d = 2"},
      {"recurrences", "special_functions", "three-term and derivative recurrences of j_l and i_l"},
      {"domination", "special_functions", "derivatives of j_l dominated by those of i_l"},
      {"fact1", "special_functions", "j_l > 0 on (0, p11] for l = 1..5"},
      {"fact1.5", "special_functions", "j_1' > 0 on (0, p11)"},
      {"fact2", "special_functions", "j_2' > 0 on (0, p11]"},
      {"fact3", "special_functions", "j_1'' < 0 on (0, p11]"},
      {"fact4", "special_functions", "j_1'''' > 0 on (0, p11]"},
      {"ijbounds", "special_functions", "cubic Taylor bounds on j_1'' and i_1''"},
      {"wbounds", "ball_spectrum", "tau p11^2 <= omega <= tau (d+2), omega/tau decreasing"},
      {"wbounds2", "ball_spectrum", "omega <= tau p11^2 + C*, membrane limit of infinite tension"},
      {"ballBC", "ball_spectrum", "natural boundary conditions M u = V u = 0 on the unit sphere"},
      {"thm2-ordering", "ball_spectrum", "fundamental mode of the ball has angular order l = 1"},
      {"scaling", "ball_spectrum", "omega(tau, B_s) = s^-4 omega(s^2 tau, B_1)"},
      {"inertiabound", "ball_spectrum", "moment of inertia bound tau |Omega| sum 1/omega_j >= sum int x_j^2"},
      {"posclass", "rod_spectrum", "positive rod eigenvalues: determinant roots and coefficient ratios"},
      {"fefo", "rod_spectrum", "odd/even rod determinant roots interlace on (k pi, (k+1) pi)"},
      {"thm2pp", "rod_spectrum", "rod fundamental mode is odd with a in (0, pi/2); parities alternate"},
      {"zeroclass", "rod_spectrum", "zero eigenvalue degeneracies at tau = -k^2 pi^2 and -(2k+1)^2 pi^2/4"},
      {"negclass-trig", "rod_spectrum", "negative rod eigenvalues in the trigonometric regime"},
      {"negclass-degenerate", "rod_spectrum", "degenerate rod point sin 2a = 2a/3"},
      {"branch-crossings", "rod_spectrum", "odd and even branches cross at tau = -pi^2 (l^2 + k^2)"},
      {"hyperbolic-exclusion", "rod_spectrum", "single-term hyperbolic ansatz has no solution"},
      {"poly1", "isoperimetric", "P(x, d) >= 0 for d >= 3 with g(7) = 6876, g'(5) = 1875, P_3(c) ~ 79"},
      {"poly2", "isoperimetric", "Q(x) > 0 on [0, 12/7] for d = 2"},
      {"derivs", "isoperimetric", "closed-form sums over u_k = x_k rho/r"},
      {"ptwise", "isoperimetric", "pointwise identity |D^2u|^2 = (Delta|Du|^2 - 2 D(Delta u).Du)/2"},
      {"mondenom", "isoperimetric", "rho^2 strictly increasing"},
      {"monnum", "isoperimetric", "partial monotonicity of N[rho] across r = 1"},
      {"gppneg", "isoperimetric", "rho'' < 0 on (0, 1)"},
      {"largetau", "isoperimetric", "tau - 3a^2/(d+2) > 0 for tau > 9/(d+5)"},
      {"smalltau", "isoperimetric", "remaining factor positive for 0 < tau <= 9/(d+5)"},
      {"trialfcn", "isoperimetric", "trial-function center v* with X(v*) = 0 exists and is found"},
      {"lemmaboundRC-equality", "isoperimetric", "quotient bound equals omega* on the ball"},
      {"monint", "isoperimetric", "rearrangement: non-ball domains give a strictly smaller quotient"},
  };
  return m;
}

namespace {

struct Outcome {
  CheckStatus status;
  double value;
  double tolerance;
  std::string detail;
};

Outcome verdict(bool ok, double value, double tol, std::string detail = {}) {
  return {ok ? CheckStatus::pass : CheckStatus::fail, value, tol, std::move(detail)};
}

constexpr double kEps = std::numeric_limits<double>::epsilon();

// ---------------- special functions ----------------

Outcome check_propLS() {
  bool ok = true;
  for (int d = 2; d <= 10; ++d) {
    double p = p11(d);
    ok = ok && p * p > d && p * p < d + 2;
  }
  double p2 = p11(2);
  ok = ok && std::fabs(p2 - 1.84118) <= 1e-4;
  return verdict(ok, p2, 1e-4);
}

Outcome check_recurrences() {
  double worst = 0;
  for (int d = 2; d <= 10; ++d)
    for (int l = 0; l <= 5; ++l)
      for (int k = 1; k <= 200; ++k) {
        double z = 10.0 * k / 200;
        for (const auto& r : recurrence_residuals(UltraIndex(d, l), z))
          if (r.applicable) worst = std::fmax(worst, r.residual);
      }
  return verdict(worst <= 1e-11, worst, 1e-11);
}

Outcome check_domination() {
  double worst = 0;
  bool ok = true;
  for (int d = 2; d <= 10; ++d)
    for (int l = 0; l <= 5; ++l) {
      UltraIndex idx(d, l);
      for (int m = 0; m <= 4; ++m)
        for (int k = 1; k <= 100; ++k) {
          double z = 20.0 * k / 100;
          double j = ultra_j(idx, m, z), i = ultra_i(idx, m, z);
          ok = ok && i > 0 && std::fabs(j) < i;
          worst = std::fmax(worst, std::fabs(j) / i);
        }
    }
  return verdict(ok, worst, 1.0);
}

// sample f at 10^4 points of (0, p11] (or the open interval) for d = 2..10
template <class F>
double sampled_extreme(F f, bool open, bool want_min) {
  double ext = want_min ? INFINITY : -INFINITY;
  const int n = 10000;
  for (int d = 2; d <= 10; ++d) {
    double p = p11(d);
    for (int k = 1; k <= n; ++k) {
      double z = open ? p * k / (n + 1) : p * k / n;
      double v = f(d, z);
      ext = want_min ? std::fmin(ext, v) : std::fmax(ext, v);
    }
  }
  return ext;
}

Outcome check_fact1() {
  double m = sampled_extreme(
      [](int d, double z) {
        double v = INFINITY;
        for (int l = 1; l <= 5; ++l) v = std::fmin(v, ultra_j(UltraIndex(d, l), 0, z));
        return v;
      },
      false, true);
  return verdict(m > 0, m, 0.0);
}

Outcome check_fact15() {
  double m = sampled_extreme([](int d, double z) { return ultra_j(UltraIndex(d, 1), 1, z); }, true, true);
  return verdict(m > 0, m, 0.0);
}

Outcome check_fact2() {
  double m = sampled_extreme([](int d, double z) { return ultra_j(UltraIndex(d, 2), 1, z); }, false, true);
  return verdict(m > 0, m, 0.0);
}

Outcome check_fact3() {
  double m = sampled_extreme([](int d, double z) { return ultra_j(UltraIndex(d, 1), 2, z); }, false, false);
  return verdict(m < 0, m, 0.0);
}

Outcome check_fact4() {
  double m = sampled_extreme([](int d, double z) { return ultra_j(UltraIndex(d, 1), 4, z); }, false, true);
  return verdict(m > 0, m, 0.0);
}

double taylor_d(int k, int d) {
  double fact = 1;
  for (int i = 2; i <= k - 1; ++i) fact *= i;
  return (2 * k + 1) * std::pow(2.0, 1.0 - 2 * k - 0.5 * d) /
         (fact * static_cast<double>(half_integer_gamma(2 * k + 2 + d)));
}

Outcome check_ijbounds() {
  // excess of the function over its bound, relative to the bound's terms; a few ulps are allowed
  double worst = -INFINITY;
  bool ok = true;
  const int n = 10000;
  for (int d = 2; d <= 10; ++d) {
    UltraIndex idx(d, 1);
    double d1 = taylor_d(1, d), d2 = taylor_d(2, d);
    double zj = std::sqrt(3.0 * (d + 2) / (d + 5)), zi = std::sqrt(3.0);
    for (int k = 0; k <= n; ++k) {
      double z = zj * k / n;
      double scale = d1 * z + d2 * z * z * z;
      double excess = ultra_j(idx, 2, z) - (-d1 * z + d2 * z * z * z);
      ok = ok && excess <= 8 * kEps * scale;
      if (scale > 0) worst = std::fmax(worst, excess / scale);
      z = zi * k / n;
      scale = d1 * z + 1.2 * d2 * z * z * z;
      excess = ultra_i(idx, 2, z) - scale;
      ok = ok && excess <= 8 * kEps * scale;
      if (scale > 0) worst = std::fmax(worst, excess / scale);
    }
  }
  return verdict(ok, worst, 8 * kEps);
}

// ---------------- ball ----------------

const int kBallDims[] = {2, 3, 4, 5};
const double kBallTaus[] = {0.1, 1, 10, 100};

Outcome check_wbounds() {
  double worst = INFINITY;
  bool ok = true;
  for (int d : kBallDims) {
    double p = p11(d), prev_ratio = INFINITY;
    for (double tau : kBallTaus) {
      BallTone t = fundamental_tone(d, tau);
      double lo = tau * p * p, hi = tau * (d + 2);
      worst = std::fmin(worst, std::fmin(t.omega - lo, hi - t.omega) / t.omega);
      ok = ok && t.omega >= lo && t.omega <= hi && t.omega / tau < prev_ratio;
      prev_ratio = t.omega / tau;
    }
  }
  return verdict(ok, worst, 0.0);
}

Outcome check_wbounds2() {
  const double tau = 1e4;
  double p = p11(2), C = membrane_hessian_constant(2);
  BallTone t = fundamental_tone(2, tau);
  double excess = t.omega / tau - p * p;
  // fraction of the allowed window C*/tau actually used
  double used = excess * tau / C;
  return verdict(excess >= 0 && excess <= C / tau, used, 1.0, "C*=" + format_real(C));
}

Outcome check_ballBC() {
  double worst = 0;
  for (int d : kBallDims)
    for (double tau : kBallTaus)
      for (int l = 0; l <= 2; ++l) {
        auto t = tone_for_order(d, l, tau);
        if (!t) continue;
        BoundaryResiduals r = boundary_residuals(*t);
        worst = std::fmax(worst, std::fmax(r.moment, r.shear));
      }
  return verdict(worst <= 1e-8, worst, 1e-8);
}

Outcome check_thm2_ordering() {
  double margin = INFINITY;
  bool ok = true;
  for (int d : kBallDims)
    for (double tau : kBallTaus) {
      double a1 = tone_for_order(d, 1, tau)->a;
      for (int l : {0, 2}) {
        auto t = tone_for_order(d, l, tau);
        // no root below the scan cap counts as lying above the l = 1 root
        if (!t) continue;
        margin = std::fmin(margin, t->a - a1);
        ok = ok && t->a > a1;
      }
    }
  return verdict(ok, margin, 0.0);
}

Outcome check_scaling() {
  double worst = 0;
  for (int d : {2, 3})
    for (double s : {0.5, 1.5, 2.0})
      for (double tau : {1.0, 4.0}) {
        double direct = fundamental_tone_on_radius(d, tau, s).omega;
        double via_unit = fundamental_tone(d, s * s * tau).omega / std::pow(s, 4);
        worst = std::fmax(worst, std::fabs(direct - via_unit) / direct);
      }
  return verdict(worst <= 1e-8, worst, 1e-8);
}

Outcome check_inertia() {
  double margin = INFINITY;
  for (int d : kBallDims)
    for (double tau : kBallTaus) {
      InertiaCheck c = inertia_bound_check(d, tau);
      margin = std::fmin(margin, c.lhs / c.rhs - 1);
    }
  return verdict(margin >= 0, margin, 0.0);
}

// ---------------- rod ----------------

const double kRodTaus[] = {0.5, 2, 10};

Outcome check_posclass() {
  double worst = 0;
  bool ok = true;
  for (double tau : kRodTaus)
    for (const RodMode& m : positive_modes(tau, 20)) {
      worst = std::fmax(worst, m.residual);
      ok = ok && m.omega > 0 && std::fabs(m.b * m.b - m.a * m.a - tau) <= 1e-12 * std::fmax(1.0, m.b * m.b);
    }
  return verdict(ok && worst <= 1e-9, worst, 1e-9);
}

Outcome check_fefo() {
  double margin = INFINITY;
  bool ok = true;
  for (double tau : kRodTaus) {
    InterlacingResult r = check_interlacing(tau, 9);
    ok = ok && r.holds && r.checked == 20;
    margin = std::fmin(margin, r.worst_margin);
  }
  return verdict(ok, margin, 0.0);
}

Outcome check_thm2pp() {
  bool ok = true;
  double a_first = 0;
  for (double tau : kRodTaus) {
    auto modes = positive_modes(tau, 20);
    ok = ok && modes.front().parity == Parity::odd && modes.front().a > 0 && modes.front().a < pi / 2;
    for (size_t i = 1; i < modes.size(); ++i) ok = ok && modes[i].parity != modes[i - 1].parity;
    if (tau == 2) a_first = modes.front().a;
  }
  return verdict(ok, a_first, pi / 2);
}

Outcome check_zeroclass() {
  double worst = 0;
  bool ok = !zero_mode_degeneracy(1.0).degenerate && zero_mode_degeneracy(0.0).degenerate;
  for (int k = 1; k <= 3; ++k) {
    ZeroModeInfo odd = zero_mode_degeneracy(-k * k * pi * pi);
    ZeroModeInfo even = zero_mode_degeneracy(-(2 * k + 1) * (2 * k + 1) * pi * pi / 4);
    ok = ok && odd.degenerate && odd.extra_modes.front().parity == Parity::odd;
    ok = ok && even.degenerate && even.extra_modes.front().parity == Parity::even;
    worst = std::fmax(worst, std::fmax(odd.residual, even.residual));
  }
  return verdict(ok && worst <= 1e-9, worst, 1e-9);
}

Outcome check_negclass_trig() {
  double worst = 0;
  bool ok = true;
  int found = 0;
  for (double tau : {-pi * pi / 2, -10.0, -30.0, -60.0}) {
    for (const RodMode& m : trig_modes(tau, 50)) {
      ++found;
      worst = std::fmax(worst, m.residual);
      ok = ok && m.omega < 0 && m.omega > -tau * tau / 4 && m.a <= m.b &&
           std::fabs(m.a * m.a + m.b * m.b + tau) <= 1e-12 * std::fabs(tau);
    }
  }
  return verdict(ok && found > 0 && worst <= 1e-9, worst, 1e-9, std::to_string(found) + " modes");
}

Outcome check_negclass_degenerate() {
  DegeneratePoint p = degenerate_point();
  bool ok = std::fabs(p.a - 1.13943) <= 1e-4 && std::fabs(p.tau + 2.5966) <= 1e-3 &&
            std::fabs(p.omega + 1.6856) <= 1e-3 && std::fabs(p.c_over_d + 0.4174) <= 1e-3 &&
            std::fabs(p.c_over_d - p.c_over_d_alt) <= 1e-10;
  auto m = degenerate_mode(p.tau);
  ok = ok && m && m->residual <= 1e-9 && m->parity == Parity::even;
  return verdict(ok, p.a, 1e-4);
}

Outcome check_crossings() {
  struct Crossing {
    double tau, a;
  };
  double worst = 0;
  bool ok = true;
  for (Crossing c : {Crossing{-5 * pi * pi, pi}, Crossing{-10 * pi * pi / 4, pi / 2}}) {
    bool odd = false, even = false;
    for (const RodMode& m : trig_modes(c.tau, 100)) {
      double err = std::fabs(m.a - c.a);
      if (err > 1e-7) continue;
      worst = std::fmax(worst, err);
      (m.parity == Parity::odd ? odd : even) = true;
    }
    ok = ok && odd && even;
  }
  return verdict(ok, worst, 1e-7);
}

Outcome check_hyperbolic() {
  double worst = -INFINITY;
  bool ok = true;
  for (int i = 0; i < 60; ++i) {
    double tau = -std::pow(10.0, -1.0 + 3.0 * i / 59);
    for (int k = 1; k <= 400; ++k) {
      double b = 20.0 * k / 400;
      double t = std::tanh(b);
      double v = t * t - (2 + 4 * b * b / std::fabs(tau));
      worst = std::fmax(worst, v);
      double a = std::sqrt(b * b - tau / 2);
      ok = ok && v < 0 && hyperbolic_residual(tau, a, b).excluded_forms;
    }
  }
  auto cands = hyperbolic_candidates(-20.0, 10);
  return verdict(ok, worst, 0.0, std::to_string(cands.size()) + " candidates at tau=-20");
}

// ---------------- isoperimetric ----------------

Outcome from_items(const CheckReport& rep, const std::string& prefix, const std::string& value_item) {
  bool ok = true, any = false;
  double value = NAN, tol = 0;
  for (const auto& i : rep.items) {
    if (i.check.rfind(prefix, 0) != 0) continue;
    any = true;
    ok = ok && i.status != CheckStatus::fail;
    if (i.check == value_item) {
      value = i.value;
      tol = i.tolerance;
    }
  }
  return verdict(ok && any, value, tol);
}

Outcome check_derivs(std::uint64_t seed) {
  CheckReport rep = calculus_identity_check(seed);
  double worst = 0;
  bool ok = true;
  for (const auto& i : rep.items)
    if (i.check.rfind("derivs-", 0) == 0) {
      worst = std::fmax(worst, i.value);
      ok = ok && i.status == CheckStatus::pass;
    }
  return verdict(ok, worst, 1e-6);
}

struct MonotonicityRuns {
  std::vector<CheckReport> reports;
};

const MonotonicityRuns& monotonicity_runs() {
  static const MonotonicityRuns runs = [] {
    MonotonicityRuns r;
    for (int d : {2, 3, 5})
      for (double tau : {0.5, 5.0}) {
        RadialProfile rho(fundamental_tone(d, tau));
        r.reports.push_back(monotonicity_report(rho, tau, d, 3.0, 3000));
      }
    return r;
  }();
  return runs;
}

Outcome from_monotonicity(std::initializer_list<const char*> names) {
  bool ok = true, any = false;
  double worst = INFINITY;
  for (const auto& rep : monotonicity_runs().reports)
    for (const auto& i : rep.items)
      for (const char* n : names)
        if (i.check == n) {
          any = true;
          ok = ok && i.status == CheckStatus::pass;
          if (i.tolerance == 0) worst = std::fmin(worst, std::fabs(i.value));
        }
  return verdict(ok && any, worst, 0.0);
}

Outcome check_trialfcn(std::uint64_t seed) {
  DirectionSampler s2(2, seed);
  RadialProfile rho(fundamental_tone(2, 1.0));
  bool ok = true;
  double worst = 0;

  DomainSpec lshape = normalize_volume(parse_domain("kind=lshape"));
  CenterResult c = center_translate(lshape, rho, s2);
  ok = ok && c.residual <= 1e-6 && lshape.contains(c.center);
  worst = std::fmax(worst, c.residual);

  DomainSpec shifted_ball = DomainSpec::ball(2, 1.0).translated({0.3, 0.0});
  CenterResult cb = center_translate(shifted_ball, rho, s2);
  double err = std::hypot(cb.center[0] - 0.3, cb.center[1]);
  ok = ok && err <= 1e-6;

  DomainSpec box = normalize_volume(DomainSpec::box({2.0, 1.0}));
  CenterResult cx = center_translate(box, rho, s2);
  ok = ok && std::hypot(cx.center[0], cx.center[1]) <= 1e-6;

  // translation invariance of the centered quotient
  DomainSpec l0 = parse_domain("kind=lshape");
  double q0 = centered_quotient(l0, 1.0, seed).bound.qhat;
  double q1 = centered_quotient(l0.translated({0.7, -0.4}), 1.0, seed).bound.qhat;
  double inv = std::fabs(q0 - q1) / q0;
  ok = ok && inv <= 1e-6;
  return verdict(ok, std::fmax(worst, inv), 1e-6);
}

Outcome check_ball_equality(std::uint64_t seed) {
  double worst = 0;
  bool ok = true;
  for (int d : {2, 3})
    for (double tau : {1.0, 10.0}) {
      CenteredQuotient q = centered_quotient(DomainSpec::ball(d, 1.0), tau, seed);
      double tol = std::fmax(1e-6 * q.bound.tone_ball, q.bound.mc_error);
      double err = std::fabs(q.bound.qhat - q.bound.tone_ball);
      ok = ok && err <= tol;
      worst = std::fmax(worst, err / q.bound.tone_ball);
    }
  return verdict(ok, worst, 1e-6);
}

Outcome check_monint(std::uint64_t seed) {
  bool ok = true, inconclusive = false;
  double min_ratio = INFINITY;
  for (const char* text : {"kind=ellipse aspect=2", "kind=square"})
    for (double tau : {1.0, 10.0}) {
      CenteredQuotient q = centered_quotient(parse_domain(text), tau, seed);
      double eps = q.bound.mc_error;
      if (q.bound.gap <= 3 * eps) inconclusive = true;
      ok = ok && q.bound.qhat < q.bound.tone_ball;
      min_ratio = std::fmin(min_ratio, q.bound.gap / q.bound.tone_ball);

      DirectionSampler s(2, seed);
      RearrangementCheck r = domain_monotonicity(q.domain, tau, s);
      ok = ok && r.n_domain < r.n_ball - 3 * r.mc_error && r.g_domain > r.g_ball + 3 * r.mc_error;
    }
  Outcome o = verdict(ok, min_ratio, 0.0);
  if (ok && inconclusive) o.status = CheckStatus::inconclusive;
  return o;
}

using CheckFn = std::function<Outcome(std::uint64_t)>;

CheckFn plain(Outcome (*f)()) {
  return [f](std::uint64_t) { return f(); };
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r = {
      {"propLS", plain(check_propLS)},
      {"recurrences", plain(check_recurrences)},
      {"domination", plain(check_domination)},
      {"fact1", plain(check_fact1)},
      {"fact1.5", plain(check_fact15)},
      {"fact2", plain(check_fact2)},
      {"fact3", plain(check_fact3)},
      {"fact4", plain(check_fact4)},
      {"ijbounds", plain(check_ijbounds)},
      {"wbounds", plain(check_wbounds)},
      {"wbounds2", plain(check_wbounds2)},
      {"ballBC", plain(check_ballBC)},
      {"thm2-ordering", plain(check_thm2_ordering)},
      {"scaling", plain(check_scaling)},
      {"inertiabound", plain(check_inertia)},
      {"posclass", plain(check_posclass)},
      {"fefo", plain(check_fefo)},
      {"thm2pp", plain(check_thm2pp)},
      {"zeroclass", plain(check_zeroclass)},
      {"negclass-trig", plain(check_negclass_trig)},
      {"negclass-degenerate", plain(check_negclass_degenerate)},
      {"branch-crossings", plain(check_crossings)},
      {"hyperbolic-exclusion", plain(check_hyperbolic)},
      {"poly1", [](std::uint64_t) { return from_items(polynomial_lemma_check(), "poly1-", "poly1-P3-critical"); }},
      {"poly2", [](std::uint64_t) { return from_items(polynomial_lemma_check(), "poly2-", "poly2-positive"); }},
      {"derivs", check_derivs},
      {"ptwise", [](std::uint64_t s) { return from_items(calculus_identity_check(s), "ptwise-", "ptwise-identity"); }},
      {"mondenom", [](std::uint64_t) { return from_monotonicity({"rho2-increasing"}); }},
      {"monnum",
       [](std::uint64_t) {
         return from_monotonicity({"N-partial-monotone", "inner-factor-positive", "inner-factor-identity"});
       }},
      {"gppneg", [](std::uint64_t) { return from_monotonicity({"rho-concave"}); }},
      {"largetau", [](std::uint64_t) { return from_monotonicity({"largetau"}); }},
      {"smalltau", [](std::uint64_t) { return from_monotonicity({"smalltau"}); }},
      {"trialfcn", check_trialfcn},
      {"lemmaboundRC-equality", check_ball_equality},
      {"monint", check_monint},
  };
  return r;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const VerificationEntry& e) { return e.status == CheckStatus::fail; });
}

VerificationReport verify_suite(std::string_view selection, std::uint64_t seed) {
  const auto& mods = verify_modules();
  if (selection != "all" && std::find(mods.begin(), mods.end(), selection) == mods.end())
    throw InvalidArgument("unknown verify selection '" + std::string(selection) + "'");
  VerificationReport rep;
  for (const ManifestEntry& m : verify_manifest()) {
    if (selection != "all" && m.module != selection) continue;
    auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& p) { return p.first == m.check_id; });
    VerificationEntry e;
    e.check_id = m.check_id;
    e.ref = m.ref;
    auto t0 = std::chrono::steady_clock::now();
    try {
      if (it == registry().end()) throw InvalidArgument("no check registered");
      Outcome o = it->second(seed);
      e.status = o.status;
      e.value = o.value;
      e.tolerance = o.tolerance;
      e.detail = o.detail;
    } catch (const std::exception& ex) {
      e.status = CheckStatus::fail;
      e.value = NAN;
      e.detail = ex.what();
    }
    e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::string verification_to_json(const VerificationReport& r, bool include_timings) {
  using ojson = nlohmann::ordered_json;
  ojson j = ojson::object();
  j["overall"] = r.passed() ? "pass" : "fail";
  ojson arr = ojson::array();
  for (const auto& e : r.entries) {
    ojson o = ojson::object();
    o["check_id"] = e.check_id;
    o["ref"] = e.ref;
    o["status"] = to_string(e.status);
    o["value"] = std::isfinite(e.value) ? ojson(e.value) : ojson(nullptr);
    o["tolerance"] = e.tolerance;
    if (!e.detail.empty()) o["detail"] = e.detail;
    if (include_timings) o["runtime_ms"] = e.runtime_ms;
    arr.push_back(o);
  }
  j["entries"] = arr;
  return j.dump(2) + "\n";
}

std::string verification_to_csv(const VerificationReport& r, bool include_timings) {
  std::string out = "check_id,status,value,tolerance";
  out += include_timings ? ",runtime_ms\n" : "\n";
  for (const auto& e : r.entries) {
    out += e.check_id + "," + to_string(e.status) + "," + format_real(e.value) + "," + format_real(e.tolerance);
    out += include_timings ? "," + format_real(e.runtime_ms) + "\n" : "\n";
  }
  return out;
}

}  // namespace freeplate
