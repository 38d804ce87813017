// Runs the acceptance criteria at their stated tolerances; one PASS/FAIL line each.
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "freeplate/ball_spectrum.hpp"
#include "freeplate/domain.hpp"
#include "freeplate/error.hpp"
#include "freeplate/isoperimetric.hpp"
#include "freeplate/rod_spectrum.hpp"
#include "freeplate/special_functions.hpp"
#include "freeplate/verify.hpp"

using namespace freeplate;
using std::numbers::pi;

namespace {

struct Result {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

std::string fmt(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.6g", x);
  return b;
}

Result bessel_engine() {
  Result r;
  r.require(std::fabs(p11(2) - 1.84118) <= 1e-4, "p11(2) = " + fmt(p11(2)));
  for (int d = 2; d <= 10; ++d) {
    double p = p11(d);
    r.require(d < p * p && p * p < d + 2, "bracket fails at d=" + std::to_string(d));
  }
  double worst = 0;
  for (int d = 2; d <= 10; ++d)
    for (int l = 0; l <= 5; ++l)
      for (int k = 1; k <= 200; ++k)
        for (const auto& rel : recurrence_residuals(UltraIndex(d, l), 0.05 * k))
          if (rel.applicable) worst = std::fmax(worst, rel.residual);
  r.require(worst <= 1e-11, "recurrence residual " + fmt(worst));

  const int n = 10000;
  for (int d = 2; d <= 10; ++d) {
    double p = p11(d);
    UltraIndex j1(d, 1), j2(d, 2);
    for (int k = 1; k <= n; ++k) {
      double z = p * k / n;
      for (int l = 1; l <= 5; ++l)
        r.require(ultra_j(UltraIndex(d, l), 0, z) > 0, "fact1 at d=" + std::to_string(d));
      if (k < n) r.require(ultra_j(j1, 1, p * k / (n + 1.0)) > 0, "fact1.5 at d=" + std::to_string(d));
      r.require(ultra_j(j2, 1, z) > 0, "fact2 at d=" + std::to_string(d));
      r.require(ultra_j(j1, 2, z) < 0, "fact3 at d=" + std::to_string(d));
      r.require(ultra_j(j1, 4, z) > 0, "fact4 at d=" + std::to_string(d));
    }
    // cubic bounds on j_1'' and i_1''
    auto dk = [d](int k) {
      double f = 1;
      for (int i = 2; i <= k - 1; ++i) f *= i;
      return (2 * k + 1) * std::pow(2.0, 1.0 - 2 * k - 0.5 * d) / (f * std::tgamma(k + 1 + 0.5 * d));
    };
    double d1 = dk(1), d2 = dk(2);
    double zj = std::sqrt(3.0 * (d + 2) / (d + 5)), zi = std::sqrt(3.0);
    const double ulp = 8 * std::numeric_limits<double>::epsilon();
    for (int k = 0; k <= n; ++k) {
      double z = zj * k / n;
      double bound = -d1 * z + d2 * z * z * z;
      r.require(ultra_j(j1, 2, z) <= bound + ulp * (d1 * z + d2 * z * z * z), "ijbounds j at d=" + std::to_string(d));
      z = zi * k / n;
      bound = d1 * z + 1.2 * d2 * z * z * z;
      r.require(ultra_i(j1, 2, z) <= bound * (1 + ulp), "ijbounds i at d=" + std::to_string(d));
    }
  }
  return r;
}

Result ball_bounds() {
  Result r;
  for (int d = 2; d <= 5; ++d) {
    double p = p11(d), prev = INFINITY;
    for (double tau : {0.1, 1.0, 10.0, 100.0}) {
      double w = fundamental_tone(d, tau).omega;
      r.require(tau * p * p <= w && w <= tau * (d + 2), "bracket at d=" + std::to_string(d) + " tau=" + fmt(tau));
      r.require(w / tau < prev, "ratio not decreasing at d=" + std::to_string(d));
      prev = w / tau;
    }
  }
  double tau = 1e4, C = membrane_hessian_constant(2), p = p11(2);
  double excess = fundamental_tone(2, tau).omega / tau - p * p;
  r.require(excess >= 0 && excess <= C / tau, "infinite tension excess " + fmt(excess) + " vs " + fmt(C / tau));
  r.note = r.ok ? "C*=" + fmt(C) : r.note;
  return r;
}

Result ordering() {
  Result r;
  for (int d = 2; d <= 5; ++d)
    for (double tau : {0.1, 1.0, 10.0, 100.0}) {
      BallTone t1 = fundamental_tone(d, tau);
      auto check_bc = [&](const BallTone& t) {
        auto bc = boundary_residuals(t);
        r.require(bc.moment <= 1e-8 && bc.shear <= 1e-8, "boundary residual at l=" + std::to_string(t.l));
      };
      check_bc(t1);
      for (int l : {0, 2}) {
        auto t = tone_for_order(d, l, tau);
        if (!t) continue;
        r.require(t1.a < t->a, "l=" + std::to_string(l) + " root below l=1 at d=" + std::to_string(d));
        check_bc(*t);
      }
    }
  return r;
}

Result scaling() {
  Result r;
  for (int d : {2, 3})
    for (double s : {0.5, 2.0})
      for (double tau : {1.0, 4.0}) {
        double direct = fundamental_tone_on_radius(d, tau, s).omega;
        double unit = fundamental_tone(d, s * s * tau).omega / std::pow(s, 4);
        r.require(std::fabs(direct - unit) <= 1e-8 * direct, "scaling at s=" + fmt(s));
      }
  return r;
}

Result quotient() {
  Result r;
  for (int d : {2, 3})
    for (double tau : {1.0, 10.0}) {
      auto q = centered_quotient(DomainSpec::ball(d, 1.0), tau, 0);
      double tol = std::fmax(1e-6 * q.bound.tone_ball, q.bound.mc_error);
      r.require(std::fabs(q.bound.qhat - q.bound.tone_ball) <= tol, "ball equality at d=" + std::to_string(d));
    }
  double min_gap = INFINITY;
  for (const char* dom : {"kind=ellipse aspect=2", "kind=square"})
    for (double tau : {1.0, 10.0}) {
      auto q = centered_quotient(parse_domain(dom), tau, 0);
      r.require(q.bound.qhat < q.bound.tone_ball, std::string(dom) + " not below the ball");
      r.require(q.bound.gap > 3 * q.bound.mc_error, std::string(dom) + " gap within 3 eps_mc");
      min_gap = std::fmin(min_gap, q.bound.gap / (3 * q.bound.mc_error));
    }
  if (r.ok) r.note = "smallest gap/(3 eps_mc) = " + fmt(min_gap);
  return r;
}

Result monotonicity() {
  Result r;
  bool small = false, large = false;
  for (int d : {2, 3, 5})
    for (double tau : {0.5, 5.0}) {
      RadialProfile rho(fundamental_tone(d, tau));
      auto rep = monotonicity_report(rho, tau, d, 3.0, 3000);
      for (const auto& i : rep.items) {
        r.require(i.status == CheckStatus::pass, i.check + " at d=" + std::to_string(d) + " tau=" + fmt(tau));
        small = small || i.check == "smalltau";
        large = large || i.check == "largetau";
      }
    }
  r.require(small && large, "both tension branches exercised");
  return r;
}

Result polynomials() {
  Result r;
  r.require(poly_g(7) == 6876, "g(7) = " + std::to_string(poly_g(7)));
  r.require(poly_g_prime(5) == 1875, "g'(5) = " + std::to_string(poly_g_prime(5)));
  for (const auto& i : polynomial_lemma_check().items) {
    r.require(i.status == CheckStatus::pass, i.check);
    if (i.check == "poly1-P3-critical") r.require(std::fabs(i.value - 79) <= 0.05 * 79, "P3 critical " + fmt(i.value));
  }
  return r;
}

Result rod_positive() {
  Result r;
  for (double tau : {0.5, 2.0, 10.0}) {
    auto il = check_interlacing(tau, 9);
    r.require(il.holds && il.checked == 20, "interlacing at tau=" + fmt(tau));
    auto m = positive_modes(tau, 1).front();
    r.require(m.parity == Parity::odd && m.a > 0 && m.a < pi / 2, "first mode at tau=" + fmt(tau));
  }
  return r;
}

Result rod_degenerate() {
  Result r;
  auto p = degenerate_point();
  r.require(std::fabs(p.a - 1.13943) <= 1e-4, "a = " + fmt(p.a));
  r.require(std::fabs(p.tau + 2.5966) <= 1e-3, "tau = " + fmt(p.tau));
  r.require(std::fabs(p.omega + 1.6856) <= 1e-3, "omega = " + fmt(p.omega));
  r.require(std::fabs(p.c_over_d + 0.4174) <= 1e-3, "C/D = " + fmt(p.c_over_d));
  if (r.ok) r.note = "a=" + fmt(p.a) + " tau=" + fmt(p.tau) + " omega=" + fmt(p.omega) + " C/D=" + fmt(p.c_over_d);
  return r;
}

Result rod_zero_and_crossings() {
  Result r;
  for (int k = 1; k <= 3; ++k) {
    auto odd = zero_mode_degeneracy(-k * k * pi * pi);
    r.require(odd.degenerate && odd.residual <= 1e-9 && odd.extra_modes.front().parity == Parity::odd,
              "odd zero mode k=" + std::to_string(k));
    auto even = zero_mode_degeneracy(-(2 * k + 1) * (2 * k + 1) * pi * pi / 4);
    r.require(even.degenerate && even.residual <= 1e-9 && even.extra_modes.front().parity == Parity::even,
              "even zero mode k=" + std::to_string(k));
  }
  struct X {
    double tau, a;
  };
  for (X c : {X{-5 * pi * pi, pi}, X{-10 * pi * pi / 4, pi / 2}}) {
    bool odd = false, even = false;
    for (const auto& m : trig_modes(c.tau, 100))
      if (std::fabs(m.a - c.a) <= 1e-7) (m.parity == Parity::odd ? odd : even) = true;
    r.require(odd && even, "crossing at tau=" + fmt(c.tau));
  }
  return r;
}

Result hyperbolic() {
  Result r;
  double worst = -INFINITY;
  for (int i = 0; i < 60; ++i) {
    double tau = -std::pow(10.0, -1.0 + 3.0 * i / 59);
    for (int k = 1; k <= 400; ++k) {
      double b = 0.05 * k;
      double t = std::tanh(b);
      double margin = t * t - (2 + 4 * b * b / -tau);
      worst = std::fmax(worst, margin);
      r.require(margin < 0, "tanh bound at tau=" + fmt(tau) + " b=" + fmt(b));
    }
  }
  if (r.ok) r.note = "largest tanh^2 b - (2 + 4b^2/|tau|) = " + fmt(worst);
  return r;
}

Result identities() {
  Result r;
  auto rep = calculus_identity_check(0);
  int derivs = 0;
  for (const auto& i : rep.items) {
    r.require(i.status == CheckStatus::pass, i.check);
    if (i.check.rfind("derivs-", 0) == 0) {
      ++derivs;
      r.require(i.value <= 1e-6, i.check + " error " + fmt(i.value));
    }
  }
  r.require(derivs == 4, "derivative sums present");
  return r;
}

Result determinism() {
  Result r;
  auto a = verify_suite("all", 0), b = verify_suite("all", 0);
  r.require(verification_to_json(a, false) == verification_to_json(b, false), "json reports differ");
  r.require(verification_to_csv(a, false) == verification_to_csv(b, false), "csv reports differ");
  r.require(a.passed(), "verify --all has failures");
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"Bessel engine: p11, bracket, recurrences, sign lemmas, cubic bounds", bessel_engine},
      {"Ball tone bounds and infinite-tension limit", ball_bounds},
      {"Order l = 1 lowest; boundary residuals", ordering},
      {"Scaling between radii", scaling},
      {"Quotient bound: ball equality, strict for ellipse and square", quotient},
      {"Monotonicity suite", monotonicity},
      {"Polynomial lemmas", polynomials},
      {"Rod positive spectrum: interlacing, odd first mode", rod_positive},
      {"Rod degenerate point", rod_degenerate},
      {"Rod zero modes and branch crossings", rod_zero_and_crossings},
      {"Hyperbolic exclusion", hyperbolic},
      {"Calculus identities", identities},
      {"Deterministic verification reports", determinism},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.ok = false;
      r.note = std::string("exception: ") + e.what();
    }
    failed += r.ok ? 0 : 1;
    std::printf("%s %2zu %s%s%s\n", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, r.note.empty() ? "" : " | ",
                r.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
