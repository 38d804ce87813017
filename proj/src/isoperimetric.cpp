#include "freeplate/isoperimetric.hpp"

#include <algorithm>
#include <cmath>

#include "freeplate/error.hpp"

namespace freeplate {

namespace {

double norm(const Point& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

CenterResult center_translate(const DomainSpec& spec, const RadialProfile& rho, const DirectionSampler& sampler) {
  const int d = spec.dim();
  if (rho.d() != d) throw InvalidArgument("profile dimension does not match the domain");
  const double r_max = 3.0 * spec.bounding_radius() + 1e-9;
  RadialTable rho_table([&](double r) { return rho.value(r); }, d, r_max);
  // trace of the Jacobian of rho(r) x/r, divided by d
  RadialTable jac_table([&](double r) { return (rho.d1(r) + (d - 1) * rho.over_r(r)) / d; }, d, r_max);

  Point v = spec.centroid();
  const double J = radial_integral(spec, v, jac_table, sampler);
  if (!(J > 0)) throw ConvergenceError("center_translate: non-positive Jacobian estimate");

  Point X = radial_vector_integral(spec, v, rho_table, sampler);
  double S = radial_integral(spec, v, rho_table, sampler);
  double nx = norm(X);
  double eta = 1.0;
  for (int it = 0; it < 500; ++it) {
    if (nx <= 1e-6 * S) return {v, nx / S, it};
    Point trial = v;
    for (int i = 0; i < d; ++i) trial[i] += eta * X[i] / J;
    Point Xt = radial_vector_integral(spec, trial, rho_table, sampler);
    double nt = norm(Xt);
    if (nt < nx) {
      v = trial;
      X = Xt;
      nx = nt;
      S = radial_integral(spec, v, rho_table, sampler);
      eta = std::fmin(1.0, 2.0 * eta);
    } else {
      eta *= 0.5;
      if (eta < 1e-14) break;
    }
  }
  throw ConvergenceError("center_translate did not converge; last residual " + std::to_string(nx / S));
}

QuotientBound quotient_bound(const DomainSpec& spec, double tau, const DirectionSampler& sampler) {
  const int d = spec.dim();
  BallTone tone = fundamental_tone(d, tau);
  RadialProfile rho(tone);
  const double r_max = spec.bounding_radius() + 1e-9;
  RadialTable num_table([&](double r) { return N_of_rho(rho, tau, d, r); }, d, r_max);
  RadialTable den_table(
      [&](double r) {
        double p = rho.value(r);
        return p * p;
      },
      d, r_max);
  Point origin(d, 0.0);
  DirectionSampler half(d, sampler.seed(), sampler.size() / 2);
  double num = radial_integral(spec, origin, num_table, sampler);
  double den = radial_integral(spec, origin, den_table, sampler);
  double q_half = radial_integral(spec, origin, num_table, half) / radial_integral(spec, origin, den_table, half);
  QuotientBound q;
  q.numerator = num;
  q.denominator = den;
  q.qhat = num / den;
  q.tone_ball = tone.omega;
  q.gap = tone.omega - q.qhat;
  q.mc_error = std::fabs(q.qhat - q_half);
  return q;
}

CenteredQuotient centered_quotient(const DomainSpec& spec, double tau, std::uint64_t seed, int n_dirs) {
  DomainSpec normalized = normalize_volume(spec);
  DirectionSampler sampler(spec.dim(), seed, n_dirs);
  RadialProfile rho(fundamental_tone(spec.dim(), tau));
  CenterResult c = center_translate(normalized, rho, sampler);
  Point shift = c.center;
  for (double& x : shift) x = -x;
  DomainSpec centered = normalized.translated(shift);
  return {centered, c, quotient_bound(centered, tau, sampler)};
}

RearrangementCheck domain_monotonicity(const DomainSpec& spec, double tau, const DirectionSampler& sampler) {
  const int d = spec.dim();
  RadialProfile rho(fundamental_tone(d, tau));
  DomainSpec ball = DomainSpec::ball(d, 1.0);
  const double r_max = std::fmax(spec.bounding_radius(), 1.0) + 1e-9;
  RadialTable n_table([&](double r) { return N_of_rho(rho, tau, d, r); }, d, r_max);
  RadialTable g_table(
      [&](double r) {
        double p = rho.value(r);
        return p * p;
      },
      d, r_max);
  Point origin(d, 0.0);
  DirectionSampler half(d, sampler.seed(), sampler.size() / 2);
  RearrangementCheck c;
  c.n_domain = radial_integral(spec, origin, n_table, sampler);
  c.n_ball = radial_integral(ball, origin, n_table, sampler);
  c.g_domain = radial_integral(spec, origin, g_table, sampler);
  c.g_ball = radial_integral(ball, origin, g_table, sampler);
  c.mc_error = std::fmax(std::fabs(c.n_domain - radial_integral(spec, origin, n_table, half)),
                         std::fabs(c.g_domain - radial_integral(spec, origin, g_table, half)));
  return c;
}

CheckReport monotonicity_report(const RadialProfile& rho, double tau, int d, double r_max, int n) {
  if (!(r_max > 1)) throw InvalidArgument("monotonicity_report needs r_max > 1");
  if (n < 100) throw InvalidArgument("monotonicity_report needs n >= 100");
  const double delta = 1e-3;
  double min_slope = INFINITY, min_in = INFINITY, max_out = -INFINITY, max_rpp = -INFINITY;
  double min_inner = INFINITY, worst_identity = 0;
  for (int i = 1; i <= n; ++i) {
    double r = r_max * i / n;
    min_slope = std::fmin(min_slope, 2 * rho.value(r) * rho.d1(r));
    double N = N_of_rho(rho, tau, d, r);
    if (r <= 1.0) {
      min_in = std::fmin(min_in, N);
      min_inner = std::fmin(min_inner, rho.inner_factor(r));
      double direct = rho.gap_over_r2(r), viaid = rho.gap_over_r2_identity(r);
      worst_identity = std::fmax(worst_identity, std::fabs(direct - viaid) / std::fmax(std::fabs(direct), 1e-300));
    } else {
      max_out = std::fmax(max_out, N);
    }
    if (r > delta && r < 1 - delta) max_rpp = std::fmax(max_rpp, rho.d2(r));
  }
  CheckReport rep;
  rep.add("rho2-increasing", min_slope > 0, min_slope, 0.0);
  rep.add("N-partial-monotone", min_in - max_out > 0, min_in - max_out, 0.0);
  rep.add("rho-concave", max_rpp < 0, max_rpp, 0.0);
  rep.add("inner-factor-positive", min_inner > 0, min_inner, 0.0);
  rep.add("inner-factor-identity", worst_identity <= 1e-10, worst_identity, 1e-10);

  // the two branches of the remaining-factor argument
  double a = rho.a(), b = rho.b(), g = rho.gamma();
  if (tau > 9.0 / (d + 5)) {
    double v = tau - 3 * a * a / (d + 2);
    rep.add("largetau", v > 0, v, 0.0);
  } else {
    double v = tau - 3 * a * a / (d + 2) + g * (tau + 3 * b * b / (d + 2));
    rep.add("smalltau", v > 0, v, 0.0);
  }
  return rep;
}

CheckReport domain_report(const DomainSpec& spec, double tau, std::uint64_t seed) {
  CenteredQuotient q = centered_quotient(spec, tau, seed);
  CheckReport rep;
  rep.add("center-residual", q.center.residual <= 1e-6, q.center.residual, 1e-6);
  const QuotientBound& b = q.bound;
  if (spec.kind() == DomainKind::ball) {
    double tol = std::fmax(1e-6 * b.tone_ball, b.mc_error);
    rep.add("quotient-equality", std::fabs(b.gap) <= tol, b.qhat, tol);
  } else {
    rep.add("quotient-below-tone", b.qhat < b.tone_ball, b.qhat, b.tone_ball);
    CheckItem gap{"quotient-gap", CheckStatus::pass, b.gap, 3 * b.mc_error};
    if (!(b.gap > 0)) gap.status = CheckStatus::fail;
    else if (b.gap <= 3 * b.mc_error) gap.status = CheckStatus::inconclusive;
    rep.items.push_back(gap);
    DirectionSampler s(spec.dim(), seed);
    RearrangementCheck r = domain_monotonicity(q.domain, tau, s);
    rep.add("numerator-below-ball", r.n_domain < r.n_ball, r.n_domain, r.n_ball);
    rep.add("denominator-above-ball", r.g_domain > r.g_ball, r.g_domain, r.g_ball);
  }
  rep.add("tone-ball", true, b.tone_ball, 0.0);
  return rep;
}

}  // namespace freeplate
