#pragma once

#include <cstdint>

#include "freeplate/ball_spectrum.hpp"
#include "freeplate/domain.hpp"
#include "freeplate/report.hpp"

namespace freeplate {

struct CenterResult {
  Point center;
  double residual;  // |X(v*)| / int rho
  int iterations;
};

// v* with X(v*) = int_Omega rho(|x - v|) (x - v)/|x - v| dx = 0
CenterResult center_translate(const DomainSpec& spec, const RadialProfile& rho, const DirectionSampler& sampler);

struct QuotientBound {
  double qhat;
  double tone_ball;
  double gap;       // tone_ball - qhat
  double mc_error;  // |qhat(n) - qhat(n/2)|
  double numerator;
  double denominator;
};

// quotient of N[rho] over rho^2 for a spec that is already normalized and centered at the origin
QuotientBound quotient_bound(const DomainSpec& spec, double tau, const DirectionSampler& sampler);

struct CenteredQuotient {
  DomainSpec domain;  // normalized and translated so that v* = 0
  CenterResult center;
  QuotientBound bound;
};

CenteredQuotient centered_quotient(const DomainSpec& spec, double tau, std::uint64_t seed, int n_dirs = 1 << 14);

// int_Omega N <= int_B N and int_Omega rho^2 >= int_B rho^2, for a normalized centered spec
struct RearrangementCheck {
  double n_domain, n_ball;
  double g_domain, g_ball;
  double mc_error;
};

RearrangementCheck domain_monotonicity(const DomainSpec& spec, double tau, const DirectionSampler& sampler);

CheckReport monotonicity_report(const RadialProfile& rho, double tau, int d, double r_max, int n);

// centering, quotient bound and rearrangement items for one domain
CheckReport domain_report(const DomainSpec& spec, double tau, std::uint64_t seed);

// P(x, d) and Q(x) from the small-tension argument, g(d) and g'(d) as exact integers
double poly_P(double x, int d);
double poly_Q(double x, double a_inf_sq);
long long poly_g(long long d);
long long poly_g_prime(long long d);

CheckReport polynomial_lemma_check();
CheckReport calculus_identity_check(std::uint64_t seed);

}  // namespace freeplate
