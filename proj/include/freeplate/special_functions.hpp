#pragma once

#include <array>
#include <string>

namespace freeplate {

// dimension d >= 2, order l >= 0
class UltraIndex {
 public:
  UltraIndex(int d, int l);
  int d() const { return d_; }
  int l() const { return l_; }
  double s() const { return 0.5 * (d_ - 2); }

 private:
  int d_;
  int l_;
};

struct SeriesPolicy {
  double rel_tol = 1e-15;
  int max_terms = 400;
  double z_max = 200.0;
};

// m-th derivative (0 <= m <= 4) of j_l(z) = z^{-s} J_{s+l}(z) and i_l(z) = z^{-s} I_{s+l}(z)
double ultra_j(const UltraIndex& idx, int m, double z, const SeriesPolicy& policy = {});
double ultra_i(const UltraIndex& idx, int m, double z, const SeriesPolicy& policy = {});

// first positive zero of j_l'
double first_deriv_zero(const UltraIndex& idx, const SeriesPolicy& policy = {});

// shorthand for the d-dimensional p_{1,1}
double p11(int d);

struct RelationResidual {
  std::string name;
  bool applicable = true;
  double residual = 0.0;  // |lhs - rhs| / max(1, |lhs|)
};

std::array<RelationResidual, 8> recurrence_residuals(const UltraIndex& idx, double z,
                                                     const SeriesPolicy& policy = {});

// Gamma(n/2) for integer n >= 1, by upward recursion
long double half_integer_gamma(int n);

double unit_ball_volume(int d);
double unit_sphere_area(int d);

}  // namespace freeplate
