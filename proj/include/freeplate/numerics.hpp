#pragma once

#include <functional>
#include <vector>

namespace freeplate {

using RealFn = std::function<double(double)>;

struct Interval {
  double lo;
  double hi;
};

struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
  bool exact = false;  // f vanished exactly at the grid point center()
  double center() const { return 0.5 * (lo + hi); }
};

// Uniform grid of grid_n points including both ends. Every sign change between
// neighbours gives one bracket; an exact zero on a grid point gives a bracket of
// one grid step centered on it.
std::vector<Bracket> bracket_roots(const RealFn& f, Interval iv, int grid_n);

double refine_root(const RealFn& f, const Bracket& b, double tol);

struct QuadraturePolicy {
  double abs_tol = 1e-10;
  int max_depth = 40;
  int min_depth = 2;
};

double integrate_1d(const RealFn& f, Interval iv, const QuadraturePolicy& policy = {});

struct Derivative {
  double value;
  double error;
};

// central differences, two Richardson levels over h0, h0/2, h0/4
Derivative fd_derivative(const RealFn& f, double x, int order, double h0);

}  // namespace freeplate
