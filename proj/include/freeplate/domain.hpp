#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freeplate/numerics.hpp"

namespace freeplate {

using Point = std::vector<double>;

enum class DomainKind { ball, ellipsoid, box, polygon2d };

const char* to_string(DomainKind k);

// Bounded region given by a closed-form indicator. Ellipsoids and boxes are axis aligned
// and centered at `offset`; polygon vertices are absolute and then shifted by `offset`.
class DomainSpec {
 public:
  static DomainSpec ball(int d, double radius);
  static DomainSpec ellipsoid(std::vector<double> semi_axes);
  static DomainSpec box(std::vector<double> sides);
  static DomainSpec polygon(std::vector<std::pair<double, double>> vertices);

  DomainKind kind() const { return kind_; }
  int dim() const { return d_; }
  const std::vector<double>& params() const { return params_; }
  const std::vector<std::pair<double, double>>& vertices() const { return vertices_; }
  const Point& offset() const { return offset_; }

  double volume() const;
  double bounding_radius() const;  // max |x| over the closure
  Point centroid() const;
  bool contains(const Point& x) const;

  DomainSpec translated(const Point& shift) const;
  DomainSpec scaled(double s) const;  // about the centroid

  // parameter intervals [t0, t1], t >= 0, with origin + t * dir inside the domain
  std::vector<std::pair<double, double>> ray_intervals(const Point& origin, const Point& dir) const;

 private:
  DomainSpec(DomainKind kind, int d);
  DomainKind kind_;
  int d_;
  std::vector<double> params_;
  std::vector<std::pair<double, double>> vertices_;
  Point offset_;
};

// key=value block, whitespace or newline separated. Keys: kind, d, radius, axes, sides,
// vertices (x1,y1;x2,y2;...), aspect, center. '#' starts a comment.
DomainSpec parse_domain(std::string_view text);

DomainSpec normalize_volume(const DomainSpec& spec);

class DirectionSampler {
 public:
  DirectionSampler(int d, std::uint64_t seed, int n_dirs = 1 << 14);
  int dim() const { return d_; }
  std::uint64_t seed() const { return seed_; }
  int size() const { return static_cast<int>(dirs_.size()); }
  const std::vector<Point>& directions() const { return dirs_; }

 private:
  int d_;
  std::uint64_t seed_;
  std::vector<Point> dirs_;
};

// Cumulative table of G(t) = int_0^t F(r) r^{d-1} dr on [0, r_max]. Cells come from
// integrate_1d; partial cells use a local cubic through neighbouring nodes, never
// reaching across the breakpoint r = 1 where the trial profiles change form.
class RadialTable {
 public:
  RadialTable(const RealFn& F, int d, double r_max, int cells_per_unit = 512);
  double cumulative(double t) const;
  double r_max() const { return r_max_; }

 private:
  double h_;
  double r_max_;
  int split_;  // node index of r = 1, or -1
  std::vector<double> g_;
  std::vector<double> cum_;
};

// int_Omega F(|x - center|) dx over the sampled directions
double radial_integral(const DomainSpec& spec, const Point& center, const RadialTable& table,
                       const DirectionSampler& sampler);
double radial_integral(const DomainSpec& spec, const Point& center, const RealFn& F,
                       const DirectionSampler& sampler);

// vector integral int_Omega F(|x - center|) (x - center)/|x - center| dx
Point radial_vector_integral(const DomainSpec& spec, const Point& center, const RadialTable& table,
                             const DirectionSampler& sampler);

// fraction of sampled directions u with center + r u inside the domain
double inside_fraction(const DomainSpec& spec, const Point& center, double r, const DirectionSampler& sampler);

}  // namespace freeplate
