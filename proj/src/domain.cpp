#include "freeplate/domain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <numbers>
#include <random>
#include <sstream>

#include "freeplate/error.hpp"
#include "freeplate/special_functions.hpp"

namespace freeplate {

const char* to_string(DomainKind k) {
  switch (k) {
    case DomainKind::ball: return "ball";
    case DomainKind::ellipsoid: return "ellipsoid";
    case DomainKind::box: return "box";
    case DomainKind::polygon2d: return "polygon";
  }
  return "unknown";
}

namespace {

double norm(const Point& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

void require_positive(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!(x > 0) || !std::isfinite(x)) throw DomainError(std::string("degenerate domain: ") + what + " must be positive");
}

double signed_area(const std::vector<std::pair<double, double>>& v) {
  double s = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    auto [x0, y0] = v[i];
    auto [x1, y1] = v[(i + 1) % v.size()];
    s += x0 * y1 - x1 * y0;
  }
  return 0.5 * s;
}

}  // namespace

DomainSpec::DomainSpec(DomainKind kind, int d) : kind_(kind), d_(d), offset_(d, 0.0) {}

DomainSpec DomainSpec::ball(int d, double radius) {
  if (d < 2) throw DomainError("dimension must be >= 2");
  DomainSpec s(DomainKind::ball, d);
  s.params_ = {radius};
  require_positive(s.params_, "radius");
  return s;
}

DomainSpec DomainSpec::ellipsoid(std::vector<double> semi_axes) {
  if (semi_axes.size() < 2) throw DomainError("ellipsoid needs at least two semi-axes");
  require_positive(semi_axes, "semi-axes");
  DomainSpec s(DomainKind::ellipsoid, static_cast<int>(semi_axes.size()));
  s.params_ = std::move(semi_axes);
  return s;
}

DomainSpec DomainSpec::box(std::vector<double> sides) {
  if (sides.size() < 2) throw DomainError("box needs at least two sides");
  require_positive(sides, "sides");
  DomainSpec s(DomainKind::box, static_cast<int>(sides.size()));
  s.params_ = std::move(sides);
  return s;
}

DomainSpec DomainSpec::polygon(std::vector<std::pair<double, double>> vertices) {
  if (vertices.size() < 3) throw DomainError("polygon needs at least three vertices");
  for (auto [x, y] : vertices)
    if (!std::isfinite(x) || !std::isfinite(y)) throw DomainError("polygon vertices must be finite");
  if (std::fabs(signed_area(vertices)) <= 0) throw DomainError("degenerate domain: polygon has zero area");
  DomainSpec s(DomainKind::polygon2d, 2);
  s.vertices_ = std::move(vertices);
  return s;
}

double DomainSpec::volume() const {
  switch (kind_) {
    case DomainKind::ball: return unit_ball_volume(d_) * std::pow(params_[0], d_);
    case DomainKind::ellipsoid: {
      double v = unit_ball_volume(d_);
      for (double a : params_) v *= a;
      return v;
    }
    case DomainKind::box: {
      double v = 1.0;
      for (double a : params_) v *= a;
      return v;
    }
    case DomainKind::polygon2d: return std::fabs(signed_area(vertices_));
  }
  return 0.0;
}

double DomainSpec::bounding_radius() const {
  switch (kind_) {
    case DomainKind::ball: return norm(offset_) + params_[0];
    case DomainKind::ellipsoid: return norm(offset_) + *std::max_element(params_.begin(), params_.end());
    case DomainKind::box: {
      double s = 0;
      for (int i = 0; i < d_; ++i) {
        double c = std::fabs(offset_[i]) + 0.5 * params_[i];
        s += c * c;
      }
      return std::sqrt(s);
    }
    case DomainKind::polygon2d: {
      double r = 0;
      for (auto [x, y] : vertices_) r = std::fmax(r, std::hypot(x + offset_[0], y + offset_[1]));
      return r;
    }
  }
  return 0.0;
}

Point DomainSpec::centroid() const {
  if (kind_ != DomainKind::polygon2d) return offset_;
  double A = signed_area(vertices_), cx = 0, cy = 0;
  for (size_t i = 0; i < vertices_.size(); ++i) {
    auto [x0, y0] = vertices_[i];
    auto [x1, y1] = vertices_[(i + 1) % vertices_.size()];
    double w = x0 * y1 - x1 * y0;
    cx += (x0 + x1) * w;
    cy += (y0 + y1) * w;
  }
  return {cx / (6 * A) + offset_[0], cy / (6 * A) + offset_[1]};
}

bool DomainSpec::contains(const Point& x) const {
  if (static_cast<int>(x.size()) != d_) throw InvalidArgument("point dimension mismatch");
  switch (kind_) {
    case DomainKind::ball: {
      double s = 0;
      for (int i = 0; i < d_; ++i) s += (x[i] - offset_[i]) * (x[i] - offset_[i]);
      return s <= params_[0] * params_[0];
    }
    case DomainKind::ellipsoid: {
      double s = 0;
      for (int i = 0; i < d_; ++i) {
        double u = (x[i] - offset_[i]) / params_[i];
        s += u * u;
      }
      return s <= 1.0;
    }
    case DomainKind::box:
      for (int i = 0; i < d_; ++i)
        if (std::fabs(x[i] - offset_[i]) > 0.5 * params_[i]) return false;
      return true;
    case DomainKind::polygon2d: {
      double px = x[0] - offset_[0], py = x[1] - offset_[1];
      int winding = 0;
      size_t n = vertices_.size();
      for (size_t i = 0; i < n; ++i) {
        auto [x0, y0] = vertices_[i];
        auto [x1, y1] = vertices_[(i + 1) % n];
        double cross = (x1 - x0) * (py - y0) - (px - x0) * (y1 - y0);
        // on an edge counts as inside
        if (cross == 0 && px >= std::fmin(x0, x1) && px <= std::fmax(x0, x1) && py >= std::fmin(y0, y1) &&
            py <= std::fmax(y0, y1))
          return true;
        if (y0 <= py) {
          if (y1 > py && cross > 0) ++winding;
        } else if (y1 <= py && cross < 0) {
          --winding;
        }
      }
      return winding != 0;
    }
  }
  return false;
}

DomainSpec DomainSpec::translated(const Point& shift) const {
  if (static_cast<int>(shift.size()) != d_) throw InvalidArgument("shift dimension mismatch");
  DomainSpec s = *this;
  for (int i = 0; i < d_; ++i) s.offset_[i] += shift[i];
  return s;
}

DomainSpec DomainSpec::scaled(double f) const {
  if (!(f > 0) || !std::isfinite(f)) throw DomainError("scale factor must be positive");
  DomainSpec s = *this;
  if (kind_ == DomainKind::polygon2d) {
    Point c = centroid();
    double cx = c[0] - offset_[0], cy = c[1] - offset_[1];
    for (auto& [x, y] : s.vertices_) {
      x = cx + f * (x - cx);
      y = cy + f * (y - cy);
    }
  } else {
    for (double& p : s.params_) p *= f;
  }
  return s;
}

std::vector<std::pair<double, double>> DomainSpec::ray_intervals(const Point& origin, const Point& dir) const {
  std::vector<std::pair<double, double>> out;
  auto clip = [&](double t0, double t1) {
    t0 = std::fmax(t0, 0.0);
    if (t1 > t0) out.emplace_back(t0, t1);
  };
  switch (kind_) {
    case DomainKind::ball:
    case DomainKind::ellipsoid: {
      double A = 0, B = 0, C = -1.0;
      for (int i = 0; i < d_; ++i) {
        double s = kind_ == DomainKind::ball ? params_[0] : params_[i];
        double u = dir[i] / s, w = (origin[i] - offset_[i]) / s;
        A += u * u;
        B += 2 * u * w;
        C += w * w;
      }
      double disc = B * B - 4 * A * C;
      if (disc <= 0) return out;
      double sq = std::sqrt(disc);
      // stable quadratic roots
      double q = -0.5 * (B + std::copysign(sq, B));
      double r0 = q / A, r1 = q != 0 ? C / q : -r0;
      clip(std::fmin(r0, r1), std::fmax(r0, r1));
      return out;
    }
    case DomainKind::box: {
      double t0 = -INFINITY, t1 = INFINITY;
      for (int i = 0; i < d_; ++i) {
        double lo = offset_[i] - 0.5 * params_[i] - origin[i];
        double hi = offset_[i] + 0.5 * params_[i] - origin[i];
        if (dir[i] == 0) {
          if (lo > 0 || hi < 0) return out;
          continue;
        }
        double a = lo / dir[i], b = hi / dir[i];
        t0 = std::fmax(t0, std::fmin(a, b));
        t1 = std::fmin(t1, std::fmax(a, b));
      }
      clip(t0, t1);
      return out;
    }
    case DomainKind::polygon2d: {
      double ox = origin[0] - offset_[0], oy = origin[1] - offset_[1];
      std::vector<double> ts;
      size_t n = vertices_.size();
      for (size_t i = 0; i < n; ++i) {
        auto [x0, y0] = vertices_[i];
        auto [x1, y1] = vertices_[(i + 1) % n];
        double ex = x1 - x0, ey = y1 - y0;
        double den = dir[0] * ey - dir[1] * ex;
        if (den == 0) continue;
        double wx = x0 - ox, wy = y0 - oy;
        double t = (wx * ey - wy * ex) / den;
        double s = (wx * dir[1] - wy * dir[0]) / den;
        if (s >= 0 && s < 1 && t > 0) ts.push_back(t);
      }
      std::sort(ts.begin(), ts.end());
      bool inside = contains(origin);
      double start = 0.0;
      for (double t : ts) {
        if (inside) clip(start, t);
        else start = t;
        inside = !inside;
      }
      return out;
    }
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

double to_number(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ParseError("domain: bad number '" + v + "' for key '" + key + "'");
  }
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_number(key, trim(item)));
  return out;
}

}  // namespace

DomainSpec parse_domain(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::string line;
  std::stringstream in{std::string(text)};
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::stringstream words(line);
    std::string w;
    while (words >> w) {
      auto eq = w.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError("domain: expected key=value, got '" + w + "'");
      std::string key = w.substr(0, eq);
      if (kv.count(key)) throw ParseError("domain: duplicate key '" + key + "'");
      kv[key] = w.substr(eq + 1);
    }
  }
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  auto kind = take("kind");
  if (!kind) throw ParseError("domain: missing key 'kind'");
  int d = 2;
  if (auto v = take("d")) {
    double x = to_number("d", *v);
    if (x != std::floor(x) || x < 2) throw ParseError("domain: d must be an integer >= 2");
    d = static_cast<int>(x);
  }

  std::optional<DomainSpec> spec;
  if (*kind == "ball" || *kind == "disk") {
    double r = 1.0;
    if (auto v = take("radius")) r = to_number("radius", *v);
    spec = DomainSpec::ball(d, r);
  } else if (*kind == "ellipsoid" || *kind == "ellipse") {
    if (auto v = take("axes")) {
      spec = DomainSpec::ellipsoid(to_list("axes", *v));
    } else if (auto v = take("aspect")) {
      std::vector<double> axes(d, 1.0);
      axes[0] = to_number("aspect", *v);
      spec = DomainSpec::ellipsoid(axes);
    } else {
      throw ParseError("domain: ellipsoid needs 'axes' or 'aspect'");
    }
  } else if (*kind == "box" || *kind == "square" || *kind == "cube") {
    if (auto v = take("sides")) {
      spec = DomainSpec::box(to_list("sides", *v));
    } else {
      std::vector<double> sides(d, 1.0);
      if (auto v = take("aspect")) sides[0] = to_number("aspect", *v);
      spec = DomainSpec::box(sides);
    }
  } else if (*kind == "polygon") {
    auto v = take("vertices");
    if (!v) throw ParseError("domain: polygon needs 'vertices'");
    std::vector<std::pair<double, double>> verts;
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ';')) {
      auto xy = to_list("vertices", trim(item));
      if (xy.size() != 2) throw ParseError("domain: polygon vertex needs two coordinates");
      verts.emplace_back(xy[0], xy[1]);
    }
    spec = DomainSpec::polygon(verts);
  } else if (*kind == "lshape") {
    spec = DomainSpec::polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  } else {
    throw ParseError("domain: unknown kind '" + *kind + "'");
  }
  if (auto v = take("center")) {
    auto c = to_list("center", *v);
    if (static_cast<int>(c.size()) != spec->dim()) throw ParseError("domain: center has wrong dimension");
    spec = spec->translated(c);
  }
  if (!kv.empty()) throw ParseError("domain: unknown key '" + kv.begin()->first + "'");
  return *spec;
}

DomainSpec normalize_volume(const DomainSpec& spec) {
  double v = spec.volume();
  if (!(v > 0)) throw DomainError("degenerate domain: zero volume");
  double f = std::pow(unit_ball_volume(spec.dim()) / v, 1.0 / spec.dim());
  return spec.scaled(f);
}

namespace {

// 53-bit uniform in [0, 1), identical on every platform for a given engine state
double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

}  // namespace

DirectionSampler::DirectionSampler(int d, std::uint64_t seed, int n_dirs) : d_(d), seed_(seed) {
  if (d < 2) throw DomainError("dimension must be >= 2");
  if (n_dirs < 2) throw InvalidArgument("sampler needs at least two directions");
  std::mt19937_64 gen(seed);
  dirs_.reserve(n_dirs);
  const double two_pi = 2 * std::numbers::pi;
  if (d == 2) {
    double u = uniform01(gen);
    for (int i = 0; i < n_dirs; ++i) {
      double t = two_pi * (i + u) / n_dirs;
      dirs_.push_back({std::cos(t), std::sin(t)});
    }
  } else if (d == 3) {
    // Fibonacci lattice under a random rotation (unit quaternion)
    double u1 = uniform01(gen), u2 = uniform01(gen), u3 = uniform01(gen);
    double qw = std::sqrt(1 - u1) * std::sin(two_pi * u2), qx = std::sqrt(1 - u1) * std::cos(two_pi * u2);
    double qy = std::sqrt(u1) * std::sin(two_pi * u3), qz = std::sqrt(u1) * std::cos(two_pi * u3);
    double R[3][3] = {{1 - 2 * (qy * qy + qz * qz), 2 * (qx * qy - qz * qw), 2 * (qx * qz + qy * qw)},
                      {2 * (qx * qy + qz * qw), 1 - 2 * (qx * qx + qz * qz), 2 * (qy * qz - qx * qw)},
                      {2 * (qx * qz - qy * qw), 2 * (qy * qz + qx * qw), 1 - 2 * (qx * qx + qy * qy)}};
    const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
    for (int i = 0; i < n_dirs; ++i) {
      double z = 1 - (2.0 * i + 1) / n_dirs;
      double rr = std::sqrt(std::fmax(0.0, 1 - z * z));
      double phi = golden * i;
      double p[3] = {rr * std::cos(phi), rr * std::sin(phi), z};
      Point q(3);
      for (int r = 0; r < 3; ++r) q[r] = R[r][0] * p[0] + R[r][1] * p[1] + R[r][2] * p[2];
      dirs_.push_back(q);
    }
  } else {
    // antithetic pairs keep the direction sum exactly zero
    for (int i = 0; i < n_dirs; i += 2) {
      Point q(d);
      double s = 0;
      do {
        s = 0;
        for (int k = 0; k < d; k += 2) {
          double u1 = 1.0 - uniform01(gen), u2 = uniform01(gen);
          double r = std::sqrt(-2 * std::log(u1));
          q[k] = r * std::cos(two_pi * u2);
          if (k + 1 < d) q[k + 1] = r * std::sin(two_pi * u2);
        }
        for (double v : q) s += v * v;
      } while (s == 0);
      s = std::sqrt(s);
      for (double& v : q) v /= s;
      dirs_.push_back(q);
      if (i + 1 < n_dirs) {
        for (double& v : q) v = -v;
        dirs_.push_back(q);
      }
    }
  }
}

RadialTable::RadialTable(const RealFn& F, int d, double r_max, int cells_per_unit) {
  if (!(r_max > 0) || !std::isfinite(r_max)) throw InvalidArgument("radial table needs r_max > 0");
  if (cells_per_unit < 8) throw InvalidArgument("radial table needs at least 8 cells per unit");
  h_ = 1.0 / cells_per_unit;
  int cells = std::max(4, static_cast<int>(std::ceil(r_max / h_)));
  r_max_ = cells * h_;
  split_ = cells_per_unit < cells - 2 ? cells_per_unit : -1;
  if (split_ >= 0 && split_ < 3) split_ = -1;
  auto g = [&](double r) { return F(r) * std::pow(r, d - 1); };
  g_.resize(cells + 1);
  cum_.assign(cells + 1, 0.0);
  for (int i = 0; i <= cells; ++i) g_[i] = g(i * h_);
  QuadraturePolicy pol;
  pol.abs_tol = 1e-14;
  pol.min_depth = 0;
  for (int i = 0; i < cells; ++i) cum_[i + 1] = cum_[i] + integrate_1d(g, {i * h_, (i + 1) * h_}, pol);
}

double RadialTable::cumulative(double t) const {
  if (t <= 0) return 0.0;
  const int cells = static_cast<int>(g_.size()) - 1;
  if (t > r_max_ * (1 + 1e-12)) throw DomainError("radial table queried beyond r_max");
  int j = std::min(static_cast<int>(t / h_), cells - 1);
  double rj = j * h_;
  if (t == rj) return cum_[j];
  int lo = 0, hi = cells;
  if (split_ >= 0) {
    if (j < split_) hi = split_;
    else lo = split_;
  }
  int s = std::clamp(j - 1, lo, hi - 3);
  // integrate the cubic through nodes s..s+3 over [rj, t] with 3-point Gauss-Legendre
  static const double gx[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
  static const double gw[3] = {5.0 / 9, 8.0 / 9, 5.0 / 9};
  double half = 0.5 * (t - rj), mid = rj + half, sum = 0;
  for (int q = 0; q < 3; ++q) {
    double x = (mid + half * gx[q]) / h_ - s;
    double v = 0;
    for (int m = 0; m < 4; ++m) {
      double w = 1;
      for (int k = 0; k < 4; ++k)
        if (k != m) w *= (x - k) / (m - k);
      v += w * g_[s + m];
    }
    sum += gw[q] * v;
  }
  return cum_[j] + half * sum;
}

namespace {

void check_center(const DomainSpec& spec, const Point& center, const DirectionSampler& sampler) {
  if (static_cast<int>(center.size()) != spec.dim()) throw InvalidArgument("center dimension mismatch");
  if (sampler.dim() != spec.dim()) throw InvalidArgument("sampler dimension mismatch");
}

}  // namespace

double radial_integral(const DomainSpec& spec, const Point& center, const RadialTable& table,
                       const DirectionSampler& sampler) {
  check_center(spec, center, sampler);
  double total = 0;
  for (const Point& u : sampler.directions())
    for (auto [t0, t1] : spec.ray_intervals(center, u)) total += table.cumulative(t1) - table.cumulative(t0);
  return total * unit_sphere_area(spec.dim()) / sampler.size();
}

double radial_integral(const DomainSpec& spec, const Point& center, const RealFn& F,
                       const DirectionSampler& sampler) {
  check_center(spec, center, sampler);
  RadialTable table(F, spec.dim(), spec.bounding_radius() + norm(center) + 1e-9);
  return radial_integral(spec, center, table, sampler);
}

Point radial_vector_integral(const DomainSpec& spec, const Point& center, const RadialTable& table,
                             const DirectionSampler& sampler) {
  check_center(spec, center, sampler);
  Point out(spec.dim(), 0.0);
  for (const Point& u : sampler.directions()) {
    double w = 0;
    for (auto [t0, t1] : spec.ray_intervals(center, u)) w += table.cumulative(t1) - table.cumulative(t0);
    for (int i = 0; i < spec.dim(); ++i) out[i] += w * u[i];
  }
  double f = unit_sphere_area(spec.dim()) / sampler.size();
  for (double& v : out) v *= f;
  return out;
}

double inside_fraction(const DomainSpec& spec, const Point& center, double r, const DirectionSampler& sampler) {
  check_center(spec, center, sampler);
  int hits = 0;
  Point x(spec.dim());
  for (const Point& u : sampler.directions()) {
    for (int i = 0; i < spec.dim(); ++i) x[i] = center[i] + r * u[i];
    if (spec.contains(x)) ++hits;
  }
  return static_cast<double>(hits) / sampler.size();
}

}  // namespace freeplate
