#include "metriq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace metriq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// absolute tie tolerance for collecting all global minimizers
double tie_tolerance(double distance) { return 1e-9 * (1.0 + distance); }

Vec2 segment_closest(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len_sq = ab.norm_sq();
  if (len_sq == 0.0) return a;
  double t = dot(p - a, ab) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  return a + ab * t;
}

void check_dim(const Domain& d, const Point& x) {
  if (x.dim() != d.dim())
    throw std::invalid_argument("point dimension does not match domain");
}

void check_interior(const Domain& d, const Point& x) {
  check_dim(d, x);
  if (!d.contains(x))
    throw std::invalid_argument("point is not in the open domain");
}

void append_unique(std::vector<Vec2>& pts, Vec2 p) {
  for (const Vec2& q : pts)
    if (dist(p, q) <= 1e-12 * (1.0 + p.norm())) return;
  pts.push_back(p);
}

}  // namespace

double arg_in_turn(Vec2 v) {
  if (v.x == 0.0 && v.y == 0.0) return 0.0;
  double a = std::atan2(v.y, v.x);
  if (a < 0.0) a += kTwoPi;
  return a;
}

void Point::validate() const {
  if (coords_.size() < 2)
    throw std::invalid_argument("point needs at least two coordinates");
  for (double c : coords_)
    if (!std::isfinite(c)) throw std::invalid_argument("point coordinate not finite");
}

Vec2 Point::planar() const {
  if (dim() != 2) throw std::invalid_argument("planar() requires a 2-D point");
  return {coords_[0], coords_[1]};
}

double norm(const Point& p) {
  double s = 0.0;
  for (double c : p.coords()) s += c * c;
  return std::sqrt(s);
}

double dist(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double TildeSet::distance_from(const Point& y) const {
  if (full_sphere) return std::abs(sphere_radius - dist(y, base));
  double best = std::numeric_limits<double>::infinity();
  for (const Point& p : points) best = std::min(best, dist(y, p));
  return best;
}

// ---------------------------------------------------------------------------
// Domain construction
// ---------------------------------------------------------------------------

Domain Domain::half_space(int dim) {
  if (dim < 2) throw std::invalid_argument("half-space dimension must be >= 2");
  return Domain(HalfSpace{dim});
}

Domain Domain::unit_ball(int dim) {
  if (dim < 2) throw std::invalid_argument("ball dimension must be >= 2");
  return Domain(UnitBall{dim});
}

Domain Domain::sector(double theta) {
  if (!(theta > 0.0) || !(theta < kTwoPi))
    throw std::invalid_argument("sector angle must lie strictly in (0, 2*pi)");
  return Domain(Sector{theta});
}

Domain Domain::polygon(std::vector<Vec2> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least three vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices[i];
    const Vec2 b = vertices[(i + 1) % n];
    const Vec2 c = vertices[(i + 2) % n];
    if (cross(b - a, c - b) <= 0.0)
      throw std::invalid_argument(
          "polygon vertices must be counterclockwise and strictly convex");
  }
  return Domain(ConvexPolygon{std::move(vertices)});
}

Domain Domain::punctured_plane(std::vector<Vec2> punctures) {
  if (punctures.empty())
    throw std::invalid_argument("punctured plane needs at least one puncture");
  for (std::size_t i = 0; i < punctures.size(); ++i)
    for (std::size_t j = i + 1; j < punctures.size(); ++j)
      if (punctures[i] == punctures[j])
        throw std::invalid_argument("punctures must be pairwise distinct");
  return Domain(PuncturedPlane{std::move(punctures)});
}

int Domain::dim() const {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HalfSpace> || std::is_same_v<T, UnitBall>)
          return v.dim;
        else
          return 2;
      },
      v_);
}

bool Domain::convex() const {
  if (const auto* s = get_if<Sector>()) return s->theta <= std::numbers::pi;
  return !std::holds_alternative<PuncturedPlane>(v_);
}

bool Domain::contains(const Point& x) const {
  check_dim(*this, x);
  return std::visit(
      [&x](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          return x[v.dim - 1] > 0.0;
        } else if constexpr (std::is_same_v<T, UnitBall>) {
          return norm(x) < 1.0;
        } else if constexpr (std::is_same_v<T, Sector>) {
          const Vec2 p = x.planar();
          if (p.norm_sq() == 0.0) return false;
          const double phi = arg_in_turn(p);
          return phi > 0.0 && phi < v.theta;
        } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
          const Vec2 p = x.planar();
          const std::size_t n = v.vertices.size();
          for (std::size_t i = 0; i < n; ++i) {
            const Vec2 a = v.vertices[i];
            const Vec2 b = v.vertices[(i + 1) % n];
            if (cross(b - a, p - a) <= 0.0) return false;
          }
          return true;
        } else {
          const Vec2 p = x.planar();
          for (const Vec2& s : v.punctures)
            if ((p - s).norm_sq() == 0.0) return false;
          return true;
        }
      },
      v_);
}

double Domain::boundary_distance(const Point& x) const {
  check_interior(*this, x);
  return std::visit(
      [&x](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          return x[v.dim - 1];
        } else if constexpr (std::is_same_v<T, UnitBall>) {
          return 1.0 - norm(x);
        } else if constexpr (std::is_same_v<T, Sector>) {
          const Vec2 p = x.planar();
          const double r = p.norm();
          const double phi = arg_in_turn(p);
          const double side = std::min(phi, v.theta - phi);
          return side <= std::numbers::pi / 2.0 ? r * std::sin(side) : r;
        } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
          const Vec2 p = x.planar();
          double best = std::numeric_limits<double>::infinity();
          const std::size_t n = v.vertices.size();
          for (std::size_t i = 0; i < n; ++i)
            best = std::min(
                best, dist(p, segment_closest(p, v.vertices[i],
                                              v.vertices[(i + 1) % n])));
          return best;
        } else {
          const Vec2 p = x.planar();
          double best = std::numeric_limits<double>::infinity();
          for (const Vec2& s : v.punctures) best = std::min(best, dist(p, s));
          return best;
        }
      },
      v_);
}

NearestSet Domain::nearest_boundary_points(const Point& x) const {
  check_interior(*this, x);
  NearestSet out;
  out.base = x;

  if (const auto* h = get_if<HalfSpace>()) {
    out.distance = x[h->dim - 1];
    std::vector<double> c = x.coords();
    c.back() = 0.0;
    out.points.push_back(Point(std::move(c)));
    return out;
  }
  if (get_if<UnitBall>()) {
    const double r = norm(x);
    out.distance = 1.0 - r;
    if (r == 0.0) {
      out.exhaustive = false;  // the whole unit sphere
      return out;
    }
    std::vector<double> c = x.coords();
    for (double& v : c) v /= r;
    out.points.push_back(Point(std::move(c)));
    return out;
  }

  // planar variants: collect per-piece candidates, keep the global minimizers
  const Vec2 p = x.planar();
  std::vector<Vec2> candidates;
  if (const auto* s = get_if<Sector>()) {
    for (double ang : {0.0, s->theta}) {
      const Vec2 u = polar(1.0, ang);
      candidates.push_back(u * std::max(0.0, dot(p, u)));
    }
  } else if (const auto* poly = get_if<ConvexPolygon>()) {
    const std::size_t n = poly->vertices.size();
    for (std::size_t i = 0; i < n; ++i)
      candidates.push_back(
          segment_closest(p, poly->vertices[i], poly->vertices[(i + 1) % n]));
  } else {
    candidates = get_if<PuncturedPlane>()->punctures;
  }

  double best = std::numeric_limits<double>::infinity();
  for (const Vec2& c : candidates) best = std::min(best, dist(p, c));
  std::vector<Vec2> keep;
  for (const Vec2& c : candidates)
    if (dist(p, c) <= best + tie_tolerance(best)) append_unique(keep, c);

  out.distance = best;
  for (const Vec2& c : keep) out.points.push_back(Point(c));
  return out;
}

TildeSet Domain::tilde_set(const Point& x) const {
  if (!convex())
    throw unsupported_domain_error(
        "tilde sets are defined for convex domains only");
  const NearestSet near = nearest_boundary_points(x);
  TildeSet out;
  out.base = x;
  if (!near.exhaustive) {  // ball center: the sphere of radius 2*d_G(x)
    out.full_sphere = true;
    out.sphere_radius = 2.0 * near.distance;
    return out;
  }
  for (const Point& m : near.points) {
    std::vector<double> c(static_cast<std::size_t>(x.dim()));
    for (int i = 0; i < x.dim(); ++i) c[static_cast<std::size_t>(i)] = 2.0 * m[i] - x[i];
    out.points.push_back(Point(std::move(c)));
  }
  return out;
}

Point Domain::reference_point() const {
  return std::visit(
      [](const auto& v) -> Point {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          std::vector<double> c(static_cast<std::size_t>(v.dim), 0.0);
          c.back() = 1.0;
          return Point(std::move(c));
        } else if constexpr (std::is_same_v<T, UnitBall>) {
          return Point(std::vector<double>(static_cast<std::size_t>(v.dim), 0.0));
        } else if constexpr (std::is_same_v<T, Sector>) {
          return Point(polar(1.0, v.theta / 2.0));
        } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
          Vec2 c{0.0, 0.0};
          for (const Vec2& p : v.vertices) c = c + p;
          return Point(c / static_cast<double>(v.vertices.size()));
        } else {
          Vec2 c{0.0, 0.0};
          for (const Vec2& s : v.punctures) c = c + s;
          c = c / static_cast<double>(v.punctures.size());
          // nudge until clear of every puncture
          auto too_close = [&v](Vec2 q) {
            for (const Vec2& s : v.punctures)
              if (dist(q, s) < 1e-3) return true;
            return false;
          };
          while (too_close(c)) c = c + Vec2{0.773, 0.411};
          return Point(c);
        }
      },
      v_);
}

double Domain::boundary_offset(const Point& p) const {
  check_dim(*this, p);
  return std::visit(
      [&p](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          return std::abs(p[v.dim - 1]);
        } else if constexpr (std::is_same_v<T, UnitBall>) {
          return std::abs(1.0 - norm(p));
        } else if constexpr (std::is_same_v<T, Sector>) {
          const Vec2 q = p.planar();
          double best = std::numeric_limits<double>::infinity();
          for (double ang : {0.0, v.theta}) {
            const Vec2 u = polar(1.0, ang);
            best = std::min(best, dist(q, u * std::max(0.0, dot(q, u))));
          }
          return best;
        } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
          const Vec2 q = p.planar();
          double best = std::numeric_limits<double>::infinity();
          const std::size_t n = v.vertices.size();
          for (std::size_t i = 0; i < n; ++i)
            best = std::min(
                best, dist(q, segment_closest(q, v.vertices[i],
                                              v.vertices[(i + 1) % n])));
          return best;
        } else {
          const Vec2 q = p.planar();
          double best = std::numeric_limits<double>::infinity();
          for (const Vec2& s : v.punctures) best = std::min(best, dist(q, s));
          return best;
        }
      },
      v_);
}

// ---------------------------------------------------------------------------
// Planar constructions
// ---------------------------------------------------------------------------

Vec2 reflect_across_line(Vec2 x, Vec2 a, Vec2 b) {
  if (a == b) throw std::invalid_argument("line endpoints must differ");
  const Vec2 d = (b - a) / dist(a, b);
  const Vec2 v = x - a;
  const Vec2 perp = v - d * dot(v, d);
  return x - perp * 2.0;
}

Point reflect_across_line(const Point& x, const Point& a, const Point& b) {
  return Point(reflect_across_line(x.planar(), a.planar(), b.planar()));
}

Vec2 sector_power_map(double theta, Vec2 x) {
  if (!(theta > 0.0) || !(theta < kTwoPi))
    throw std::invalid_argument("sector angle must lie strictly in (0, 2*pi)");
  const double r = x.norm();
  const double phi = arg_in_turn(x);
  if (r == 0.0 || phi <= 0.0 || phi >= theta)
    throw std::invalid_argument("point is not inside the sector");
  const double e = std::numbers::pi / theta;
  return polar(std::pow(r, e), phi * e);
}

Vec2 sector_power_unmap(double theta, Vec2 y) {
  if (!(theta > 0.0) || !(theta < kTwoPi))
    throw std::invalid_argument("sector angle must lie strictly in (0, 2*pi)");
  const double r = y.norm();
  const double phi = arg_in_turn(y);
  if (r == 0.0 || phi <= 0.0 || phi >= std::numbers::pi)
    throw std::invalid_argument("point is not in the upper half-plane");
  const double e = theta / std::numbers::pi;
  return polar(std::pow(r, e), phi * e);
}

std::pair<Vec2, Vec2> plane_reduce(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  const int n = x.dim();
  const double nx = norm(x);
  const double ny = norm(y);

  std::vector<double> u(static_cast<std::size_t>(n), 0.0);
  if (nx > 0.0) {
    for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = x[i] / nx;
  } else if (ny > 0.0) {
    for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = y[i] / ny;
  } else {
    u[0] = 1.0;
  }

  auto dot_n = [n](const std::vector<double>& a, const Point& p) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += a[static_cast<std::size_t>(i)] * p[i];
    return s;
  };

  const double yu = dot_n(u, y);
  std::vector<double> w(static_cast<std::size_t>(n));
  double wn = 0.0;
  for (int i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)] = y[i] - yu * u[static_cast<std::size_t>(i)];
    wn += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
  }
  wn = std::sqrt(wn);

  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  if (wn > 1e-14 * (1.0 + ny)) {
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / wn;
  } else {
    // collinear pair: any unit vector orthogonal to u completes the plane
    int k = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(u[static_cast<std::size_t>(i)]) < std::abs(u[static_cast<std::size_t>(k)])) k = i;
    v[static_cast<std::size_t>(k)] = 1.0;
    const double uv = u[static_cast<std::size_t>(k)];
    double vn = 0.0;
    for (int i = 0; i < n; ++i) {
      v[static_cast<std::size_t>(i)] -= uv * u[static_cast<std::size_t>(i)];
      vn += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    }
    vn = std::sqrt(vn);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] /= vn;
  }

  auto project = [&](const Point& p) -> Vec2 {
    double a = 0.0, b = 0.0;
    for (int i = 0; i < n; ++i) {
      a += u[static_cast<std::size_t>(i)] * p[i];
      b += v[static_cast<std::size_t>(i)] * p[i];
    }
    return {a, b};
  };
  return {project(x), project(y)};
}

std::pair<Vec2, Vec2> halfspace_reduce(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  const int n = x.dim();
  double h = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double d = y[i] - x[i];
    h += d * d;
  }
  return {Vec2{0.0, x[n - 1]}, Vec2{std::sqrt(h), y[n - 1]}};
}

Vec2 invert(Vec2 x) {
  const double s = x.norm_sq();
  if (s == 0.0) throw std::invalid_argument("cannot invert the origin");
  return x / s;
}

Point invert_unit_sphere(const Point& x) {
  double s = 0.0;
  for (double c : x.coords()) s += c * c;
  if (s == 0.0) throw std::invalid_argument("cannot invert the origin");
  std::vector<double> out(x.coords());
  for (double& c : out) c /= s;
  return Point(std::move(out));
}

}  // namespace metriq
