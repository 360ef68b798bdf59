#pragma once

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace metriq {

// Thrown when an operation is undefined for the given domain variant,
// e.g. tilde sets on non-convex domains or the hyperbolic metric outside
// the half-space / ball / sector catalog.
class unsupported_domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Planar vectors and n-dimensional points
// ---------------------------------------------------------------------------

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double px, double py) : x(px), y(py) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Vec2&) const = default;

  double norm() const { return std::sqrt(x * x + y * y); }
  constexpr double norm_sq() const { return x * x + y * y; }
};

constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }
inline Vec2 polar(double r, double angle) {
  return {r * std::cos(angle), r * std::sin(angle)};
}
// complex product (a treated as a + ib)
constexpr Vec2 cmul(Vec2 a, Vec2 b) {
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}
constexpr Vec2 conj(Vec2 a) { return {a.x, -a.y}; }

// angle of v, normalized to [0, 2*pi); 0 for the zero vector
double arg_in_turn(Vec2 v);

// Euclidean point with n >= 2 finite coordinates.
class Point {
 public:
  Point() = default;
  Point(double px, double py) : coords_{px, py} { validate(); }
  Point(std::initializer_list<double> cs) : coords_(cs) { validate(); }
  explicit Point(std::vector<double> cs) : coords_(std::move(cs)) { validate(); }
  explicit Point(Vec2 v) : coords_{v.x, v.y} {}

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& coords() const { return coords_; }
  Vec2 planar() const;  // requires dim() == 2
  bool operator==(const Point&) const = default;

 private:
  void validate() const;
  std::vector<double> coords_;
};

double norm(const Point& p);
double dist(const Point& a, const Point& b);

// ---------------------------------------------------------------------------
// Domains
// ---------------------------------------------------------------------------

struct HalfSpace {
  int dim = 2;  // points with positive last coordinate
};

struct UnitBall {
  int dim = 2;
};

struct Sector {
  double theta = 0.0;  // points with argument strictly inside (0, theta)
};

struct ConvexPolygon {
  std::vector<Vec2> vertices;  // counterclockwise, strictly convex
};

struct PuncturedPlane {
  std::vector<Vec2> punctures;  // pairwise distinct
};

// All boundary points realizing the distance from `base` to the boundary.
// `exhaustive` is false when the true nearest set is a continuum (ball center).
struct NearestSet {
  Point base;
  double distance = 0.0;
  std::vector<Point> points;
  bool exhaustive = true;
};

// The set of points at distance 2*d_G(x) from x whose midpoint with x lies on
// the boundary. For the ball center the set is the full sphere of radius 2 and
// is kept symbolic instead of sampled.
struct TildeSet {
  Point base;
  std::vector<Point> points;
  bool full_sphere = false;
  double sphere_radius = 0.0;

  // inf over the tilde set of |y - tilde|
  double distance_from(const Point& y) const;
};

class Domain {
 public:
  using Variant =
      std::variant<HalfSpace, UnitBall, Sector, ConvexPolygon, PuncturedPlane>;

  Domain() = default;  // the planar half-space

  static Domain half_space(int dim = 2);
  static Domain unit_ball(int dim = 2);
  static Domain sector(double theta);
  static Domain polygon(std::vector<Vec2> vertices);
  static Domain punctured_plane(std::vector<Vec2> punctures);

  const Variant& variant() const { return v_; }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

  int dim() const;
  bool convex() const;

  // true iff x lies in the open domain
  bool contains(const Point& x) const;

  // distance from an interior point to the boundary (d_G)
  double boundary_distance(const Point& x) const;

  NearestSet nearest_boundary_points(const Point& x) const;

  // requires a convex domain
  TildeSet tilde_set(const Point& x) const;

  // a fixed interior point, used as the center for sampling and for
  // projecting search iterates back inside
  Point reference_point() const;

  // unsigned distance from an arbitrary point to the boundary set
  double boundary_offset(const Point& p) const;

 private:
  explicit Domain(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// ---------------------------------------------------------------------------
// Planar constructions
// ---------------------------------------------------------------------------

// Euclidean reflection of x across the line through a and b (a != b).
Vec2 reflect_across_line(Vec2 x, Vec2 a, Vec2 b);
Point reflect_across_line(const Point& x, const Point& a, const Point& b);

// z -> z^(pi/theta) on the branch with argument in (0, theta); maps the
// sector onto the upper half-plane.
Vec2 sector_power_map(double theta, Vec2 x);
// inverse branch, mapping the upper half-plane back into the sector
Vec2 sector_power_unmap(double theta, Vec2 y);

// Coordinates of x, y in an orthonormal basis of a 2-plane through x, y and
// the origin; preserves |x|, |y| and |x - y|. x maps onto the positive first
// axis, y gets a non-negative second coordinate.
std::pair<Vec2, Vec2> plane_reduce(const Point& x, const Point& y);

// Coordinates of x, y in a 2-D half-plane preserving heights (last
// coordinates), the horizontal displacement and |x - y|.
std::pair<Vec2, Vec2> halfspace_reduce(const Point& x, const Point& y);

// inversion in the unit sphere, x / |x|^2
Vec2 invert(Vec2 x);
Point invert_unit_sphere(const Point& x);

}  // namespace metriq
