#include "metriq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "metriq/oracle.hpp"

namespace metriq {

namespace {

constexpr double kCollinearTol = 1e-10;  // on the normalized cross product
constexpr double kEqualNormTol = 1e-12;

void check_pair(const Domain& d, const Point& x, const Point& y) {
  if (!d.contains(x) || !d.contains(y))
    throw std::invalid_argument("points must lie in the open domain");
}

// planar coordinates of a ball pair; evaluations in B^n route through the
// 2-plane containing x, y and the origin
std::pair<Vec2, Vec2> ball_plane(const Domain& d, const Point& x, const Point& y) {
  if (d.dim() == 2) return {x.planar(), y.planar()};
  return plane_reduce(x, y);
}

// infimum of |x-z| + |z-y| over one boundary ray {t*u : t >= 0}; the line
// infimum is |reflect(x) - y| and is attained on the ray iff the straight
// segment from the reflection to y crosses it, otherwise the ray infimum sits
// at the vertex.
double sector_ray_heron(Vec2 u, Vec2 x, Vec2 y) {
  const Vec2 xr = u * (2.0 * dot(x, u)) - x;  // reflection across the ray line
  const double ca = cross(u, xr);
  const double cb = cross(u, y);
  const double denom = cb - ca;
  if (denom != 0.0) {
    const double lam = -ca / denom;
    const Vec2 p = xr + (y - xr) * lam;
    if (dot(u, p) >= 0.0) return dist(xr, y);
  }
  return x.norm() + y.norm();
}

double sector_heron_denominator(double theta, Vec2 x, Vec2 y) {
  return std::min(sector_ray_heron(polar(1.0, 0.0), x, y),
                  sector_ray_heron(polar(1.0, theta), x, y));
}

// hyperbolic half-space parameter t with ch(rho) = 1 + t
double halfplane_t(Vec2 x, Vec2 y) {
  return (x - y).norm_sq() / (2.0 * x.y * y.y);
}

double halfspace_t(const Point& x, const Point& y) {
  const double r = dist(x, y);
  return r * r / (2.0 * x[x.dim() - 1] * y[y.dim() - 1]);
}

// same parameter for a sector, computed through the power map z -> z^(pi/theta)
// in log-polar form so that large moduli cannot overflow
double sector_t(double theta, Vec2 x, Vec2 y) {
  const double e = std::numbers::pi / theta;
  const double a = e * std::log(x.norm());
  const double b = e * std::log(y.norm());
  const double alpha = e * arg_in_turn(x);
  const double beta = e * arg_in_turn(y);
  return (std::cosh(a - b) - std::cos(alpha - beta)) /
         (std::sin(alpha) * std::sin(beta));
}

// ball parameter A with rho = 2 arsh(A)
double ball_a(const Point& x, const Point& y) {
  const double nx = norm(x);
  const double ny = norm(y);
  return dist(x, y) / std::sqrt((1.0 - nx * nx) * (1.0 - ny * ny));
}

enum class HypKind { half, ball, sector_dom };

HypKind hyp_kind(const Domain& d) {
  if (d.get_if<HalfSpace>()) return HypKind::half;
  if (d.get_if<UnitBall>()) return HypKind::ball;
  if (d.get_if<Sector>()) return HypKind::sector_dom;
  throw unsupported_domain_error(
      "hyperbolic metric is available on half-spaces, balls and sectors");
}

// t such that ch(rho) = 1 + t, for any domain of the hyperbolic catalog
double hyperbolic_t(const Domain& d, const Point& x, const Point& y) {
  switch (hyp_kind(d)) {
    case HypKind::half:
      return halfspace_t(x, y);
    case HypKind::ball: {
      const double a = ball_a(x, y);
      return 2.0 * a * a;  // ch(2 arsh A) = 1 + 2A^2
    }
    case HypKind::sector_dom:
      return sector_t(d.get_if<Sector>()->theta, x.planar(), y.planar());
  }
  return 0.0;
}

}  // namespace

double jstar(const Domain& d, const Point& x, const Point& y) {
  check_pair(d, x, y);
  if (x == y) return 0.0;
  const double r = dist(x, y);
  return r / (r + 2.0 * std::min(d.boundary_distance(x), d.boundary_distance(y)));
}

double point_pair(const Domain& d, const Point& x, const Point& y) {
  check_pair(d, x, y);
  if (x == y) return 0.0;
  const double r = dist(x, y);
  return r / std::sqrt(r * r + 4.0 * d.boundary_distance(x) * d.boundary_distance(y));
}

double tri_ratio_conjugate(double h, double k) {
  if (!(h > 0.0) || !(k > 0.0))
    throw std::invalid_argument("conjugate formula needs h, k > 0");
  const double q = (h - 0.5) * (h - 0.5) + k * k;
  if (q > 0.25) return std::sqrt(h * h + k * k);
  const double a = 1.0 - h;
  return k / std::sqrt(a * a + k * k);
}

double tri_ratio(const Domain& d, const Point& x, const Point& y,
                 double oracle_tol, Strategy* method_used) {
  check_pair(d, x, y);
  if (method_used) *method_used = Strategy::closed_form;
  if (x == y) return 0.0;

  if (d.get_if<HalfSpace>()) return point_pair(d, x, y);

  if (const auto* s = d.get_if<Sector>()) {
    if (s->theta <= std::numbers::pi) {
      const Vec2 a = x.planar();
      const Vec2 b = y.planar();
      return dist(a, b) / sector_heron_denominator(s->theta, a, b);
    }
    if (method_used) *method_used = Strategy::oracle;
    return s_oracle(d, x, y, oracle_tol);
  }

  if (const auto* pp = d.get_if<PuncturedPlane>()) {
    const Vec2 a = x.planar();
    const Vec2 b = y.planar();
    double denom = std::numeric_limits<double>::infinity();
    for (const Vec2& s : pp->punctures)
      denom = std::min(denom, dist(a, s) + dist(s, b));
    return dist(a, b) / denom;
  }

  if (d.get_if<UnitBall>()) {
    const auto [a, b] = ball_plane(d, x, y);
    const double na = a.norm();
    const double nb = b.norm();
    if (std::abs(cross(a, b)) <= kCollinearTol * na * nb || na == 0.0 || nb == 0.0)
      return dist(a, b) / (2.0 - (a + b).norm());
    if (std::abs(na - nb) <= kEqualNormTol) {
      // rotate the bisector of the angle at the origin onto the positive real
      // axis; the pair becomes h +- ki with h, k > 0
      Vec2 u = a / na + b / nb;
      u = u / u.norm();
      const double h = dot(a, u);
      const double k = std::abs(cross(u, a));
      return tri_ratio_conjugate(h, k);
    }
    if (method_used) *method_used = Strategy::oracle;
    return s_oracle(d, x, y, oracle_tol);
  }

  if (method_used) *method_used = Strategy::oracle;
  return s_oracle(d, x, y, oracle_tol);
}

double w_metric(const Domain& d, const Point& x, const Point& y) {
  if (!d.convex())
    throw unsupported_domain_error("w is defined on convex domains only");
  check_pair(d, x, y);
  if (x == y) return 0.0;

  if (d.get_if<HalfSpace>()) {
    // the tilde point mirrors the last coordinate; both infima coincide
    const int n = x.dim();
    double s = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      const double t = x[i] - y[i];
      s += t * t;
    }
    const double hn = x[n - 1] + y[n - 1];
    return dist(x, y) / std::sqrt(s + hn * hn);
  }

  if (d.get_if<UnitBall>()) {
    auto [a, b] = ball_plane(d, x, y);
    if (a.norm() < b.norm()) std::swap(a, b);
    const double na = a.norm();  // > 0 since a != b and |a| >= |b|
    const Vec2 tilde = a * ((2.0 - na) / na);
    return dist(a, b) / dist(b, tilde);
  }

  const TildeSet tx = d.tilde_set(x);
  const TildeSet ty = d.tilde_set(y);
  const double denom = std::min(ty.distance_from(x), tx.distance_from(y));
  return dist(x, y) / denom;
}

double low_fn(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  if (norm(x) >= 1.0 || norm(y) >= 1.0)
    throw std::invalid_argument("low is defined on the unit ball");
  if (norm(x) == 0.0 || norm(y) == 0.0)
    throw std::invalid_argument("low is undefined at the origin");
  if (x == y) return 0.0;
  const Point xs = invert_unit_sphere(x);
  const Point ys = invert_unit_sphere(y);
  return dist(x, y) / std::min(dist(x, ys), dist(xs, y));
}

double rho(const Domain& d, const Point& x, const Point& y) {
  check_pair(d, x, y);
  if (x == y) return 0.0;
  if (hyp_kind(d) == HypKind::ball)
    return 2.0 * std::asinh(ball_a(x, y));
  const double t = hyperbolic_t(d, x, y);
  // arch(1 + t), written to stay accurate near t = 0
  return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

double th_half(const Domain& d, const Point& x, const Point& y) {
  check_pair(d, x, y);
  if (x == y) return 0.0;
  if (hyp_kind(d) == HypKind::ball) {
    const double a = ball_a(x, y);
    return a / std::sqrt(1.0 + a * a);
  }
  const double t = hyperbolic_t(d, x, y);
  return std::sqrt(t / (t + 2.0));
}

double th_quarter(const Domain& d, const Point& x, const Point& y) {
  check_pair(d, x, y);
  if (x == y) return 0.0;
  if (hyp_kind(d) == HypKind::ball) {
    const double a = ball_a(x, y);
    return a / (1.0 + std::sqrt(1.0 + a * a));
  }
  const double t = hyperbolic_t(d, x, y);
  return std::sqrt(t) / (std::sqrt(t + 2.0) + std::numbers::sqrt2);
}

Point invert_in_sector(const Point& x) {
  if (x.dim() != 2) throw std::invalid_argument("sector points are 2-D");
  return Point(invert(x.planar()));
}

EvalRecord evaluate(const Domain& d, MetricId id, const Point& x, const Point& y,
                    double tol) {
  if (id.strategy == Strategy::oracle && id.kind != MetricKind::sratio)
    throw std::invalid_argument("only the s metric has an oracle evaluator");
  EvalRecord rec{d, id, x, y, 0.0, Strategy::closed_form};
  switch (id.kind) {
    case MetricKind::jstar:
      rec.value = jstar(d, x, y);
      break;
    case MetricKind::pp:
      rec.value = point_pair(d, x, y);
      break;
    case MetricKind::sratio:
      if (id.strategy == Strategy::oracle) {
        check_pair(d, x, y);
        rec.value = x == y ? 0.0 : s_oracle(d, x, y, tol);
        rec.method = Strategy::oracle;
      } else {
        rec.value = tri_ratio(d, x, y, tol, &rec.method);
      }
      return rec;
    case MetricKind::w:
      rec.value = w_metric(d, x, y);
      break;
    case MetricKind::low:
      check_pair(d, x, y);
      rec.value = low_fn(x, y);
      break;
    case MetricKind::rho:
      rec.value = rho(d, x, y);
      break;
    case MetricKind::th_half:
      rec.value = th_half(d, x, y);
      break;
    case MetricKind::th_quarter:
      rec.value = th_quarter(d, x, y);
      break;
  }
  return rec;
}

std::string metric_name(MetricKind k) {
  switch (k) {
    case MetricKind::jstar: return "jstar";
    case MetricKind::pp: return "pp";
    case MetricKind::sratio: return "s";
    case MetricKind::w: return "w";
    case MetricKind::low: return "low";
    case MetricKind::rho: return "rho";
    case MetricKind::th_half: return "th2";
    case MetricKind::th_quarter: return "th4";
  }
  return "?";
}

MetricKind parse_metric(const std::string& name) {
  if (name == "jstar") return MetricKind::jstar;
  if (name == "pp") return MetricKind::pp;
  if (name == "s") return MetricKind::sratio;
  if (name == "w") return MetricKind::w;
  if (name == "low") return MetricKind::low;
  if (name == "rho") return MetricKind::rho;
  if (name == "th2") return MetricKind::th_half;
  if (name == "th4") return MetricKind::th_quarter;
  throw std::invalid_argument("unknown metric name: " + name);
}

}  // namespace metriq
