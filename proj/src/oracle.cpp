#include "metriq/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "metriq/metrics.hpp"

namespace metriq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kDefaultGrid = 4096;

// grid of unit-circle points shared by every ball query
const std::vector<Vec2>& unit_circle_grid(int n) {
  static const std::vector<Vec2> table = [] {
    std::vector<Vec2> t(static_cast<std::size_t>(kDefaultGrid) + 1);
    for (int i = 0; i <= kDefaultGrid; ++i)
      t[static_cast<std::size_t>(i)] = polar(1.0, kTwoPi * i / kDefaultGrid);
    return t;
  }();
  static const std::vector<Vec2> empty;
  return n == kDefaultGrid ? table : empty;
}

struct PieceScan {
  double best = std::numeric_limits<double>::infinity();
  double end_lo = 0.0;  // grid value at t = 0
  double end_hi = 0.0;  // grid value at t = length
};

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double target_width, double seed_value) {
  constexpr double invphi = 0.6180339887498949;
  double best = seed_value;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  best = std::min({best, fc, fd});
  for (int it = 0; it < 300 && b - a > target_width; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
    best = std::min({best, fc, fd});
  }
  return best;
}

// scan one piece: uniform grid, then golden-section polish around every
// grid-local minimum (the Heron objective on a circle can have two basins)
PieceScan scan_piece(const BoundaryPiece& piece, Vec2 x, Vec2 y, double tol,
                     int grid_n) {
  PieceScan out;
  if (piece.kind == BoundaryPiece::Kind::isolated_point) {
    out.best = dist(x, piece.a) + dist(piece.a, y);
    out.end_lo = out.end_hi = out.best;
    return out;
  }

  const double len = piece.length();
  auto f = [&](double t) {
    const Vec2 z = piece.at(t);
    return dist(x, z) + dist(z, y);
  };

  std::vector<double> vals(static_cast<std::size_t>(grid_n) + 1);
  const auto& table = unit_circle_grid(grid_n);
  if (piece.unit_circle && !table.empty()) {
    for (int i = 0; i <= grid_n; ++i) {
      const Vec2 z = table[static_cast<std::size_t>(i)];
      vals[static_cast<std::size_t>(i)] = dist(x, z) + dist(z, y);
    }
  } else {
    for (int i = 0; i <= grid_n; ++i)
      vals[static_cast<std::size_t>(i)] = f(len * i / grid_n);
  }
  out.end_lo = vals.front();
  out.end_hi = vals.back();

  const double h = len / grid_n;
  const double target = std::max(tol * 1e-3, 1e-15 * len);
  auto value = [&](int i) {
    if (piece.closed) {
      int m = i % grid_n;
      if (m < 0) m += grid_n;
      return vals[static_cast<std::size_t>(m)];
    }
    return vals[static_cast<std::size_t>(std::clamp(i, 0, grid_n))];
  };

  const int lo_i = piece.closed ? 0 : -1;  // open pieces treat t=0 as a candidate
  for (int i = std::max(lo_i, 0); i <= (piece.closed ? grid_n - 1 : grid_n); ++i) {
    const double v = vals[static_cast<std::size_t>(i)];
    out.best = std::min(out.best, v);
    const bool local_min =
        piece.closed
            ? (v <= value(i - 1) && v <= value(i + 1))
            : ((i == 0 || v <= vals[static_cast<std::size_t>(i - 1)]) &&
               (i == grid_n || v <= vals[static_cast<std::size_t>(i + 1)]));
    if (!local_min) continue;
    double blo = (i - 1) * h;
    double bhi = (i + 1) * h;
    if (!piece.closed) {
      blo = std::max(blo, 0.0);
      bhi = std::min(bhi, len);
    }
    out.best = std::min(out.best, golden_min(f, blo, bhi, target, v));
  }
  return out;
}

// reduce a query on B^n / H^n with n > 2 to the plane through the points
std::pair<Domain, std::pair<Vec2, Vec2>> reduce_query(const Domain& d,
                                                      const Point& x,
                                                      const Point& y) {
  if (d.dim() == 2) return {d, {x.planar(), y.planar()}};
  if (d.get_if<UnitBall>()) return {Domain::unit_ball(2), plane_reduce(x, y)};
  if (d.get_if<HalfSpace>()) return {Domain::half_space(2), halfspace_reduce(x, y)};
  throw unsupported_domain_error("oracle supports planar domains and B^n / H^n");
}

}  // namespace

double BoundaryPiece::length() const {
  switch (kind) {
    case Kind::segment:
      return dist(a, b);
    case Kind::arc:
      return radius * (ang1 - ang0);
    case Kind::isolated_point:
      return 0.0;
  }
  return 0.0;
}

Vec2 BoundaryPiece::at(double t) const {
  switch (kind) {
    case Kind::segment: {
      const double len = dist(a, b);
      return a + (b - a) * (t / len);
    }
    case Kind::arc:
      return center + polar(radius, ang0 + t / radius);
    case Kind::isolated_point:
      return a;
  }
  return a;
}

std::vector<BoundaryPiece> boundary_pieces(const Domain& d, double r_cut) {
  std::vector<BoundaryPiece> out;
  if (const auto* h = d.get_if<HalfSpace>()) {
    if (h->dim != 2)
      throw unsupported_domain_error("boundary pieces are planar");
    BoundaryPiece p;
    p.kind = BoundaryPiece::Kind::segment;
    p.a = {-r_cut, 0.0};
    p.b = {r_cut, 0.0};
    p.truncated = true;  // both ends
    out.push_back(p);
    return out;
  }
  if (const auto* b = d.get_if<UnitBall>()) {
    if (b->dim != 2)
      throw unsupported_domain_error("boundary pieces are planar");
    BoundaryPiece p;
    p.kind = BoundaryPiece::Kind::arc;
    p.center = {0.0, 0.0};
    p.radius = 1.0;
    p.ang0 = 0.0;
    p.ang1 = kTwoPi;
    p.closed = true;
    p.unit_circle = true;
    out.push_back(p);
    return out;
  }
  if (const auto* s = d.get_if<Sector>()) {
    for (double ang : {0.0, s->theta}) {
      BoundaryPiece p;
      p.kind = BoundaryPiece::Kind::segment;
      p.a = {0.0, 0.0};
      p.b = polar(r_cut, ang);
      p.truncated = true;
      out.push_back(p);
    }
    return out;
  }
  if (const auto* poly = d.get_if<ConvexPolygon>()) {
    const std::size_t n = poly->vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      BoundaryPiece p;
      p.kind = BoundaryPiece::Kind::segment;
      p.a = poly->vertices[i];
      p.b = poly->vertices[(i + 1) % n];
      out.push_back(p);
    }
    return out;
  }
  const auto* pp = d.get_if<PuncturedPlane>();
  for (const Vec2& s : pp->punctures) {
    BoundaryPiece p;
    p.kind = BoundaryPiece::Kind::isolated_point;
    p.a = s;
    out.push_back(p);
  }
  return out;
}

double heron_denominator_oracle(const Domain& d, const Point& px, const Point& py,
                                double tol, int grid_n) {
  if (!(tol > 0.0)) throw std::invalid_argument("oracle tolerance must be positive");
  if (!d.contains(px) || !d.contains(py))
    throw std::invalid_argument("points must lie in the open domain");

  const auto [dom, pts] = reduce_query(d, px, py);
  const Vec2 x = pts.first;
  const Vec2 y = pts.second;
  const double r_cut = 16.0 * (x.norm() + y.norm() + 1.0);

  double best = std::numeric_limits<double>::infinity();
  bool truncated_any = false;
  double truncated_end = std::numeric_limits<double>::infinity();
  for (const BoundaryPiece& piece : boundary_pieces(dom, r_cut)) {
    const PieceScan scan = scan_piece(piece, x, y, tol, grid_n);
    best = std::min(best, scan.best);
    if (piece.truncated) {
      truncated_any = true;
      truncated_end = std::min(truncated_end, scan.end_hi);
    }
  }
  // beyond the cut radius the objective exceeds every interior candidate
  if (truncated_any && !(truncated_end > best))
    throw std::logic_error("boundary truncation radius too small");
  return best;
}

double s_oracle(const Domain& d, const Point& x, const Point& y, double tol,
                int grid_n) {
  if (!(tol > 0.0)) throw std::invalid_argument("oracle tolerance must be positive");
  if (!d.contains(x) || !d.contains(y))
    throw std::invalid_argument("points must lie in the open domain");
  if (x == y) return 0.0;
  return dist(x, y) / heron_denominator_oracle(d, x, y, tol, grid_n);
}

double triangle_ratio(const std::function<double(const Point&, const Point&)>& d,
                      const Point& x, const Point& y, const Point& z) {
  const double num = d(x, y);
  const double den = d(x, z) + d(z, y);
  if (den == 0.0)
    return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return num / den;
}

double rect_quotient(double k) {
  if (!(k > 0.0) || !(k < 1.0 / 3.0))
    throw std::invalid_argument("k must lie in (0, 1/3)");
  static const Domain rect =
      Domain::polygon({{-1.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {-1.0, 1.0}});
  const Point x(0.5 + k, 0.5);
  const Point y(-0.5, 0.5);
  const Point z(-0.5 - k, 0.5);
  auto w = [](const Point& a, const Point& b) { return w_metric(rect, a, b); };
  return triangle_ratio(w, x, y, z);
}

double rect_quotient_closed(double k) {
  if (!(k > 0.0) || !(k < 1.0 / 3.0))
    throw std::invalid_argument("k must lie in (0, 1/3)");
  const double opk = 1.0 + k;
  return 2.0 * (1.0 - k * k) /
         (std::sqrt(1.0 + opk * opk) * (1.0 + 3.0 * k - 2.0 * k * k));
}

std::pair<double, double> complement_witness(double mu) {
  if (!(mu > 0.0) || !(mu <= std::numbers::pi))
    throw std::invalid_argument("mu must lie in (0, pi]");
  static const Domain ball = Domain::unit_ball(2);
  const double c = mu == std::numbers::pi ? 0.5 : std::cos(mu / 2.0);
  const Vec2 u = polar(c, mu / 2.0);
  const Point x(u);
  const Point y(conj(u));
  return {tri_ratio(ball, x, y), point_pair(ball, x, y)};
}

}  // namespace metriq
