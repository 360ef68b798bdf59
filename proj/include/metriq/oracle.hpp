#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "metriq/geometry.hpp"

namespace metriq {

// One smooth piece of a boundary parameterization: a segment, a circular arc
// (parameterized by arc length) or an isolated point. Unbounded boundary rays
// appear as segments truncated at the cut radius.
struct BoundaryPiece {
  enum class Kind { segment, arc, isolated_point };

  Kind kind = Kind::segment;
  Vec2 a;                    // segment start / isolated point
  Vec2 b;                    // segment end
  Vec2 center;               // arc data
  double radius = 1.0;
  double ang0 = 0.0;
  double ang1 = 0.0;
  bool closed = false;       // arc covering the full circle
  bool truncated = false;    // segment end b sits at the cut radius
  bool unit_circle = false;  // full unit circle about the origin

  double length() const;
  Vec2 at(double t) const;  // t in [0, length]; arcs accept any t (periodic)
};

// Covers the boundary of the domain, truncating unbounded pieces at r_cut.
std::vector<BoundaryPiece> boundary_pieces(const Domain& d, double r_cut);

// inf over the boundary of |x-z| + |z-y|, by a 4096-point grid per piece
// followed by golden-section refinement around every grid-local minimum until
// the parameter bracket is below tol * 1e-3. grid_n exists so tests can check
// stability under grid refinement.
double heron_denominator_oracle(const Domain& d, const Point& x, const Point& y,
                                double tol, int grid_n = 4096);

// Brute-force triangular ratio metric |x-y| / heron_denominator_oracle(...).
// Independent of the closed forms in metrics.hpp; used as fallback strategy
// and as ground truth in tests.
double s_oracle(const Domain& d, const Point& x, const Point& y, double tol,
                int grid_n = 4096);

// d(x,y) / (d(x,z) + d(z,y)); values above 1 witness a triangle-inequality
// failure and values above c witness a quasi-metric constant above c. A zero
// denominator with x != y reports +infinity.
double triangle_ratio(const std::function<double(const Point&, const Point&)>& d,
                      const Point& x, const Point& y, const Point& z);

// Triangle ratio of w on the rectangle (-1,1)x(0,1) at the witness family
// x = 1/2 + k + i/2, y = -1/2 + i/2, z = -1/2 - k + i/2, for 0 < k < 1/3.
double rect_quotient(double k);
// The same quantity as one closed expression; an independent second route.
double rect_quotient_closed(double k);

// (s, p) at the witness pair used to detect a non-convex complement: for
// mu = pi the pair is u'/2, v'/2 with u' = e^{i mu/2}, v' = e^{-i mu/2};
// for mu < pi it is cos(mu/2) u', cos(mu/2) v'. Satisfies s < p on (0, pi].
std::pair<double, double> complement_witness(double mu);

}  // namespace metriq
