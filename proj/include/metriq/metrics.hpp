#pragma once

#include <string>

#include "metriq/geometry.hpp"

namespace metriq {

enum class MetricKind { jstar, pp, sratio, w, low, rho, th_half, th_quarter };
enum class Strategy { closed_form, oracle };

struct MetricId {
  MetricKind kind = MetricKind::jstar;
  Strategy strategy = Strategy::closed_form;
};

struct EvalRecord {
  Domain domain;
  MetricId metric;
  Point x;
  Point y;
  double value = 0.0;
  Strategy method = Strategy::closed_form;  // strategy actually used
};

// j*_G(x,y) = |x-y| / (|x-y| + 2 min(d_G(x), d_G(y)))
double jstar(const Domain& d, const Point& x, const Point& y);

// p_G(x,y) = |x-y| / sqrt(|x-y|^2 + 4 d_G(x) d_G(y))
double point_pair(const Domain& d, const Point& x, const Point& y);

// Triangular ratio metric s_G(x,y) = |x-y| / inf_{z in bd G} (|x-z| + |z-y|).
// Closed forms: half-space (= p), sectors with theta <= pi (Heron reflection),
// punctured plane, and the collinear / equal-radius configurations in the
// ball. Everything else falls back to the boundary oracle at `oracle_tol`;
// `method_used` reports which route was taken.
double tri_ratio(const Domain& d, const Point& x, const Point& y,
                 double oracle_tol = 1e-9, Strategy* method_used = nullptr);

// s_{B^2} for a pair symmetric about the real axis, x = h + ki and its
// conjugate, with h, k > 0.
double tri_ratio_conjugate(double h, double k);

// w_G(x,y) = |x-y| / min(inf_{ty} |x - ty|, inf_{tx} |y - tx|) over the tilde
// sets of x and y; defined on convex domains.
double w_metric(const Domain& d, const Point& x, const Point& y);

// low(x,y) = |x-y| / min(|x-y*|, |x*-y|) with x* = x/|x|^2, for points of the
// punctured unit ball.
double low_fn(const Point& x, const Point& y);

// Hyperbolic distance on the half-space, ball, or sector.
double rho(const Domain& d, const Point& x, const Point& y);
double th_half(const Domain& d, const Point& x, const Point& y);    // tanh(rho/2)
double th_quarter(const Domain& d, const Point& x, const Point& y); // tanh(rho/4)

// x -> x/|x|^2; preserves the argument and hence sector membership
Point invert_in_sector(const Point& x);

EvalRecord evaluate(const Domain& d, MetricId id, const Point& x, const Point& y,
                    double tol = 1e-9);

std::string metric_name(MetricKind k);
MetricKind parse_metric(const std::string& name);

}  // namespace metriq
