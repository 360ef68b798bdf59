#include "metriq/sampling.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace metriq {

namespace {

constexpr int kMaxRejections = 1000000;
constexpr double kRadius = 8.0;

}  // namespace

Point sample_point(const Domain& d, SplitMix64& rng) {
  const int n = d.dim();

  if (d.get_if<UnitBall>()) {
    for (int it = 0; it < kMaxRejections; ++it) {
      std::vector<double> c(static_cast<std::size_t>(n));
      double s = 0.0;
      for (double& v : c) {
        v = rng.uniform(-1.0, 1.0);
        s += v * v;
      }
      if (s < 1.0) return Point(std::move(c));
    }
    throw std::logic_error("ball sampling failed to converge");
  }

  if (const auto* poly = d.get_if<ConvexPolygon>()) {
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    for (const Vec2& v : poly->vertices) {
      xlo = std::min(xlo, v.x);
      xhi = std::max(xhi, v.x);
      ylo = std::min(ylo, v.y);
      yhi = std::max(yhi, v.y);
    }
    for (int it = 0; it < kMaxRejections; ++it) {
      const Point p(rng.uniform(xlo, xhi), rng.uniform(ylo, yhi));
      if (d.contains(p)) return p;
    }
    throw std::logic_error("polygon sampling failed to converge");
  }

  // unbounded variants: uniform in the radius-8 ball around the reference point
  const Point ref = d.reference_point();
  for (int it = 0; it < kMaxRejections; ++it) {
    std::vector<double> c(static_cast<std::size_t>(n));
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      const double o = rng.uniform(-kRadius, kRadius);
      s += o * o;
      c[static_cast<std::size_t>(i)] = ref[i] + o;
    }
    if (s >= kRadius * kRadius) continue;
    Point p(std::move(c));
    if (d.contains(p)) return p;
  }
  throw std::logic_error("domain sampling failed to converge");
}

}  // namespace metriq
