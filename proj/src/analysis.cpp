#include "metriq/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "metriq/oracle.hpp"
#include "metriq/rng.hpp"
#include "metriq/sampling.hpp"
#include "metriq/threading.hpp"

namespace metriq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kRefineSeeds = 32;
constexpr double kStep0 = 0.1;
constexpr double kStepMin = 1e-9;

// ---------------------------------------------------------------------------
// candidate tracking
// ---------------------------------------------------------------------------

struct Candidate {
  double value = -kInf;
  long index = std::numeric_limits<long>::max();
  std::vector<Point> pts;
};

// total order: higher value first, then lower sample index
bool candidate_before(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.index < b.index;
}

struct TopK {
  std::size_t cap = kRefineSeeds;
  std::vector<Candidate> items;  // kept sorted, best first

  explicit TopK(std::size_t c) : cap(c) {}

  void offer(Candidate c) {
    if (std::isnan(c.value)) return;
    if (items.size() == cap && !candidate_before(c, items.back())) return;
    auto pos = std::upper_bound(items.begin(), items.end(), c, candidate_before);
    items.insert(pos, std::move(c));
    if (items.size() > cap) items.pop_back();
  }

  void merge(TopK&& o) {
    for (auto& c : o.items) offer(std::move(c));
  }
};

// ---------------------------------------------------------------------------
// triple generation: plain uniform triples interleaved with structured probes
// (midpoint of the pair, a point slightly beyond either endpoint), which is
// where triangle-inequality violations of these metrics concentrate
// ---------------------------------------------------------------------------

Point lerp_point(const Point& a, const Point& b, double t) {
  std::vector<double> c(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    c[static_cast<std::size_t>(i)] = a[i] + t * (b[i] - a[i]);
  return Point(std::move(c));
}

bool make_triple(const Domain& d, SplitMix64& rng, int mode,
                 std::array<Point, 3>& out) {
  Point x = sample_point(d, rng);
  Point y = sample_point(d, rng);
  if (x == y) return false;
  Point z;
  switch (mode & 3) {
    case 0:
      z = sample_point(d, rng);
      break;
    case 1:
      z = lerp_point(x, y, 0.5);
      break;
    case 2: {
      const double del = std::exp(rng.uniform(std::log(1e-4), std::log(0.5)));
      z = lerp_point(y, x, -del);  // beyond y, away from x
      break;
    }
    default: {
      const double del = std::exp(rng.uniform(std::log(1e-4), std::log(0.5)));
      z = lerp_point(x, y, -del);  // beyond x, away from y
      break;
    }
  }
  if (!d.contains(z)) return false;
  out = {std::move(x), std::move(y), std::move(z)};
  return true;
}

// ---------------------------------------------------------------------------
// deterministic feature-anchored candidates
//
// Violation witnesses of these metrics sit in narrow basins around boundary
// features: points equidistant to several polygon walls, thirds of a
// puncture pair, the ball center. Uniform sampling alone cannot reach them
// (the rectangle witness basin has measure ~1e-15 in triple space), so the
// searches seed a few exact feature configurations alongside the random
// candidates; refinement does the rest. Every probe is a genuine triple of
// the domain, so estimates remain valid lower bounds.
// ---------------------------------------------------------------------------

// interior points equidistant to three polygon wall lines with the common
// distance realized as the boundary distance (medial-axis vertices)
std::vector<Vec2> polygon_tritie_anchors(const Domain& d, const ConvexPolygon& poly) {
  const std::size_t m = poly.vertices.size();
  std::vector<Vec2> normals(m);
  std::vector<double> offsets(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 a = poly.vertices[i];
    const Vec2 b = poly.vertices[(i + 1) % m];
    const Vec2 e = (b - a) / dist(a, b);
    normals[i] = {-e.y, e.x};  // inward for counterclockwise order
    offsets[i] = dot(normals[i], a);
  }
  std::vector<Vec2> anchors;
  for (std::size_t i = 0; i < m && anchors.size() < 16; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const Vec2 r1 = normals[i] - normals[j];
        const Vec2 r2 = normals[i] - normals[k];
        const double det = cross(r1, r2);
        if (std::abs(det) < 1e-12) continue;
        const double b1 = offsets[i] - offsets[j];
        const double b2 = offsets[i] - offsets[k];
        const Vec2 p{(b1 * r2.y - b2 * r1.y) / det, (r1.x * b2 - r2.x * b1) / det};
        const Point pt(p);
        if (!d.contains(pt)) continue;
        const double t = dot(normals[i], p) - offsets[i];
        if (t <= 0.0) continue;
        if (std::abs(d.boundary_distance(pt) - t) > 1e-9 * (1.0 + t)) continue;
        bool dup = false;
        for (const Vec2& q : anchors)
          if (dist(p, q) <= 1e-9 * (1.0 + p.norm())) dup = true;
        if (!dup) anchors.push_back(p);
      }
  return anchors;
}

std::vector<std::array<Point, 3>> structured_triples(const Domain& d) {
  std::vector<std::array<Point, 3>> out;
  auto push = [&](const Point& x, const Point& y, const Point& z) {
    if (out.size() >= 256) return;
    if (x == y) return;
    if (d.contains(x) && d.contains(y) && d.contains(z)) out.push_back({x, y, z});
  };

  if (const auto* b = d.get_if<UnitBall>()) {
    std::vector<double> c(static_cast<std::size_t>(b->dim), 0.0);
    c[0] = 1.0 / 3.0;
    Point x(c);
    c[0] = -1.0 / 3.0;
    Point y(c);
    c[0] = 0.0;
    push(x, y, Point(std::move(c)));
    return out;
  }
  if (const auto* pp = d.get_if<PuncturedPlane>()) {
    for (std::size_t i = 0; i < pp->punctures.size(); ++i)
      for (std::size_t j = 0; j < pp->punctures.size(); ++j) {
        if (i == j) continue;
        const Vec2 s = pp->punctures[i];
        const Vec2 t = pp->punctures[j];
        const Vec2 u = (t - s) / 3.0;
        push(Point(s + u), Point(t - u), Point((s + t) * 0.5));
      }
    return out;
  }
  if (const auto* poly = d.get_if<ConvexPolygon>()) {
    const std::vector<Vec2> anchors = polygon_tritie_anchors(d, *poly);
    for (const Vec2& a : anchors)
      for (const Vec2& b : anchors) {
        if (a == b) continue;
        const Vec2 u = (a - b) / dist(a, b);
        push(Point(a), Point(b), Point((a + b) * 0.5));
        for (double k : {1e-4, 1e-3, 1e-2})
          push(Point(a + u * k), Point(b), Point(b - u * k));
      }
    return out;
  }
  return out;  // half-space and sectors: no special features
}

// ---------------------------------------------------------------------------
// coordinate pattern search (derivative-free; the objectives are non-smooth
// at tie-switch loci, so no gradients)
// ---------------------------------------------------------------------------

struct RefineOut {
  std::vector<Point> pts;
  double value = -kInf;
  long moves = 0;
};

RefineOut pattern_search_max(
    const Domain& d, std::vector<Point> pts, double value,
    const std::function<double(const std::vector<Point>&)>& objective) {
  const Point ref = d.reference_point();
  const int dim = d.dim();
  long moves = 0;
  int passes = 0;

  // shrink toward the reference point until back inside; empty on failure
  auto project_in = [&](std::vector<double> coords) -> std::vector<double> {
    Point moved(coords);
    for (int j = 0; j < 200; ++j) {
      if (d.contains(moved)) return moved.coords();
      for (int i = 0; i < dim; ++i)
        coords[static_cast<std::size_t>(i)] =
            ref[i] + 0.9 * (coords[static_cast<std::size_t>(i)] - ref[i]);
      moved = Point(coords);
    }
    return {};
  };
  auto try_accept = [&](std::vector<Point> cand) {
    const double v = objective(cand);
    if (v > value) {
      value = v;
      pts = std::move(cand);
      ++moves;
      return true;
    }
    return false;
  };

  for (double step = kStep0; step >= kStepMin && passes < 5000;) {
    bool improved = false;
    for (std::size_t p = 0; p < pts.size(); ++p) {
      for (int c = 0; c < dim; ++c) {
        for (double sgn : {1.0, -1.0}) {
          std::vector<double> coords = pts[p].coords();
          coords[static_cast<std::size_t>(c)] += sgn * step;
          coords = project_in(std::move(coords));
          if (coords.empty()) continue;
          std::vector<Point> cand = pts;
          cand[p] = Point(std::move(coords));
          improved |= try_accept(std::move(cand));
        }
      }
    }
    // group moves: scale the whole configuration about the reference point.
    // Coordinate moves alone zigzag and stall on diagonal ridges (objectives
    // of equal-radius pairs have one); a common-scale probe walks them.
    for (double factor : {1.0 + step, 1.0 - step}) {
      std::vector<Point> cand;
      bool ok = true;
      for (const Point& q : pts) {
        std::vector<double> coords = q.coords();
        for (int i = 0; i < dim; ++i)
          coords[static_cast<std::size_t>(i)] =
              ref[i] + factor * (coords[static_cast<std::size_t>(i)] - ref[i]);
        coords = project_in(std::move(coords));
        if (coords.empty()) {
          ok = false;
          break;
        }
        cand.push_back(Point(std::move(coords)));
      }
      if (ok) improved |= try_accept(std::move(cand));
    }
    ++passes;
    if (!improved) step *= 0.5;
  }
  return {std::move(pts), value, moves};
}

// refine every collected candidate, return the best (candidate order breaks
// ties, so the result does not depend on the worker count)
std::pair<RefineOut, long> refine_candidates(
    const Domain& d, const TopK& top,
    const std::function<double(const std::vector<Point>&)>& objective) {
  struct Best {
    RefineOut out;
    int rank = std::numeric_limits<int>::max();
    long total_moves = 0;
  };
  const long n = static_cast<long>(top.items.size());
  Best best = parallel_reduce(
      n, Best{},
      [&](Best& b, long i) {
        const Candidate& c = top.items[static_cast<std::size_t>(i)];
        RefineOut r = pattern_search_max(d, c.pts, c.value, objective);
        b.total_moves += r.moves;
        if (r.value > b.out.value ||
            (r.value == b.out.value && static_cast<int>(i) < b.rank)) {
          b.out = std::move(r);
          b.rank = static_cast<int>(i);
        }
      },
      [](Best& a, Best&& o) {
        a.total_moves += o.total_moves;
        if (o.out.value > a.out.value ||
            (o.out.value == a.out.value && o.rank < a.rank)) {
          a.out = std::move(o.out);
          a.rank = o.rank;
        }
      });
  return {std::move(best.out), best.total_moves};
}

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double target_width, long* iterations) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > target_width) {
    if (iterations) ++*iterations;
    if (fc >= fd) {
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
  }
  return 0.5 * (a + b);
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

std::function<double(const Point&, const Point&)> metric_fn(const Domain& d,
                                                            MetricKind kind,
                                                            double s_tol) {
  switch (kind) {
    case MetricKind::jstar:
      return [d](const Point& x, const Point& y) { return jstar(d, x, y); };
    case MetricKind::pp:
      return [d](const Point& x, const Point& y) { return point_pair(d, x, y); };
    case MetricKind::sratio:
      return [d, s_tol](const Point& x, const Point& y) {
        return tri_ratio(d, x, y, s_tol);
      };
    case MetricKind::w:
      if (!d.convex())
        throw unsupported_domain_error("w is defined on convex domains only");
      return [d](const Point& x, const Point& y) { return w_metric(d, x, y); };
    case MetricKind::low:
      require(d.get_if<UnitBall>() != nullptr, "low is defined on the unit ball");
      return [](const Point& x, const Point& y) { return low_fn(x, y); };
    case MetricKind::rho:
      return [d](const Point& x, const Point& y) { return rho(d, x, y); };
    case MetricKind::th_half:
      return [d](const Point& x, const Point& y) { return th_half(d, x, y); };
    case MetricKind::th_quarter:
      return [d](const Point& x, const Point& y) { return th_quarter(d, x, y); };
  }
  throw std::invalid_argument("unknown metric kind");
}

std::string chain_name(ChainId id) {
  switch (id) {
    case ChainId::L23a: return "L23a";
    case ChainId::L23b: return "L23b";
    case ChainId::L23c: return "L23c";
    case ChainId::L24: return "L24";
    case ChainId::C48: return "C48";
    case ChainId::T46: return "T46";
    case ChainId::T510: return "T510";
    case ChainId::T511: return "T511";
    case ChainId::T57: return "T57";
  }
  return "?";
}

ChainId parse_chain(const std::string& name) {
  if (name == "L23a") return ChainId::L23a;
  if (name == "L23b") return ChainId::L23b;
  if (name == "L23c") return ChainId::L23c;
  if (name == "L24") return ChainId::L24;
  if (name == "C48") return ChainId::C48;
  if (name == "T46") return ChainId::T46;
  if (name == "T510") return ChainId::T510;
  if (name == "T511") return ChainId::T511;
  if (name == "T57") return ChainId::T57;
  throw std::invalid_argument("unknown chain selector: " + name);
}

TripleWitness quasi_constant(const Domain& d, MetricKind metric, long n_samples,
                             std::uint64_t seed, double s_tol) {
  require(n_samples >= 1, "need at least one sample");
  const auto fn = metric_fn(d, metric, s_tol);
  const std::vector<std::array<Point, 3>> anchors = structured_triples(d);

  TopK top = parallel_reduce(
      n_samples, TopK(kRefineSeeds),
      [&](TopK& t, long i) {
        std::array<Point, 3> tri;
        if (i < static_cast<long>(anchors.size())) {
          tri = anchors[static_cast<std::size_t>(i)];
        } else {
          SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(i));
          if (!make_triple(d, rng, static_cast<int>(i & 3), tri)) return;
        }
        const double r = triangle_ratio(fn, tri[0], tri[1], tri[2]);
        t.offer(Candidate{r, i, {tri[0], tri[1], tri[2]}});
      },
      [](TopK& a, TopK&& b) { a.merge(std::move(b)); });

  TripleWitness out;
  out.domain = d;
  out.metric = metric;
  out.n_samples = n_samples;
  out.seed = seed;
  if (top.items.empty()) return out;

  auto objective = [&](const std::vector<Point>& pts) {
    if (pts[0] == pts[1]) return -kInf;
    return triangle_ratio(fn, pts[0], pts[1], pts[2]);
  };
  const auto [best, moves] = refine_candidates(d, top, objective);
  (void)moves;
  out.x = best.pts[0];
  out.y = best.pts[1];
  out.z = best.pts[2];
  out.ratio = best.value;
  return out;
}

SweepReport metric_check(const Domain& d, MetricKind metric, long n_samples,
                         std::uint64_t seed, double s_tol, double tol) {
  require(n_samples >= 1, "need at least one sample");
  const auto fn = metric_fn(d, metric, s_tol);

  struct Worst {
    double ratio = -kInf;
    long index = std::numeric_limits<long>::max();
    std::vector<Point> pts;
  };
  Worst w = parallel_reduce(
      n_samples, Worst{},
      [&](Worst& ww, long i) {
        SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(i));
        std::array<Point, 3> tri;
        if (!make_triple(d, rng, static_cast<int>(i & 3), tri)) return;
        const double r = triangle_ratio(fn, tri[0], tri[1], tri[2]);
        if (std::isnan(r)) return;
        if (r > ww.ratio || (r == ww.ratio && i < ww.index)) {
          ww.ratio = r;
          ww.index = i;
          ww.pts = {tri[0], tri[1], tri[2]};
        }
      },
      [](Worst& a, Worst&& b) {
        if (b.ratio > a.ratio || (b.ratio == a.ratio && b.index < a.index)) a = std::move(b);
      });

  SweepReport rep;
  rep.inequality = "metric:" + metric_name(metric);
  rep.n_samples = n_samples;
  rep.seed = seed;
  rep.tol = tol;
  rep.worst_margin = 1.0 - w.ratio;
  rep.witness = std::move(w.pts);
  rep.estimate = w.ratio;
  rep.pass = rep.worst_margin >= -tol;
  return rep;
}

SweepReport metric_check_sector(double theta, long n_samples, std::uint64_t seed) {
  return metric_check(Domain::sector(theta), MetricKind::pp, n_samples, seed);
}

SweepReport inequality_sweep(const Domain& d, ChainId chain, long n_samples,
                             std::uint64_t seed, double tol, double s_tol) {
  require(n_samples >= 1, "need at least one sample");
  const bool is_ball = d.get_if<UnitBall>() != nullptr;
  const bool is_half = d.get_if<HalfSpace>() != nullptr;
  switch (chain) {
    case ChainId::L23a:
    case ChainId::L23b:
      break;
    case ChainId::L23c:
    case ChainId::C48:
    case ChainId::T46:
      require(d.convex(), "chain requires a convex domain");
      break;
    case ChainId::L24:
      require(is_ball || is_half, "chain requires the half-space or the ball");
      break;
    case ChainId::T510:
    case ChainId::T511:
    case ChainId::T57:
      require(is_ball, "chain requires the unit ball");
      break;
  }

  const double sqrt2 = std::numbers::sqrt2;
  auto margin_of = [&](const Point& x, const Point& y, bool collinear) {
    switch (chain) {
      case ChainId::L23a: {
        const double j = jstar(d, x, y), p = point_pair(d, x, y);
        return std::min(p - j, sqrt2 * j - p);
      }
      case ChainId::L23b: {
        const double j = jstar(d, x, y), s = tri_ratio(d, x, y, s_tol);
        return std::min(s - j, 2.0 * j - s);
      }
      case ChainId::L23c: {
        const double j = jstar(d, x, y), s = tri_ratio(d, x, y, s_tol);
        return sqrt2 * j - s;
      }
      case ChainId::L24: {
        const double j = jstar(d, x, y), s = tri_ratio(d, x, y, s_tol);
        const double p = point_pair(d, x, y);
        const double t2 = th_half(d, x, y), t4 = th_quarter(d, x, y);
        return std::min({j - t4, s - j, p - s, t2 - p, 2.0 * t4 - t2});
      }
      case ChainId::C48: {
        const double j = jstar(d, x, y), w = w_metric(d, x, y);
        const double s = tri_ratio(d, x, y, s_tol), p = point_pair(d, x, y);
        return std::min({w - j, s - w, p - s});
      }
      case ChainId::T46: {
        const double w = w_metric(d, x, y), s = tri_ratio(d, x, y, s_tol);
        return std::min(s - w, sqrt2 * w - s);
      }
      case ChainId::T510: {
        const double w = w_metric(d, x, y), p = point_pair(d, x, y);
        return std::min(p - w, sqrt2 * w - p);
      }
      case ChainId::T511: {
        const double j = jstar(d, x, y), w = w_metric(d, x, y);
        return std::min(w - j, sqrt2 * j - w);
      }
      case ChainId::T57: {
        const double w = w_metric(d, x, y), s = tri_ratio(d, x, y, s_tol);
        return collinear ? -std::abs(s - w) : s - w;
      }
    }
    return kInf;
  };

  struct Worst {
    double margin = kInf;
    long index = std::numeric_limits<long>::max();
    std::vector<Point> pts;
  };
  Worst w = parallel_reduce(
      n_samples, Worst{},
      [&](Worst& ww, long i) {
        SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(i));
        Point x = sample_point(d, rng);
        Point y;
        bool collinear = false;
        if (chain == ChainId::T57 && (i & 7) == 7) {
          // collinear-with-the-origin subcase of the equality statement
          const double nx = norm(x);
          const double t = rng.uniform(-0.999, 0.999);
          std::vector<double> c(x.coords());
          for (double& v : c) v *= t / nx;
          y = Point(std::move(c));
          collinear = true;
        } else {
          y = sample_point(d, rng);
        }
        if (x == y) return;
        const double m = margin_of(x, y, collinear);
        if (std::isnan(m)) return;
        if (m < ww.margin || (m == ww.margin && i < ww.index)) {
          ww.margin = m;
          ww.index = i;
          ww.pts = {x, y};
        }
      },
      [](Worst& a, Worst&& b) {
        if (b.margin < a.margin || (b.margin == a.margin && b.index < a.index))
          a = std::move(b);
      });

  SweepReport rep;
  rep.inequality = chain_name(chain);
  rep.n_samples = n_samples;
  rep.seed = seed;
  rep.tol = tol;
  rep.worst_margin = w.margin;
  rep.witness = std::move(w.pts);
  rep.pass = w.margin >= -tol;
  return rep;
}

ExtremumReport special_case_extremum() {
  const Domain ball = Domain::unit_ball(2);
  auto quotient = [&](double h) {
    const Point x(h, 0.0);
    const Point y(0.0, h);
    return tri_ratio(ball, x, y) / w_metric(ball, x, y);
  };

  constexpr int n = 4096;
  std::array<double, n> vals{};
  for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = quotient((i + 0.5) / n);

  long trace = 0;
  double best_h = 0.5, best_v = -kInf;
  for (int i = 0; i < n; ++i) {
    const double v = vals[static_cast<std::size_t>(i)];
    const bool local_max = (i == 0 || v >= vals[static_cast<std::size_t>(i - 1)]) &&
                           (i == n - 1 || v >= vals[static_cast<std::size_t>(i + 1)]);
    if (!local_max) continue;
    const double lo = std::max(0.5 / n, (i - 0.5) / n);
    const double hi = std::min(1.0 - 0.5 / n, (i + 1.5) / n);
    const double h = golden_max(quotient, lo, hi, 1e-12, &trace);
    const double val = quotient(h);
    if (val > best_v) {
      best_v = val;
      best_h = h;
    }
  }

  ExtremumReport rep;
  rep.quotient = "s/w";
  rep.domain = ball;
  rep.supremum = best_v;
  rep.witness = {Point(best_h, 0.0), Point(0.0, best_h)};
  rep.trace_length = trace;
  rep.extras["argmax_h"] = best_h;
  rep.extras["value_at_inv_sqrt2"] = quotient(1.0 / std::numbers::sqrt2);
  return rep;
}

ExtremumReport conjecture_sw_search(long n_samples, std::uint64_t seed) {
  require(n_samples >= 1, "need at least one sample");
  const Domain ball = Domain::unit_ball(2);
  auto objective = [&](const std::vector<Point>& pts) {
    if (pts[0] == pts[1]) return -kInf;
    return s_oracle(ball, pts[0], pts[1], 1e-8) / w_metric(ball, pts[0], pts[1]);
  };

  // equal-radius right-angle maximizer of the one-parameter special case;
  // always included so the search starts from the best known configuration
  const double h0 =
      (1.0 - std::sqrt(9.0 - 6.0 * std::numbers::sqrt2)) / (2.0 - std::numbers::sqrt2);

  TopK top = parallel_reduce(
      n_samples, TopK(kRefineSeeds),
      [&](TopK& t, long i) {
        std::vector<Point> pts;
        if (i == 0) {
          pts = {Point(h0, 0.0), Point(0.0, h0)};
        } else {
          SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(i));
          pts = {sample_point(ball, rng), sample_point(ball, rng)};
          if (pts[0] == pts[1]) return;
        }
        t.offer(Candidate{objective(pts), i, std::move(pts)});
      },
      [](TopK& a, TopK&& b) { a.merge(std::move(b)); });

  const auto [best, moves] = refine_candidates(ball, top, objective);

  ExtremumReport rep;
  rep.quotient = "s/w";
  rep.domain = ball;
  rep.supremum = best.value;
  rep.witness = best.pts;
  rep.trace_length = moves;
  return rep;
}

std::vector<FigureCell> figure1_grid(double x_fixed, int resolution) {
  require(x_fixed > 0.0 && x_fixed < 1.0, "x must lie in (0, 1)");
  require(resolution >= 16, "resolution must be at least 16");
  const Domain ball = Domain::unit_ball(2);
  const Point x(x_fixed, 0.0);

  const long total = static_cast<long>(resolution) * resolution;
  std::vector<FigureCell> cells(static_cast<std::size_t>(total));
  auto coord = [resolution](int k) { return -1.0 + 2.0 * k / resolution; };

  FigureCell* data = cells.data();
  parallel_reduce(
      total, 0,
      [&, data](int&, long idx) {
        const int iy = static_cast<int>(idx) / resolution;
        const int ix = static_cast<int>(idx) % resolution;
        FigureCell& cell = data[idx];
        cell.re = coord(ix);
        cell.im = coord(iy);
        const Point y(cell.re, cell.im);
        if (norm(y) >= 1.0 || y == x) return;  // empty cell
        cell.quotient = s_oracle(ball, x, y, 1e-8) / w_metric(ball, x, y);
      },
      [](int&, int&&) {});
  return cells;
}

double jw_limit_curve(double k) {
  require(k > 0.0 && k < 1.0, "k must lie in (0, 1)");
  const Domain ball = Domain::unit_ball(2);
  const Point x(1.0 - k, 0.0);
  const Point y(polar(1.0 - k, 2.0 * k));
  return w_metric(ball, x, y) / jstar(ball, x, y);
}

double jw_limit_curve_closed(double k) {
  require(k > 0.0 && k < 1.0, "k must lie in (0, 1)");
  const double s = std::sin(k);
  return ((1.0 - k) * s + k) / std::sqrt(k * k + (1.0 - k * k) * s * s);
}

}  // namespace metriq
