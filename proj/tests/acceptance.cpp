// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and sample count, printing one PASS/FAIL line per criterion. The process
// exits with the number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "metriq/analysis.hpp"
#include "metriq/metrics.hpp"
#include "metriq/oracle.hpp"
#include "metriq/rng.hpp"
#include "metriq/sampling.hpp"
#include "metriq/threading.hpp"

using namespace metriq;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

const Domain kBall = Domain::unit_ball(2);
const Domain kHalf = Domain::half_space(2);
const Domain kRect = Domain::polygon({{-1, 0}, {1, 0}, {1, 1}, {-1, 1}});
const Domain kPunct = Domain::punctured_plane({{0, 0}, {1, 0}});

struct Checker {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// worst margin of min-margins over seeded pairs, parallel and deterministic
double worst_pair_margin(const Domain& d, long n, std::uint64_t seed,
                         const std::function<double(const Point&, const Point&)>& margin) {
  struct S {
    double worst = std::numeric_limits<double>::infinity();
    long index = std::numeric_limits<long>::max();
  };
  const S out = parallel_reduce(
      n, S{},
      [&](S& s, long i) {
        SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(i));
        const Point x = sample_point(d, rng);
        const Point y = sample_point(d, rng);
        if (x == y) return;
        const double m = margin(x, y);
        if (m < s.worst || (m == s.worst && i < s.index)) {
          s.worst = m;
          s.index = i;
        }
      },
      [](S& a, S&& b) {
        if (b.worst < a.worst || (b.worst == a.worst && b.index < a.index)) a = b;
      });
  return out.worst;
}

Checker criterion1() {
  Checker c;
  auto p = [](const Point& a, const Point& b) { return point_pair(kBall, a, b); };
  const double witness = triangle_ratio(p, Point(1.0 / 3, 0.0), Point(-1.0 / 3, 0.0),
                                        Point(0.0, 0.0));
  c.expect(std::abs(witness - std::sqrt(5.0) / 2.0) <= 1e-12,
           "p-ratio at (e1/3,-e1/3,0) = " + fmt(witness));

  const double quot = point_pair(kBall, Point(0.5, 0.0), Point(-0.5, 0.0)) /
                      w_metric(kBall, Point(0.5, 0.0), Point(-0.5, 0.0));
  c.expect(std::abs(quot - kSqrt2) <= 1e-12, "p/w at (1/2,-1/2) = " + fmt(quot));

  const Domain sec = Domain::sector(kPi / 2);
  auto ps = [&sec](const Point& a, const Point& b) { return point_pair(sec, a, b); };
  const Point sx(polar(1.0, kPi / 5));
  const Point sy(polar(1.0, 3 * kPi / 10));
  const double ratio =
      triangle_ratio(ps, sx, sy, Point((sx.planar() + sy.planar()) * 0.5));
  c.expect(ratio > 1.0, "sector pi/2 midpoint triple ratio = " + fmt(ratio));
  c.note("sector triple ratio " + fmt(ratio));
  return c;
}

Checker criterion2() {
  Checker c;
  const double worst = worst_pair_margin(
      kHalf, 10000, 2, [](const Point& x, const Point& y) {
        const double w = w_metric(kHalf, x, y);
        const double s = tri_ratio(kHalf, x, y);
        const double p = point_pair(kHalf, x, y);
        const double t2 = th_half(kHalf, x, y);
        return -std::max({std::abs(w - s), std::abs(s - p), std::abs(p - t2)});
      });
  c.expect(worst >= -1e-12, "max identity gap = " + fmt(-worst));

  const double worst_or = worst_pair_margin(
      kHalf, 10000, 2, [](const Point& x, const Point& y) {
        return -std::abs(s_oracle(kHalf, x, y, 1e-9) - tri_ratio(kHalf, x, y));
      });
  c.expect(worst_or >= -1e-8, "max oracle gap = " + fmt(-worst_or));
  c.note("identity gap " + fmt(-worst) + ", oracle gap " + fmt(-worst_or));
  return c;
}

Checker criterion3() {
  Checker c;
  for (double theta : {kPi / 6, kPi / 2, 2.0, kPi}) {
    const Domain sec = Domain::sector(theta);
    const double worst = worst_pair_margin(
        sec, 10000, 3, [&sec](const Point& x, const Point& y) {
          return -std::abs(s_oracle(sec, x, y, 1e-9) - w_metric(sec, x, y));
        });
    c.expect(worst >= -1e-8,
             "theta=" + fmt(theta) + " max |s-w| = " + fmt(-worst));
  }
  return c;
}

Checker criterion4() {
  Checker c;
  const double worst = worst_pair_margin(
      kBall, 100000, 4, [](const Point& x, const Point& y) {
        const double t4 = th_quarter(kBall, x, y);
        const double j = jstar(kBall, x, y);
        const double w = w_metric(kBall, x, y);
        const double s = tri_ratio(kBall, x, y, 1e-8);
        const double p = point_pair(kBall, x, y);
        const double t2 = th_half(kBall, x, y);
        return std::min({j - t4, w - j, s - w, p - s, t2 - p, 2 * t4 - t2});
      });
  c.expect(worst >= -1e-7, "worst chain margin = " + fmt(worst));
  c.note("worst margin " + fmt(worst));
  return c;
}

Checker criterion5() {
  Checker c;
  const Domain sec_narrow = Domain::sector(kPi / 2);
  const Domain sec_wide = Domain::sector(3 * kPi / 2);
  const Domain* all[] = {&kBall, &kHalf, &sec_narrow, &sec_wide, &kPunct};
  for (const Domain* d : all) {
    for (ChainId chain : {ChainId::L23a, ChainId::L23b}) {
      const SweepReport rep = inequality_sweep(*d, chain, 100000, 5, 1e-7, 1e-8);
      c.expect(rep.pass, chain_name(chain) + " margin " + fmt(rep.worst_margin));
    }
    if (d->convex()) {
      const SweepReport rep = inequality_sweep(*d, ChainId::L23c, 100000, 5, 1e-7, 1e-8);
      c.expect(rep.pass, "L23c margin " + fmt(rep.worst_margin));
    }
  }
  return c;
}

Checker criterion6() {
  Checker c;
  const ExtremumReport rep = special_case_extremum();
  const double h0 = rep.extras.at("argmax_h");
  const double branch = rep.extras.at("value_at_inv_sqrt2");
  c.expect(std::abs(h0 - 0.48236) <= 1e-4, "h0 = " + fmt(h0));
  c.expect(std::abs(rep.supremum - 1.07313) <= 1e-4, "c = " + fmt(rep.supremum));
  c.expect(std::abs(branch - 1.04201) <= 1e-4, "branch value = " + fmt(branch));
  c.note("h0 " + fmt(h0) + ", c " + fmt(rep.supremum) + ", branch " + fmt(branch));
  return c;
}

Checker criterion7() {
  Checker c;
  const ExtremumReport rep = conjecture_sw_search(100000, 0);
  c.expect(rep.supremum >= 1.0721 && rep.supremum <= 1.0742,
           "search estimate = " + fmt(rep.supremum) + " not in [1.0721, 1.0742]");
  c.expect(rep.supremum <= 1.07313 + 1e-3,
           "search estimate = " + fmt(rep.supremum) + " exceeds 1.07313 + 1e-3");

  const auto grid = figure1_grid(0.6, 200);
  double maxq = 0.0, worst_col = 0.0;
  for (const FigureCell& cell : grid) {
    if (!cell.quotient) continue;
    maxq = std::max(maxq, *cell.quotient);
    if (cell.im == 0.0) worst_col = std::max(worst_col, std::abs(*cell.quotient - 1.0));
  }
  c.expect(maxq <= 1.0732, "figure grid max = " + fmt(maxq) + " exceeds 1.0732");
  c.expect(worst_col <= 1e-6, "collinear cell deviation = " + fmt(worst_col));
  c.note("estimate " + fmt(rep.supremum) + ", grid max " + fmt(maxq) +
         ", collinear dev " + fmt(worst_col) + " (exploratory)");
  return c;
}

Checker criterion8() {
  Checker c;
  for (double theta : {kPi, 3 * kPi / 2, 7 * kPi / 4}) {
    const SweepReport rep = metric_check_sector(theta, 100000, 8);
    c.expect(rep.pass && *rep.estimate <= 1.0 + 1e-9,
             "p on sector theta=" + fmt(theta) + " max ratio " + fmt(*rep.estimate));
  }
  const SweepReport wball = metric_check(kBall, MetricKind::w, 100000, 8);
  c.expect(wball.pass && *wball.estimate <= 1.0 + 1e-9,
           "w on ball max ratio " + fmt(*wball.estimate));

  const TripleWitness rect = quasi_constant(kRect, MetricKind::w, 100000, 8);
  c.expect(rect.ratio >= 1.40, "rectangle w ratio = " + fmt(rect.ratio));

  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double k = (i + 0.5) / 100.0 / 3.0;
    worst = std::max(worst, std::abs(rect_quotient(k) - rect_quotient_closed(k)));
  }
  c.expect(worst <= 1e-10, "rect_quotient dual-route gap = " + fmt(worst));
  c.note("rectangle ratio " + fmt(rect.ratio) + ", w-on-ball max " +
         fmt(*wball.estimate));
  return c;
}

Checker criterion9() {
  Checker c;
  SplitMix64 rng = sample_stream(9, 0);
  double worst = 0.0;
  int branch_outer = 0, branch_inner = 0;
  for (int i = 0; i < 1000; ++i) {
    Point x = sample_point(kBall, rng);
    while (x.planar().y <= 0.0) x = sample_point(kBall, rng);
    const Point y(x[0], -x[1]);
    const Vec2 v = x.planar();
    if ((v.x - 0.5) * (v.x - 0.5) + v.y * v.y > 0.25)
      ++branch_outer;
    else
      ++branch_inner;
    worst = std::max(worst,
                     std::abs(tri_ratio(kBall, x, y) - s_oracle(kBall, x, y, 1e-9)));
  }
  c.expect(worst <= 1e-6, "max closed-vs-oracle gap = " + fmt(worst));
  c.expect(branch_outer > 0 && branch_inner > 0, "both branches exercised");
  c.note("gap " + fmt(worst) + ", branches " + std::to_string(branch_outer) + "/" +
         std::to_string(branch_inner));
  return c;
}

Checker criterion10() {
  Checker c;
  const double worst_lemma = worst_pair_margin(
      kBall, 10000, 10, [](const Point& x, const Point& y) {
        if (norm(x) == 0.0 || norm(y) == 0.0) return 1.0;
        return w_metric(kBall, x, y) - low_fn(x, y);
      });
  c.expect(worst_lemma > 0.0, "min (w - low) = " + fmt(worst_lemma));

  const double worst_order = worst_pair_margin(
      kBall, 100000, 10, [](const Point& xin, const Point& yin) {
        Point x = xin, y = yin;
        if (norm(y) > norm(x)) std::swap(x, y);
        if (norm(x) == 0.0 || norm(y) == 0.0) return 1.0;
        const Vec2 a = x.planar(), b = y.planar();
        const Vec2 ta = a * ((2.0 - a.norm()) / a.norm());
        const Vec2 tb = b * ((2.0 - b.norm()) / b.norm());
        return dist(a, tb) - dist(b, ta);
      });
  c.expect(worst_order >= 0.0, "min (|x-ty| - |y-tx|) = " + fmt(worst_order));
  c.note("w-low margin " + fmt(worst_lemma) + ", ordering margin " + fmt(worst_order));
  return c;
}

Checker criterion11() {
  Checker c;
  for (double theta : {kPi / 3, kPi / 2, kPi, 3 * kPi / 2}) {
    const Domain sec = Domain::sector(theta);
    const double worst = worst_pair_margin(
        sec, 10000, 11, [&sec](const Point& x, const Point& y) {
          return -std::abs(point_pair(sec, x, y) -
                           point_pair(sec, invert_in_sector(x), invert_in_sector(y)));
        });
    c.expect(worst >= -1e-12, "theta=" + fmt(theta) + " max gap = " + fmt(-worst));
  }
  return c;
}

Checker criterion12() {
  Checker c;
  for (int i = 1; i <= 100; ++i) {
    const double mu = kPi * i / 100.0;
    const auto [s, p] = complement_witness(mu);
    if (!(s < p)) {
      c.expect(false, "s >= p at mu = " + fmt(mu));
      break;
    }
  }
  const auto [s_pi, p_pi] = complement_witness(kPi);
  c.expect(std::abs(s_pi - 0.5) <= 1e-12 && std::abs(p_pi - 1.0 / kSqrt2) <= 1e-12,
           "mu=pi witness = (" + fmt(s_pi) + ", " + fmt(p_pi) + ")");
  return c;
}

Checker criterion13() {
  Checker c;
  const double near_limit = jw_limit_curve(1e-4);
  c.expect(near_limit >= kSqrt2 - 1e-3, "w/j* at k=1e-4 = " + fmt(near_limit));
  double worst = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double k = i / 101.0;
    worst = std::max(worst, std::abs(jw_limit_curve(k) - jw_limit_curve_closed(k)));
  }
  c.expect(worst <= 1e-10, "dual-route gap = " + fmt(worst));
  c.note("value at 1e-4: " + fmt(near_limit));
  return c;
}

Checker criterion14() {
  namespace fs = std::filesystem;
  Checker c;
  const fs::path dir = fs::temp_directory_path() / "metriq_acceptance";
  fs::create_directories(dir);

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto run_twice = [&](const std::string& args, const std::string& tag) {
    const fs::path a = dir / (tag + "_a");
    const fs::path b = dir / (tag + "_b");
    const std::string cli = METRIQ_CLI_PATH;
    for (const fs::path* p : {&a, &b}) {
      const std::string cmd = cli + " " + args + " --out " + p->string() +
                              " >/dev/null 2>/dev/null";
      const int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || (WEXITSTATUS(status) != 0 && WEXITSTATUS(status) != 1)) {
        c.expect(false, tag + " command failed");
        return;
      }
    }
    const std::string ca = slurp(a);
    c.expect(!ca.empty() && ca == slurp(b), tag + " outputs differ");
  };

  run_twice("verify --domain ball:n=2 --chain C48 --n 20000 --seed 7 --tol 1e-7",
            "verify");
  run_twice("search --target p-quasi --domain ball:n=2 --n 20000 --seed 3",
            "search");
  run_twice("figure --x 0.6 --resolution 48", "figure");
  run_twice("eval --domain ball:n=2 --metric pp,s,w --x 0.3,0.4 --y 0.3,-0.4",
            "eval");
  return c;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    std::function<Checker()> fn;
  };
  const std::vector<Entry> entries = {
      {1, "exact witnesses", criterion1},
      {2, "half-space identities", criterion2},
      {3, "sector identity s = w (oracle)", criterion3},
      {4, "ball chain th4 <= j* <= w <= s <= p <= th2 <= 2 th4", criterion4},
      {5, "j*/p/s comparison sweeps", criterion5},
      {6, "right-angle extremal constants", criterion6},
      {7, "s/w conjecture exploration (exploratory)", criterion7},
      {8, "metric checks and the rectangle witness", criterion8},
      {9, "conjugate-pair formula vs oracle", criterion9},
      {10, "w > low and tilde-distance ordering", criterion10},
      {11, "inversion invariance of p in sectors", criterion11},
      {12, "complement witness curve s < p", criterion12},
      {13, "w/j* limit curve", criterion13},
      {14, "byte-identical seeded reports", criterion14},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    const Checker c = e.fn();
    if (!c.ok) ++failures;
    std::printf("[%2d] %s  %s%s%s\n", e.id, c.ok ? "PASS" : "FAIL", e.name,
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    std::fflush(stdout);
  }
  if (failures)
    std::printf("%d criterion(s) failed\n", failures);
  else
    std::printf("all criteria passed\n");
  return failures;
}
