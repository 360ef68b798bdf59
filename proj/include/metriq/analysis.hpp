#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "metriq/geometry.hpp"
#include "metriq/metrics.hpp"

namespace metriq {

// Best triple found by a quasi-metric constant search; the achieved ratio is
// a lower bound on the true constant.
struct TripleWitness {
  Domain domain;
  MetricKind metric = MetricKind::pp;
  Point x;
  Point y;
  Point z;
  double ratio = 0.0;
  long n_samples = 0;
  std::uint64_t seed = 0;
};

// Aggregated verification record. pass holds iff worst_margin >= -tol, where
// the margin of a sample is RHS - LHS of the checked inequality.
struct SweepReport {
  std::string inequality;
  long n_samples = 0;
  double worst_margin = 0.0;
  std::vector<Point> witness;  // pair for chains, triple for metric checks
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool pass = false;
  std::optional<double> estimate;  // max triangle ratio for metric checks
};

// Estimated supremum of a metric quotient with the witness configuration.
struct ExtremumReport {
  std::string quotient;
  Domain domain;
  double supremum = 0.0;
  std::vector<Point> witness;
  long trace_length = 0;  // accepted refinement moves
  std::map<std::string, double> extras;
};

struct FigureCell {
  double re = 0.0;
  double im = 0.0;
  std::optional<double> quotient;  // empty outside the disk and at y = x
};

enum class ChainId { L23a, L23b, L23c, L24, C48, T46, T510, T511, T57 };

std::string chain_name(ChainId id);
ChainId parse_chain(const std::string& name);

// Seeded search for the quasi-metric constant of the given metric: uniform
// triples plus structured probes (midpoint of a pair, a point slightly beyond
// one endpoint), then coordinate pattern search on the best 32 candidates.
TripleWitness quasi_constant(const Domain& d, MetricKind metric, long n_samples,
                             std::uint64_t seed, double s_tol = 1e-8);

// Maximal triangle ratio over seeded triples (no refinement); pass iff no
// triple exceeds 1 + tol.
SweepReport metric_check(const Domain& d, MetricKind metric, long n_samples,
                         std::uint64_t seed, double s_tol = 1e-8,
                         double tol = 1e-9);

// metric_check for the point pair function on the sector S_theta
SweepReport metric_check_sector(double theta, long n_samples, std::uint64_t seed);

// Verifies one of the built-in inequality chains on seeded pairs. The s metric
// is evaluated by its dispatch with oracle fallback at s_tol.
SweepReport inequality_sweep(const Domain& d, ChainId chain, long n_samples,
                             std::uint64_t seed, double tol = 1e-9,
                             double s_tol = 1e-8);

// Maximizes s/w over the one-parameter family x = h, y = hi in the unit disk;
// reports the supremum, the maximizer h0 (extras["argmax_h"]) and the value at
// h = 1/sqrt(2) (extras["value_at_inv_sqrt2"]).
ExtremumReport special_case_extremum();

// Global search for sup s/w over unit-disk pairs, s by oracle: seeded samples
// (the equal-radius right-angle maximizer is always included as a candidate)
// plus pattern-search refinement. Exploratory: the estimate supports, but does
// not prove, sharpness of the special-case constant.
ExtremumReport conjecture_sw_search(long n_samples, std::uint64_t seed);

// Grid of the quotient s/w over y in the unit disk with x = (x_fixed, 0);
// resolution x resolution cells at coordinates -1 + 2k/resolution.
std::vector<FigureCell> figure1_grid(double x_fixed, int resolution);

// w/j* at x = 1-k, y = (1-k) e^{2ki}; approaches sqrt(2) as k -> 0+.
double jw_limit_curve(double k);
double jw_limit_curve_closed(double k);

// Evaluator for one metric kind bound to a domain (s uses dispatch with
// oracle fallback at s_tol).
std::function<double(const Point&, const Point&)> metric_fn(const Domain& d,
                                                            MetricKind kind,
                                                            double s_tol = 1e-8);

}  // namespace metriq
