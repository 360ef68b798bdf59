#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metriq/geometry.hpp"

namespace metriq {

// Domain literals, the exact grammar used by the CLI and config files:
//   halfspace:n=2
//   ball:n=2
//   sector:theta=1.5707963267948966
//   polygon:(-1,0);(1,0);(1,1);(-1,1)
//   punctured:(0,0);(1,0)
// Angles are radians in decimal notation. render(parse(s)) reproduces a
// canonical form; parse(render(d)) reproduces the domain exactly.
Domain parse_domain(const std::string& literal);
std::string render_domain(const Domain& d);

// comma-separated coordinates, e.g. "0.5,0" or "0.1,0.2,0.3"
Point parse_point(const std::string& literal);
std::string render_point(const Point& p);

// shortest decimal representation that round-trips the double
std::string render_double(double v);
// fixed significant digits (CSV output uses 9)
std::string render_double(double v, int significant);
double parse_double(const std::string& s);

enum class OutputFormat { json, csv };

// One CLI invocation, normalized. parse_config(render_config(c)) == c.
struct RunConfig {
  std::string command;           // eval | verify | search | figure
  std::string domain;            // domain literal ("" when defaulted)
  std::vector<std::string> metrics;
  std::string x;                 // point literal
  std::string y;
  std::string chain;
  std::string target;
  std::string strategy;          // "" | closed | oracle
  std::uint64_t seed = 0;
  long n_samples = 100000;
  double tol = 1e-9;
  double x_fixed = 0.6;
  int resolution = 200;
  std::string out;               // output path, "" for stdout
  OutputFormat format = OutputFormat::json;

  bool operator==(const RunConfig&) const = default;
};

std::string render_config(const RunConfig& c);
RunConfig parse_config(const std::string& json_text);

}  // namespace metriq
