#include "metriq/parse.hpp"

#include <charconv>
#include <cstdlib>
#include <system_error>

#include <json.hpp>

namespace metriq {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// "(x,y)" -> Vec2
Vec2 parse_vec2(const std::string& s) {
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("expected a vertex of the form (x,y): " + s);
  const auto parts = split(s.substr(1, s.size() - 2), ',');
  if (parts.size() != 2)
    throw std::invalid_argument("expected two coordinates in vertex: " + s);
  return {parse_double(parts[0]), parse_double(parts[1])};
}

std::string render_vec2(Vec2 v) {
  return "(" + render_double(v.x) + "," + render_double(v.y) + ")";
}

int parse_dim(const std::string& s) {
  if (s.rfind("n=", 0) != 0)
    throw std::invalid_argument("expected n=<dim>, got: " + s);
  const std::string num = s.substr(2);
  int n = 0;
  const auto res = std::from_chars(num.data(), num.data() + num.size(), n);
  if (res.ec != std::errc{} || res.ptr != num.data() + num.size())
    throw std::invalid_argument("bad dimension: " + s);
  return n;
}

}  // namespace

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("bad number: '" + s + "'");
  return v;
}

std::string render_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string render_double(double v, int significant) {
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

Domain parse_domain(const std::string& literal) {
  const std::size_t colon = literal.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bad domain literal: " + literal);
  const std::string head = literal.substr(0, colon);
  const std::string rest = literal.substr(colon + 1);

  if (head == "halfspace") return Domain::half_space(parse_dim(rest));
  if (head == "ball") return Domain::unit_ball(parse_dim(rest));
  if (head == "sector") {
    if (rest.rfind("theta=", 0) != 0)
      throw std::invalid_argument("expected sector:theta=<radians>");
    return Domain::sector(parse_double(rest.substr(6)));
  }
  if (head == "polygon" || head == "punctured") {
    std::vector<Vec2> pts;
    for (const std::string& part : split(rest, ';')) pts.push_back(parse_vec2(part));
    return head == "polygon" ? Domain::polygon(std::move(pts))
                             : Domain::punctured_plane(std::move(pts));
  }
  throw std::invalid_argument("unknown domain kind: " + head);
}

std::string render_domain(const Domain& d) {
  if (const auto* h = d.get_if<HalfSpace>())
    return "halfspace:n=" + std::to_string(h->dim);
  if (const auto* b = d.get_if<UnitBall>())
    return "ball:n=" + std::to_string(b->dim);
  if (const auto* s = d.get_if<Sector>())
    return "sector:theta=" + render_double(s->theta);
  std::string out;
  const std::vector<Vec2>* pts = nullptr;
  if (const auto* p = d.get_if<ConvexPolygon>()) {
    out = "polygon:";
    pts = &p->vertices;
  } else {
    out = "punctured:";
    pts = &d.get_if<PuncturedPlane>()->punctures;
  }
  for (std::size_t i = 0; i < pts->size(); ++i) {
    if (i) out += ';';
    out += render_vec2((*pts)[i]);
  }
  return out;
}

Point parse_point(const std::string& literal) {
  const auto parts = split(literal, ',');
  if (parts.size() < 2)
    throw std::invalid_argument("point needs at least two coordinates: " + literal);
  std::vector<double> coords;
  coords.reserve(parts.size());
  for (const std::string& p : parts) coords.push_back(parse_double(p));
  return Point(std::move(coords));
}

std::string render_point(const Point& p) {
  std::string out;
  for (int i = 0; i < p.dim(); ++i) {
    if (i) out += ',';
    out += render_double(p[i]);
  }
  return out;
}

std::string render_config(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["domain"] = c.domain;
  j["metrics"] = c.metrics;
  j["x"] = c.x;
  j["y"] = c.y;
  j["chain"] = c.chain;
  j["target"] = c.target;
  j["strategy"] = c.strategy;
  j["seed"] = c.seed;
  j["n_samples"] = c.n_samples;
  j["tol"] = c.tol;
  j["x_fixed"] = c.x_fixed;
  j["resolution"] = c.resolution;
  j["out"] = c.out;
  j["format"] = c.format == OutputFormat::json ? "json" : "csv";
  return j.dump(2) + "\n";
}

RunConfig parse_config(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.domain = j.at("domain").get<std::string>();
  c.metrics = j.at("metrics").get<std::vector<std::string>>();
  c.x = j.at("x").get<std::string>();
  c.y = j.at("y").get<std::string>();
  c.chain = j.at("chain").get<std::string>();
  c.target = j.at("target").get<std::string>();
  c.strategy = j.at("strategy").get<std::string>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.n_samples = j.at("n_samples").get<long>();
  c.tol = j.at("tol").get<double>();
  c.x_fixed = j.at("x_fixed").get<double>();
  c.resolution = j.at("resolution").get<int>();
  c.out = j.at("out").get<std::string>();
  const std::string fmt = j.at("format").get<std::string>();
  if (fmt == "json")
    c.format = OutputFormat::json;
  else if (fmt == "csv")
    c.format = OutputFormat::csv;
  else
    throw std::invalid_argument("unknown format: " + fmt);
  return c;
}

}  // namespace metriq
