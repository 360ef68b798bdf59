#include "metriq/report.hpp"

#include "metriq/parse.hpp"

namespace metriq {

namespace {

nlohmann::ordered_json point_json(const Point& p) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

nlohmann::ordered_json witness_json(const std::vector<Point>& pts) {
  nlohmann::ordered_json w;
  w["x"] = pts.size() > 0 ? point_json(pts[0]) : nlohmann::ordered_json();
  w["y"] = pts.size() > 1 ? point_json(pts[1]) : nlohmann::ordered_json();
  w["z"] = pts.size() > 2 ? point_json(pts[2]) : nlohmann::ordered_json();
  return w;
}

nlohmann::ordered_json base_report(const std::string& task,
                                   const std::string& domain,
                                   const nlohmann::ordered_json& metric,
                                   std::uint64_t seed, long n_samples) {
  nlohmann::ordered_json j;
  j["task"] = task;
  j["domain"] = domain;
  j["metric"] = metric;
  j["seed"] = seed;
  j["n_samples"] = n_samples;
  return j;
}

}  // namespace

nlohmann::ordered_json report_json(const TripleWitness& w, const std::string& task) {
  auto j = base_report(task, render_domain(w.domain), metric_name(w.metric),
                       w.seed, w.n_samples);
  j["estimate"] = w.ratio;
  j["witness"] = witness_json({w.x, w.y, w.z});
  j["margin"] = nullptr;
  j["pass"] = true;
  return j;
}

nlohmann::ordered_json report_json(const SweepReport& r, const std::string& task,
                                   const std::string& domain_literal) {
  auto j = base_report(task, domain_literal, r.inequality, r.seed, r.n_samples);
  if (r.estimate)
    j["estimate"] = *r.estimate;
  else
    j["estimate"] = nullptr;
  j["witness"] = witness_json(r.witness);
  j["margin"] = r.worst_margin;
  j["pass"] = r.pass;
  return j;
}

nlohmann::ordered_json report_json(const ExtremumReport& r, const std::string& task,
                                   long n_samples, std::uint64_t seed) {
  auto j = base_report(task, render_domain(r.domain), r.quotient, seed, n_samples);
  j["estimate"] = r.supremum;
  j["witness"] = witness_json(r.witness);
  j["margin"] = nullptr;
  j["pass"] = true;
  j["trace_length"] = r.trace_length;
  for (const auto& [key, value] : r.extras) j[key] = value;
  return j;
}

nlohmann::ordered_json record_json(const EvalRecord& rec) {
  nlohmann::ordered_json j;
  j["domain"] = render_domain(rec.domain);
  j["metric"] = metric_name(rec.metric.kind);
  j["x"] = point_json(rec.x);
  j["y"] = point_json(rec.y);
  j["value"] = rec.value;
  j["method"] = rec.method == Strategy::oracle ? "oracle" : "closed";
  return j;
}

std::string report_csv(const nlohmann::ordered_json& report) {
  std::string header, row;
  bool first = true;
  for (const auto& [key, value] : report.items()) {
    if (value.is_object() || value.is_array()) continue;  // witness etc.
    if (!first) {
      header += ',';
      row += ',';
    }
    first = false;
    header += key;
    if (value.is_number_float())
      row += render_double(value.get<double>(), 9);
    else if (value.is_null())
      row += "";
    else if (value.is_string())
      row += value.get<std::string>();
    else
      row += value.dump();
  }
  return header + "\n" + row + "\n";
}

std::string records_csv(const std::vector<EvalRecord>& recs) {
  std::string out = "domain,metric,x,y,value,method\n";
  for (const EvalRecord& rec : recs) {
    out += render_domain(rec.domain) + ',' + metric_name(rec.metric.kind) + ',';
    out += '"' + render_point(rec.x) + "\",\"" + render_point(rec.y) + "\",";
    out += render_double(rec.value, 9);
    out += rec.method == Strategy::oracle ? ",oracle\n" : ",closed\n";
  }
  return out;
}

std::string figure_csv(const std::vector<FigureCell>& cells) {
  std::string out = "re_y,im_y,quotient\n";
  for (const FigureCell& c : cells) {
    out += render_double(c.re, 9);
    out += ',';
    out += render_double(c.im, 9);
    out += ',';
    if (c.quotient) out += render_double(*c.quotient, 9);
    out += '\n';
  }
  return out;
}

}  // namespace metriq
