// metriq - intrinsic metrics and quasi-metrics on canonical plane domains:
// evaluation, inequality verification, quasi-constant searches and figure
// data, with deterministic seeded runs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metriq/analysis.hpp"
#include "metriq/metrics.hpp"
#include "metriq/oracle.hpp"
#include "metriq/parse.hpp"
#include "metriq/report.hpp"

namespace {

using namespace metriq;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class Stopwatch {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// wall time goes to the console only; files stay byte-reproducible
void log_runtime(const std::string& task, const Stopwatch& sw) {
  std::cerr << task << ": runtime_ms=" << sw.elapsed_ms() << "\n";
}

int write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return kExitPass;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path: " << path << "\n";
    return kExitIo;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing output path: " << path << "\n";
    return kExitIo;
  }
  return kExitPass;
}

int emit_report(const nlohmann::ordered_json& report, const RunConfig& cfg) {
  const std::string text = cfg.format == OutputFormat::csv
                               ? report_csv(report)
                               : report.dump(2) + "\n";
  return write_output(text, cfg.out);
}

int run_eval(const RunConfig& cfg) {
  const Domain domain = parse_domain(cfg.domain);
  const Point x = parse_point(cfg.x);
  const Point y = parse_point(cfg.y);
  Strategy strategy = Strategy::closed_form;
  if (cfg.strategy == "oracle")
    strategy = Strategy::oracle;
  else if (!cfg.strategy.empty() && cfg.strategy != "closed")
    throw std::invalid_argument("unknown strategy: " + cfg.strategy);

  std::vector<EvalRecord> records;
  for (const std::string& name : cfg.metrics)
    records.push_back(
        evaluate(domain, MetricId{parse_metric(name), strategy}, x, y, cfg.tol));

  if (cfg.format == OutputFormat::csv) return write_output(records_csv(records), cfg.out);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const EvalRecord& rec : records) arr.push_back(record_json(rec));
  return write_output(arr.dump(2) + "\n", cfg.out);
}

int run_verify(const RunConfig& cfg) {
  const Domain domain = parse_domain(cfg.domain);
  Stopwatch sw;
  SweepReport rep;
  if (cfg.chain == "p-metric") {
    rep = metric_check(domain, MetricKind::pp, cfg.n_samples, cfg.seed, cfg.tol,
                       1e-9);
  } else if (cfg.chain == "w-metric") {
    rep = metric_check(domain, MetricKind::w, cfg.n_samples, cfg.seed, cfg.tol,
                       1e-9);
  } else {
    rep = inequality_sweep(domain, parse_chain(cfg.chain), cfg.n_samples,
                           cfg.seed, cfg.tol, cfg.tol);
  }
  const auto report = report_json(rep, "verify:" + cfg.chain, cfg.domain);
  log_runtime("verify:" + cfg.chain, sw);
  const int io = emit_report(report, cfg);
  if (io != kExitPass) return io;
  return rep.pass ? kExitPass : kExitFail;
}

int run_search(const RunConfig& cfg) {
  Stopwatch sw;
  nlohmann::ordered_json report;
  if (cfg.target == "sw-special") {
    report = report_json(special_case_extremum(), "search:sw-special", 0, 0);
  } else if (cfg.target == "sw-sup") {
    report = report_json(conjecture_sw_search(cfg.n_samples, cfg.seed),
                         "search:sw-sup", cfg.n_samples, cfg.seed);
  } else if (cfg.target.size() > 6 &&
             cfg.target.substr(cfg.target.size() - 6) == "-quasi") {
    std::string name = cfg.target.substr(0, cfg.target.size() - 6);
    if (name == "p") name = "pp";  // target alias
    const MetricKind kind = parse_metric(name);
    const Domain domain = parse_domain(cfg.domain);
    report = report_json(
        quasi_constant(domain, kind, cfg.n_samples, cfg.seed, cfg.tol),
        "search:" + cfg.target);
  } else {
    throw std::invalid_argument("unknown search target: " + cfg.target);
  }
  log_runtime("search:" + cfg.target, sw);
  return emit_report(report, cfg);
}

int run_figure(const RunConfig& cfg) {
  Stopwatch sw;
  const auto cells = figure1_grid(cfg.x_fixed, cfg.resolution);
  log_runtime("figure", sw);
  return write_output(figure_csv(cells), cfg.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intrinsic metrics and quasi-metrics on plane domains"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string metrics_flag;

  std::string format_flag = "json";
  auto add_format = [&format_flag](CLI::App* sub) {
    sub->add_option("--format", format_flag, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate metrics at a point pair");
  eval->add_option("--domain", cfg.domain, "domain literal")->required();
  eval->add_option("--metric", metrics_flag, "metric name(s), comma separated")
      ->required();
  eval->add_option("--x", cfg.x, "first point, comma separated coordinates")
      ->required();
  eval->add_option("--y", cfg.y, "second point")->required();
  eval->add_option("--strategy", cfg.strategy, "closed|oracle");
  eval->add_option("--tol", cfg.tol, "oracle tolerance");
  eval->add_option("--out", cfg.out, "output path (default stdout)");
  add_format(eval);

  CLI::App* verify = app.add_subcommand("verify", "verify an inequality chain");
  verify->add_option("--domain", cfg.domain, "domain literal")->required();
  verify
      ->add_option("--chain", cfg.chain,
                   "L23a|L23b|L23c|L24|C48|T46|T510|T511|T57|p-metric|w-metric")
      ->required();
  verify->add_option("--n", cfg.n_samples, "sample count");
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_option("--tol", cfg.tol, "margin and oracle tolerance");
  verify->add_option("--out", cfg.out, "output path (default stdout)");
  add_format(verify);

  CLI::App* search = app.add_subcommand("search", "search extremal constants");
  search->add_option("--target", cfg.target,
                     "<metric>-quasi | sw-sup | sw-special")
      ->required();
  search->add_option("--domain", cfg.domain, "domain literal");
  search->add_option("--n", cfg.n_samples, "sample count");
  search->add_option("--seed", cfg.seed, "RNG seed");
  search->add_option("--tol", cfg.tol, "oracle tolerance");
  search->add_option("--out", cfg.out, "output path (default stdout)");
  add_format(search);

  CLI::App* figure = app.add_subcommand("figure", "s/w quotient grid data");
  figure->add_option("--x", cfg.x_fixed, "fixed first point on (0,1)");
  figure->add_option("--resolution", cfg.resolution, "grid resolution (>= 16)");
  figure->add_option("--out", cfg.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.format = format_flag == "csv" ? OutputFormat::csv : OutputFormat::json;

  try {
    if (eval->parsed()) {
      cfg.command = "eval";
      cfg.metrics.clear();
      std::size_t start = 0;
      while (start <= metrics_flag.size()) {
        const std::size_t pos = metrics_flag.find(',', start);
        cfg.metrics.push_back(metrics_flag.substr(
            start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
      return run_eval(cfg);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      return run_verify(cfg);
    }
    if (search->parsed()) {
      cfg.command = "search";
      if (cfg.domain.empty()) cfg.domain = "ball:n=2";
      return run_search(cfg);
    }
    cfg.command = "figure";
    return run_figure(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}
