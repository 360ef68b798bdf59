#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "metriq/analysis.hpp"
#include "metriq/metrics.hpp"

namespace metriq {

// Reports share one JSON shape:
//   {task, domain, metric, seed, n_samples, estimate, witness:{x,y,z},
//    margin, pass}
// Fields that do not apply to a task are null. Files produced from the same
// config and seed are byte-identical, so volatile data (wall time) is printed
// on the console, never serialized.
nlohmann::ordered_json report_json(const TripleWitness& w, const std::string& task);
nlohmann::ordered_json report_json(const SweepReport& r, const std::string& task,
                                   const std::string& domain_literal);
nlohmann::ordered_json report_json(const ExtremumReport& r, const std::string& task,
                                   long n_samples, std::uint64_t seed);
nlohmann::ordered_json record_json(const EvalRecord& rec);

// single-row CSV with a header line
std::string report_csv(const nlohmann::ordered_json& report);
std::string records_csv(const std::vector<EvalRecord>& recs);

// figure table: header re_y,im_y,quotient; empty quotient for empty cells
std::string figure_csv(const std::vector<FigureCell>& cells);

}  // namespace metriq
