#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "rmc/matroid.hpp"
#include "rmc/metric.hpp"
#include "rmc/solver.hpp"

namespace rmc {

// Instance files are JSON:
//   {
//     "format": 1,
//     "points": {"matrix": [[...], ...]} or {"euclidean": [[x, y, ...], ...]},
//     "weights": [...],
//     "m": number,
//     "matroid": {"type": "uniform" | "partition" | "graphic" | "transversal"
//                 | "explicit", ...}
//   }
// Euclidean coordinates are expanded to a full distance matrix at load time.
// Shape and nonnegativity are enforced here; metric soundness (symmetry,
// diagonal, triangle inequality) stays an explicit validate_metric call.
struct ParsedInstance {
  MetricInstance metric;
  std::unique_ptr<MatroidOracle> matroid;
};

// Both throw std::invalid_argument naming the offending field.
ParsedInstance parse_instance(const nlohmann::json& doc);
ParsedInstance load_instance_file(const std::string& path);

// `expected_ground` is the instance point count; every matroid type must
// cover exactly that ground set.
std::unique_ptr<MatroidOracle> matroid_from_json(const nlohmann::json& doc,
                                                 int expected_ground);

nlohmann::json solution_to_json(const Solution& sol, bool include_trace);
Solution solution_from_json(const nlohmann::json& doc);
Solution load_solution_file(const std::string& path);

}  // namespace rmc
