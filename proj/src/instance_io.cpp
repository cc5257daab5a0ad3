#include "rmc/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace rmc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw std::invalid_argument("instance error at \"" + field + "\": " + why);
}

double require_number(const json& v, const std::string& field,
                      bool allow_negative = false) {
  if (!v.is_number()) fail(field, "expected a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) fail(field, "value must be finite");
  if (!allow_negative && x < 0.0) fail(field, "value must be nonnegative");
  return x;
}

int require_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(field, "expected an integer");
  return v.get<int>();
}

std::vector<int> require_index_array(const json& v, const std::string& field,
                                     int bound) {
  if (!v.is_array()) fail(field, "expected an array of indices");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    int idx = require_int(e, field);
    if (idx < 0 || idx >= bound) {
      fail(field, "index " + std::to_string(idx) + " outside [0, " +
                      std::to_string(bound) + ")");
    }
    out.push_back(idx);
  }
  return out;
}

std::vector<double> parse_matrix(const json& rows, int& n) {
  if (!rows.is_array() || rows.empty()) fail("points.matrix", "expected a nonempty array");
  n = static_cast<int>(rows.size());
  std::vector<double> dist;
  dist.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      fail("points.matrix[" + std::to_string(i) + "]",
           "expected " + std::to_string(n) + " entries");
    }
    for (int j = 0; j < n; ++j) {
      dist.push_back(require_number(row[j], "points.matrix[" + std::to_string(i) +
                                                "][" + std::to_string(j) + "]"));
    }
  }
  return dist;
}

std::vector<double> parse_euclidean(const json& rows, int& n) {
  if (!rows.is_array() || rows.empty()) {
    fail("points.euclidean", "expected a nonempty array of coordinate rows");
  }
  n = static_cast<int>(rows.size());
  size_t dim = 0;
  std::vector<std::vector<double>> coords;
  coords.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.empty()) {
      fail("points.euclidean[" + std::to_string(i) + "]",
           "expected a nonempty coordinate row");
    }
    if (i == 0) {
      dim = row.size();
    } else if (row.size() != dim) {
      fail("points.euclidean[" + std::to_string(i) + "]",
           "coordinate rows must share one dimension");
    }
    std::vector<double> point;
    point.reserve(dim);
    for (size_t d = 0; d < dim; ++d) {
      point.push_back(require_number(row[d],
                                     "points.euclidean[" + std::to_string(i) + "][" +
                                         std::to_string(d) + "]",
                                     /*allow_negative=*/true));
    }
    coords.push_back(std::move(point));
  }
  std::vector<double> dist(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (size_t d = 0; d < dim; ++d) {
        double delta = coords[i][d] - coords[j][d];
        sq += delta * delta;
      }
      double val = std::sqrt(sq);
      dist[static_cast<size_t>(i) * n + j] = val;
      dist[static_cast<size_t>(j) * n + i] = val;
    }
  }
  return dist;
}

}  // namespace

std::unique_ptr<MatroidOracle> matroid_from_json(const json& doc, int expected_ground) {
  if (!doc.is_object()) fail("matroid", "expected an object");
  if (!doc.contains("type") || !doc["type"].is_string()) {
    fail("matroid.type", "expected a string");
  }
  const std::string type = doc["type"].get<std::string>();

  if (type == "uniform") {
    if (!doc.contains("k")) fail("matroid.k", "missing");
    int k = require_int(doc["k"], "matroid.k");
    if (k < 0) fail("matroid.k", "must be nonnegative");
    return std::make_unique<UniformMatroid>(expected_ground, k);
  }
  if (type == "partition") {
    if (!doc.contains("classes") || !doc.contains("capacities")) {
      fail("matroid", "partition needs \"classes\" and \"capacities\"");
    }
    if (!doc["capacities"].is_array()) fail("matroid.capacities", "expected an array");
    std::vector<int> caps;
    for (const auto& c : doc["capacities"]) {
      int cap = require_int(c, "matroid.capacities");
      if (cap < 0) fail("matroid.capacities", "capacities must be nonnegative");
      caps.push_back(cap);
    }
    std::vector<int> classes =
        require_index_array(doc["classes"], "matroid.classes",
                            static_cast<int>(caps.size()));
    if (static_cast<int>(classes.size()) != expected_ground) {
      fail("matroid.classes", "expected one class label per point");
    }
    return std::make_unique<PartitionMatroid>(std::move(classes), std::move(caps));
  }
  if (type == "graphic") {
    if (!doc.contains("vertices") || !doc.contains("edges")) {
      fail("matroid", "graphic needs \"vertices\" and \"edges\"");
    }
    int vertices = require_int(doc["vertices"], "matroid.vertices");
    if (vertices <= 0) fail("matroid.vertices", "must be positive");
    if (!doc["edges"].is_array()) fail("matroid.edges", "expected an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) {
        fail("matroid.edges", "each edge must be a pair [u, v]");
      }
      std::vector<int> uv = require_index_array(e, "matroid.edges", vertices);
      edges.emplace_back(uv[0], uv[1]);
    }
    if (static_cast<int>(edges.size()) != expected_ground) {
      fail("matroid.edges", "the edge list is the ground set; expected " +
                                std::to_string(expected_ground) + " edges");
    }
    return std::make_unique<GraphicMatroid>(vertices, std::move(edges));
  }
  if (type == "transversal") {
    if (!doc.contains("family") || !doc["family"].is_array()) {
      fail("matroid.family", "expected an array of element arrays");
    }
    std::vector<std::vector<int>> family;
    for (const auto& s : doc["family"]) {
      family.push_back(require_index_array(s, "matroid.family", expected_ground));
    }
    return std::make_unique<TransversalMatroid>(expected_ground, std::move(family));
  }
  if (type == "explicit") {
    if (!doc.contains("ground_size") || !doc.contains("independent_sets")) {
      fail("matroid", "explicit needs \"ground_size\" and \"independent_sets\"");
    }
    int ground = require_int(doc["ground_size"], "matroid.ground_size");
    if (ground != expected_ground) {
      fail("matroid.ground_size", "must equal the point count");
    }
    if (!doc["independent_sets"].is_array()) {
      fail("matroid.independent_sets", "expected an array of sets");
    }
    std::vector<ElementSet> sets;
    for (const auto& s : doc["independent_sets"]) {
      sets.push_back(require_index_array(s, "matroid.independent_sets", ground));
    }
    try {
      return std::make_unique<ExplicitMatroid>(ground, std::move(sets));
    } catch (const std::invalid_argument& e) {
      fail("matroid.independent_sets", e.what());
    }
  }
  fail("matroid.type", "unknown type \"" + type + "\"");
}

ParsedInstance parse_instance(const json& doc) {
  if (!doc.is_object()) fail("(root)", "expected an object");
  if (doc.contains("format")) {
    int format = require_int(doc["format"], "format");
    if (format != 1) fail("format", "unsupported format version");
  }
  if (!doc.contains("points") || !doc["points"].is_object()) {
    fail("points", "expected an object with \"matrix\" or \"euclidean\"");
  }
  const auto& points = doc["points"];
  bool has_matrix = points.contains("matrix");
  bool has_euclidean = points.contains("euclidean");
  if (has_matrix == has_euclidean) {
    fail("points", "exactly one of \"matrix\" and \"euclidean\" is required");
  }

  ParsedInstance out;
  int n = 0;
  out.metric.dist = has_matrix ? parse_matrix(points["matrix"], n)
                               : parse_euclidean(points["euclidean"], n);
  out.metric.n = n;

  if (!doc.contains("weights") || !doc["weights"].is_array() ||
      static_cast<int>(doc["weights"].size()) != n) {
    fail("weights", "expected an array with one weight per point");
  }
  out.metric.weights.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.metric.weights.push_back(
        require_number(doc["weights"][i], "weights[" + std::to_string(i) + "]"));
  }

  if (!doc.contains("m")) fail("m", "missing coverage target");
  out.metric.coverage_target = require_number(doc["m"], "m");

  if (!doc.contains("matroid")) fail("matroid", "missing");
  out.matroid = matroid_from_json(doc["matroid"], n);
  return out;
}

ParsedInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance JSON parse error: ") + e.what());
  }
  return parse_instance(doc);
}

json solution_to_json(const Solution& sol, bool include_trace) {
  json doc;
  doc["r"] = sol.r;
  doc["radius"] = sol.radius;
  doc["centers"] = sol.centers;
  json pairs = json::array();
  for (const auto& [t, rep] : sol.rep_map) {
    pairs.push_back(json::array({t, rep}));
  }
  doc["representative_map"] = pairs;
  doc["covered_weight"] = sol.covered_weight;
  doc["feasible"] = sol.feasible;
  if (include_trace) {
    json trace = json::array();
    for (const auto& step : sol.trace) {
      trace.push_back({{"picked", step.picked},
                       {"marginal_weight", step.marginal_weight},
                       {"uncovered_after", step.uncovered_after},
                       {"probes", step.probes}});
    }
    doc["trace"] = trace;
  }
  return doc;
}

Solution solution_from_json(const json& doc_in) {
  if (!doc_in.is_object()) fail("(solution root)", "expected an object");
  // accept either a bare solution object or a whole solve report
  const json& doc = doc_in.contains("solution") ? doc_in["solution"] : doc_in;
  if (!doc.is_object()) fail("solution", "expected an object");
  Solution sol;
  if (!doc.contains("r") || !doc.contains("radius") || !doc.contains("centers") ||
      !doc.contains("representative_map") || !doc.contains("covered_weight") ||
      !doc.contains("feasible")) {
    fail("(solution)",
         "required keys: r, radius, centers, representative_map, covered_weight, "
         "feasible");
  }
  sol.r = require_number(doc["r"], "r");
  sol.radius = require_number(doc["radius"], "radius");
  if (!doc["centers"].is_array()) fail("centers", "expected an array");
  for (const auto& c : doc["centers"]) {
    sol.centers.push_back(require_int(c, "centers"));
  }
  if (!doc["representative_map"].is_array()) {
    fail("representative_map", "expected an array of [t, rep] pairs");
  }
  for (const auto& p : doc["representative_map"]) {
    if (!p.is_array() || p.size() != 2) {
      fail("representative_map", "each entry must be a pair [t, rep]");
    }
    sol.rep_map.emplace_back(require_int(p[0], "representative_map"),
                             require_int(p[1], "representative_map"));
  }
  sol.covered_weight = require_number(doc["covered_weight"], "covered_weight");
  if (!doc["feasible"].is_boolean()) fail("feasible", "expected a boolean");
  sol.feasible = doc["feasible"].get<bool>();
  return sol;
}

Solution load_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open solution file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("solution JSON parse error: ") + e.what());
  }
  return solution_from_json(doc);
}

}  // namespace rmc
