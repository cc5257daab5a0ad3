#include <doctest.h>

#include <cmath>

#include "rmc/exact.hpp"
#include "rmc/generator.hpp"
#include "rmc/instance_io.hpp"
#include "rmc/solver.hpp"

#include "test_util.hpp"

using namespace rmc;
using nlohmann::json;

namespace {

json minimal_instance() {
  return json::parse(R"({
    "format": 1,
    "points": {"matrix": [[0, 2], [2, 0]]},
    "weights": [1, 3],
    "m": 4,
    "matroid": {"type": "uniform", "k": 1}
  })");
}

}  // namespace

TEST_CASE("parse a matrix instance") {
  ParsedInstance parsed = parse_instance(minimal_instance());
  CHECK(parsed.metric.n == 2);
  CHECK(parsed.metric.d(0, 1) == 2.0);
  CHECK(parsed.metric.weights == std::vector<double>{1.0, 3.0});
  CHECK(parsed.metric.coverage_target == 4.0);
  CHECK(parsed.matroid->ground_size() == 2);
  CHECK(rank(*parsed.matroid) == 1);
}

TEST_CASE("euclidean coordinates expand to a distance matrix") {
  json doc = json::parse(R"({
    "points": {"euclidean": [[0, 0], [3, 4], [0, 8]]},
    "weights": [1, 1, 1],
    "m": 1,
    "matroid": {"type": "uniform", "k": 2}
  })");
  ParsedInstance parsed = parse_instance(doc);
  CHECK(parsed.metric.d(0, 1) == 5.0);
  CHECK(parsed.metric.d(1, 2) == 5.0);
  CHECK(parsed.metric.d(0, 2) == 8.0);
  CHECK(parsed.metric.d(1, 0) == parsed.metric.d(0, 1));
  MetricInstance copy = parsed.metric;
  CHECK(validate_metric(copy).empty());
}

TEST_CASE("schema violations name the offending field") {
  auto expect_error = [](json doc, const char* fragment) {
    try {
      parse_instance(doc);
      FAIL_CHECK("expected a parse failure mentioning ", fragment);
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };

  json doc = minimal_instance();
  doc.erase("weights");
  expect_error(doc, "weights");

  doc = minimal_instance();
  doc["format"] = 2;
  expect_error(doc, "format");

  doc = minimal_instance();
  doc["points"]["matrix"] = json::array({json::array({0, 1})});
  expect_error(doc, "matrix");

  doc = minimal_instance();
  doc["points"]["euclidean"] = json::array({json::array({0, 0})});
  expect_error(doc, "points");  // both matrix and euclidean present

  doc = minimal_instance();
  doc["weights"] = json::array({-1, 1});
  expect_error(doc, "weights[0]");

  doc = minimal_instance();
  doc["m"] = -2;
  expect_error(doc, "m");

  doc = minimal_instance();
  doc["matroid"] = {{"type", "frobnicated"}};
  expect_error(doc, "matroid.type");

  doc = minimal_instance();
  doc["matroid"] = {{"type", "partition"}, {"classes", {0}}, {"capacities", {1}}};
  expect_error(doc, "matroid.classes");
}

TEST_CASE("matroid JSON covers every concrete class") {
  json uniform = {{"type", "uniform"}, {"k", 2}};
  CHECK(rank(*matroid_from_json(uniform, 4)) == 2);

  json partition = {{"type", "partition"},
                    {"classes", {0, 0, 1, 1}},
                    {"capacities", {1, 1}}};
  auto pm = matroid_from_json(partition, 4);
  CHECK(pm->is_independent(ElementSet{0, 2}));
  CHECK_FALSE(pm->is_independent(ElementSet{0, 1}));

  json graphic = {{"type", "graphic"},
                  {"vertices", 3},
                  {"edges", {{0, 1}, {1, 2}, {0, 2}}}};
  auto gm = matroid_from_json(graphic, 3);
  CHECK_FALSE(gm->is_independent(ElementSet{0, 1, 2}));

  json transversal = {{"type", "transversal"}, {"family", {{0, 1}, {1, 2}}}};
  auto tm = matroid_from_json(transversal, 3);
  CHECK(tm->is_independent(ElementSet{0, 2}));
  CHECK_FALSE(tm->is_independent(ElementSet{0, 1, 2}));

  json expl = {{"type", "explicit"},
               {"ground_size", 2},
               {"independent_sets", {json::array(), {0}, {1}}}};
  auto em = matroid_from_json(expl, 2);
  CHECK_FALSE(em->is_independent(ElementSet{0, 1}));

  json bad_explicit = {{"type", "explicit"},
                       {"ground_size", 2},
                       {"independent_sets", {json::array(), {0}, {0, 1}}}};
  CHECK_THROWS_AS(matroid_from_json(bad_explicit, 2), std::invalid_argument);
}

TEST_CASE("solution JSON round-trips") {
  auto parsed = testutil::random_instance(31, 8, "transversal");
  SearchResult res = search_radius(parsed.metric, *parsed.matroid);
  json doc = solution_to_json(res.solution, /*include_trace=*/true);
  Solution back = solution_from_json(doc);
  CHECK(back.r == res.solution.r);
  CHECK(back.radius == res.solution.radius);
  CHECK(back.centers == res.solution.centers);
  CHECK(back.rep_map == res.solution.rep_map);
  CHECK(back.covered_weight == res.solution.covered_weight);
  CHECK(back.feasible == res.solution.feasible);
  CHECK(verify_solution(parsed.metric, *parsed.matroid, back).all_pass());

  json no_trace = solution_to_json(res.solution, /*include_trace=*/false);
  CHECK(!no_trace.contains("trace"));
  CHECK(doc.contains("trace"));

  // the emitted key set is a contract
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"centers", "covered_weight", "feasible", "r",
                                         "radius", "representative_map", "trace"});
}

TEST_CASE("generated instances parse, validate, and solve for every flag combo") {
  const char* geometries[] = {"graph", "euclidean"};
  const char* types[] = {"uniform", "partition", "graphic", "transversal"};
  std::uint64_t seed = 1000;
  for (const char* geometry : geometries) {
    for (const char* type : types) {
      for (int n : {1, 2, 6, 11}) {
        GenSpec spec;
        spec.seed = ++seed;
        spec.n = n;
        spec.geometry = geometry;
        spec.matroid_type = type;
        if (std::string(type) == "graphic" && n >= 2) spec.graphic_vertices = 4;
        json doc = generate_instance(spec);
        ParsedInstance parsed = parse_instance(doc);
        CHECK(parsed.metric.n == n);
        int base_rank = rank(*parsed.matroid);
        CHECK(base_rank >= 1);
        CHECK(base_rank <= 4);
        CHECK(validate_metric(parsed.metric).empty());
        SearchResult res = search_radius(parsed.metric, *parsed.matroid);
        CHECK(res.solution.feasible);  // generated m never exceeds w(X)
      }
    }
  }
}

TEST_CASE("generation is deterministic in the seed") {
  GenSpec spec;
  spec.seed = 99;
  spec.n = 9;
  spec.matroid_type = "partition";
  CHECK(generate_instance(spec).dump() == generate_instance(spec).dump());
  GenSpec other = spec;
  other.seed = 100;
  CHECK(generate_instance(spec).dump() != generate_instance(other).dump());
}

TEST_CASE("generated partition capacities always admit an element") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n = 7;
    spec.matroid_type = "partition";
    spec.partition_classes = 3;
    json doc = generate_instance(spec);
    int cap_sum = 0;
    for (int cap : doc["matroid"]["capacities"].get<std::vector<int>>()) {
      cap_sum += cap;
    }
    CHECK(cap_sum >= 1);
    CHECK(rank(*parse_instance(doc).matroid) >= 1);
  }
}
