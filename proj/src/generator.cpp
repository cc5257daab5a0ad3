#include "rmc/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rmc {

using nlohmann::json;

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  return lo + static_cast<int>(next_u64() % span);
}

namespace {

// Integer shortest-path closure of a random connected multigraph on the
// points; triangle inequality holds by construction and all distances are
// small integers.
json graph_metric(Rng& rng, int n) {
  constexpr long long kInf = 1LL << 40;
  std::vector<long long> d(static_cast<size_t>(n) * n, kInf);
  auto at = [&](int i, int j) -> long long& { return d[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) at(i, i) = 0;

  auto add_edge = [&](int u, int v, long long w) {
    if (u == v) return;
    at(u, v) = std::min(at(u, v), w);
    at(v, u) = std::min(at(v, u), w);
  };
  for (int i = 1; i < n; ++i) {
    add_edge(rng.uniform_int(0, i - 1), i, rng.uniform_int(1, 9));
  }
  for (int extra = 0; extra < n / 2; ++extra) {
    int u = rng.uniform_int(0, n - 1);
    int v = rng.uniform_int(0, n - 1);
    add_edge(u, v, rng.uniform_int(1, 9));
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        at(i, j) = std::min(at(i, j), at(i, k) + at(k, j));
      }
    }
  }

  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(at(i, j));
    rows.push_back(row);
  }
  return json{{"matrix", rows}};
}

json euclidean_points(Rng& rng, int n, int dim) {
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int d = 0; d < dim; ++d) row.push_back(rng.uniform_int(0, 50));
    rows.push_back(row);
  }
  return json{{"euclidean", rows}};
}

json gen_matroid(Rng& rng, const GenSpec& spec) {
  const int n = spec.n;
  if (spec.matroid_type == "uniform") {
    int k = spec.uniform_k.value_or(rng.uniform_int(1, 4));
    if (k < 1) throw std::invalid_argument("generator: uniform k must be >= 1");
    return json{{"type", "uniform"}, {"k", k}};
  }
  if (spec.matroid_type == "partition") {
    int c = spec.partition_classes.value_or(rng.uniform_int(2, 4));
    if (c < 1) throw std::invalid_argument("generator: class count must be >= 1");
    std::vector<int> class_of(n);
    for (int i = 0; i < n; ++i) class_of[i] = rng.uniform_int(0, c - 1);
    std::vector<int> caps(c, 0);
    int budget = rng.uniform_int(1, 4);
    for (int b = 0; b < budget; ++b) caps[rng.uniform_int(0, c - 1)] += 1;
    // Keep the rank positive without growing the capacity budget: make sure
    // the class of point 0 can take an element, paying for it elsewhere.
    std::vector<int> count(c, 0);
    for (int cls : class_of) count[cls] += 1;
    int achievable = 0;
    for (int i = 0; i < c; ++i) achievable += std::min(caps[i], count[i]);
    if (achievable == 0) {
      int c0 = class_of[0];
      for (int i = 0; i < c; ++i) {
        if (i != c0 && caps[i] > 0) {
          caps[i] -= 1;
          break;
        }
      }
      caps[c0] = std::max(caps[c0], 1);
    }
    return json{{"type", "partition"}, {"classes", class_of}, {"capacities", caps}};
  }
  if (spec.matroid_type == "graphic") {
    int v = spec.graphic_vertices.value_or(rng.uniform_int(2, 5));
    if (v < 2) throw std::invalid_argument("generator: graphic needs >= 2 vertices");
    json edges = json::array();
    edges.push_back(json::array({0, 1}));  // one non-loop edge keeps rank >= 1
    for (int e = 1; e < n; ++e) {
      edges.push_back(
          json::array({rng.uniform_int(0, v - 1), rng.uniform_int(0, v - 1)}));
    }
    return json{{"type", "graphic"}, {"vertices", v}, {"edges", edges}};
  }
  if (spec.matroid_type == "transversal") {
    int k = spec.transversal_family_size.value_or(rng.uniform_int(1, 4));
    if (k < 1) throw std::invalid_argument("generator: family size must be >= 1");
    std::vector<std::vector<int>> family(k);
    for (int j = 0; j < k; ++j) {
      for (int e = 0; e < n; ++e) {
        if (rng.next_u64() % 4 == 0) family[j].push_back(e);
      }
    }
    if (family[0].empty()) family[0].push_back(rng.uniform_int(0, n - 1));
    json fam = json::array();
    for (const auto& s : family) fam.push_back(s);
    return json{{"type", "transversal"}, {"family", fam}};
  }
  throw std::invalid_argument("generator: unknown matroid type \"" +
                              spec.matroid_type + "\"");
}

}  // namespace

json generate_instance(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator: n must be >= 1");
  if (spec.weight_min < 0 || spec.weight_min > spec.weight_max) {
    throw std::invalid_argument("generator: weight range is empty or negative");
  }
  if (spec.geometry != "graph" && spec.geometry != "euclidean") {
    throw std::invalid_argument("generator: unknown geometry \"" + spec.geometry +
                                "\"");
  }
  if (spec.dim < 1) throw std::invalid_argument("generator: dim must be >= 1");
  if (spec.coverage_target && *spec.coverage_target < 0.0) {
    throw std::invalid_argument("generator: m must be nonnegative");
  }

  Rng rng(spec.seed);
  json doc;
  doc["format"] = 1;
  doc["points"] = spec.geometry == "graph" ? graph_metric(rng, spec.n)
                                           : euclidean_points(rng, spec.n, spec.dim);

  std::vector<int> weights(spec.n);
  long long total = 0;
  for (int i = 0; i < spec.n; ++i) {
    weights[i] = rng.uniform_int(spec.weight_min, spec.weight_max);
    total += weights[i];
  }
  doc["weights"] = weights;

  if (spec.coverage_target) {
    doc["m"] = *spec.coverage_target;
  } else {
    doc["m"] = rng.uniform_int(0, static_cast<int>(total));
  }

  doc["matroid"] = gen_matroid(rng, spec);
  return doc;
}

}  // namespace rmc
