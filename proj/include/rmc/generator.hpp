#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include <json.hpp>

namespace rmc {

// All generator randomness flows through this wrapper around std::mt19937_64
// so that a seed pins the generated corpus exactly:
//   next_u64()        = the raw engine output
//   uniform_int(a,b)  = a + next_u64() % (b - a + 1)
// The modulo method is part of the contract; its tiny bias is irrelevant for
// test-instance generation and keeps the derivation portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next_u64() { return engine_(); }
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

struct GenSpec {
  std::uint64_t seed = 0;
  int n = 8;
  // "graph": integer shortest-path metric over a random connected multigraph
  // (triangle inequality holds by construction). "euclidean": random integer
  // coordinates in [0, 50]^dim.
  std::string geometry = "graph";
  int dim = 2;
  int weight_min = 0;
  int weight_max = 9;
  std::optional<double> coverage_target;  // absent: random integer in [0, w(X)]
  std::string matroid_type = "uniform";   // uniform|partition|graphic|transversal
  std::optional<int> uniform_k;
  std::optional<int> partition_classes;
  std::optional<int> graphic_vertices;
  std::optional<int> transversal_family_size;
};

// Deterministic instance document for the given spec; the result always
// parses and the generated matroid always has rank in [1, 4].
nlohmann::json generate_instance(const GenSpec& spec);

}  // namespace rmc
