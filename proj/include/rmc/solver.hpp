#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmc/matroid.hpp"
#include "rmc/metric.hpp"
#include "rmc/rado.hpp"

namespace rmc {

struct GreedyStep {
  int picked = -1;              // t_i
  double marginal_weight = 0.0; // weight of B(t_i, r) among still-uncovered points
  int uncovered_after = 0;      // |U| once B(t_i, 3r) is removed
  std::uint64_t probes = 0;     // Rado-independence probes spent on this pick
};

// One fixed-radius greedy run: picked centers T (a basis of the relaxed
// matroid), their representatives R in the base matroid, and the
// per-iteration trace.
struct GreedyRun {
  double r = 0.0;
  std::vector<int> centers_relaxed;  // T in pick order
  std::vector<GreedyStep> trace;
  ElementSet representatives;        // R, sorted
  RepresentativeMap rep_map;         // t -> representative, d(t, rep) <= 2r
  double covered_weight_5r = 0.0;    // w(B(R, 5r))
};

struct Solution {
  double r = 0.0;               // accepted radius guess
  double radius = 0.0;          // reported radius, 5r
  ElementSet centers;           // R, independent in the base matroid
  RepresentativeMap rep_map;
  double covered_weight = 0.0;  // w(B(centers, radius))
  bool feasible = false;        // covered_weight >= m
  std::vector<GreedyStep> trace;
  std::vector<int> centers_relaxed;
};

struct SearchResult {
  Solution solution;
  int radius_probes = 0;  // greedy runs spent by the search
};

// Greedy over the relaxed matroid at radius guess r: rank(base) iterations,
// each picking the candidate outside T that covers the most still-uncovered
// weight at radius r while keeping T independent in the relaxation (ties to
// the smallest index), then discarding everything within 3r of the pick.
GreedyRun greedy_fixed_radius(const MetricInstance& inst, const MatroidOracle& base,
                              double r);

Solution solution_from_run(const MetricInstance& inst, const GreedyRun& run);

// Boundary binary search over the candidate radii: find adjacent radii where
// the greedy fails then succeeds and return the succeeding run. Failure at
// the smaller radius certifies the optimum exceeds it, which makes the
// result a 5-approximation. Infeasibility (failure even at the largest
// distance) is reported through `feasible = false`.
SearchResult search_radius(const MetricInstance& inst, const MatroidOracle& base);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

// Re-checks a solution object against the instance: base independence of the
// centers, recomputed coverage, flag consistency, representative-map
// validity. Reports, never throws.
VerifyReport verify_solution(const MetricInstance& inst, const MatroidOracle& base,
                             const Solution& sol);

}  // namespace rmc
