#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rmc/matroid.hpp"
#include "rmc/metric.hpp"
#include "rmc/rado.hpp"

namespace rmc {

// Enumeration guardrail tripped. Brute force that silently samples would be
// worse than none, so oversized inputs are a hard error.
class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1u << 20;

struct ExactResult {
  bool feasible = false;
  double opt_radius = 0.0;
  ElementSet witness;  // independent set reaching coverage >= m at opt_radius
  // Aligned with candidate_radii(inst): best coverage over all independent
  // sets at each radius.
  std::vector<double> radii;
  std::vector<double> best_coverage;
};

// Every independent set, by depth-first extension in ascending element order
// with downward-closure pruning. Output order is lexicographic; the empty
// set comes first. Throws EnumerationLimitError past `cap` sets.
std::vector<ElementSet> enumerate_independent_sets(
    const MatroidOracle& base, std::uint64_t cap = kDefaultEnumerationCap);

// Minimum candidate radius at which some independent set covers weight m,
// found by full enumeration.
ExactResult exact_solve(const MetricInstance& inst, const MatroidOracle& base,
                        std::uint64_t cap = kDefaultEnumerationCap);

// Max over independent F of w(B(F, r)) plus the lexicographically smallest
// maximizer.
std::pair<double, ElementSet> best_coverage_at(
    const MetricInstance& inst, const MatroidOracle& base, double r,
    std::uint64_t cap = kDefaultEnumerationCap);

// Independence in the derived matroid checked straight from the definition:
// enumerate injections of J into the base ground respecting the candidate
// sets and test each image against the base oracle. |J| <= 7 enforced.
bool exhaustive_rado_check(const RadoSystem& sys, std::span<const int> j_set);

}  // namespace rmc
