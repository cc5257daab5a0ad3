#include "rmc/exact.hpp"

#include <algorithm>
#include <string>

namespace rmc {

namespace {

void enumerate_rec(const MatroidOracle& base, ElementSet& current, int next,
                   std::uint64_t cap, std::uint64_t& seen,
                   std::vector<ElementSet>& out) {
  if (++seen > cap) {
    throw EnumerationLimitError("independent-set enumeration exceeded cap of " +
                                std::to_string(cap) + " sets");
  }
  out.push_back(current);
  for (int e = next; e < base.ground_size(); ++e) {
    current.push_back(e);
    if (base.is_independent(current)) {
      enumerate_rec(base, current, e + 1, cap, seen, out);
    }
    current.pop_back();
  }
}

}  // namespace

std::vector<ElementSet> enumerate_independent_sets(const MatroidOracle& base,
                                                   std::uint64_t cap) {
  std::vector<ElementSet> out;
  ElementSet current;
  std::uint64_t seen = 0;
  enumerate_rec(base, current, 0, cap, seen, out);
  return out;
}

ExactResult exact_solve(const MetricInstance& inst, const MatroidOracle& base,
                        std::uint64_t cap) {
  std::vector<ElementSet> sets = enumerate_independent_sets(base, cap);
  ExactResult result;
  result.radii = candidate_radii(inst);
  result.best_coverage.assign(result.radii.size(), 0.0);

  std::vector<ElementSet> best_witness(result.radii.size());
  for (const auto& f : sets) {
    for (size_t ri = 0; ri < result.radii.size(); ++ri) {
      double cov = ball_union_weight(inst, f, result.radii[ri]);
      if (cov > result.best_coverage[ri]) {
        result.best_coverage[ri] = cov;
        best_witness[ri] = f;
      }
    }
  }
  // The empty set realizes coverage 0, so a zero entry still has a witness.
  for (size_t ri = 0; ri < result.radii.size(); ++ri) {
    if (result.best_coverage[ri] >= inst.coverage_target) {
      result.feasible = true;
      result.opt_radius = result.radii[ri];
      result.witness = best_witness[ri];
      break;
    }
  }
  return result;
}

std::pair<double, ElementSet> best_coverage_at(const MetricInstance& inst,
                                               const MatroidOracle& base, double r,
                                               std::uint64_t cap) {
  std::vector<ElementSet> sets = enumerate_independent_sets(base, cap);
  double best = 0.0;
  ElementSet witness;  // lexicographically smallest maximizer: enumeration is
                       // lexicographic and only strict improvements replace it
  for (const auto& f : sets) {
    double cov = ball_union_weight(inst, f, r);
    if (cov > best) {
      best = cov;
      witness = f;
    }
  }
  return {best, witness};
}

namespace {

bool injection_rec(const RadoSystem& sys, const ElementSet& j, size_t pos,
                   ElementSet& image, std::vector<char>& used) {
  if (pos == j.size()) return true;
  for (int candidate : sys.candidate_sets[j[pos]]) {
    if (used[candidate]) continue;
    image.push_back(candidate);
    // Prefix images of an independent image are independent, so pruning on a
    // dependent prefix loses nothing.
    if (sys.base->is_independent(image)) {
      used[candidate] = 1;
      if (injection_rec(sys, j, pos + 1, image, used)) return true;
      used[candidate] = 0;
    }
    image.pop_back();
  }
  return false;
}

}  // namespace

bool exhaustive_rado_check(const RadoSystem& sys, std::span<const int> j_set) {
  ElementSet j = detail::canonical(j_set, sys.ground_size);
  if (j.size() > 7) {
    throw EnumerationLimitError("exhaustive representative search capped at |J| <= 7");
  }
  ElementSet image;
  std::vector<char> used(static_cast<size_t>(sys.base->ground_size()), 0);
  return injection_rec(sys, j, 0, image, used);
}

}  // namespace rmc
