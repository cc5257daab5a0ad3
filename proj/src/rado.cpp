#include "rmc/rado.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rmc/intersection.hpp"

namespace rmc {

namespace {

ElementSet canonical_ground(const RadoSystem& sys, std::span<const int> j_set) {
  ElementSet j = detail::canonical(j_set, sys.ground_size);
  return j;
}

std::vector<std::vector<int>> family_for(const RadoSystem& sys,
                                         const std::vector<int>& members) {
  std::vector<std::vector<int>> family;
  family.reserve(members.size());
  for (int y : members) family.push_back(sys.candidate_sets[y]);
  return family;
}

}  // namespace

RadoSystem build_relax(const MetricInstance& inst, const MatroidOracle& base,
                       double r) {
  if (r < 0.0) throw std::invalid_argument("relaxation radius must be nonnegative");
  if (base.ground_size() != inst.n) {
    throw std::invalid_argument("relaxation: matroid ground size " +
                                std::to_string(base.ground_size()) +
                                " does not match point count " +
                                std::to_string(inst.n));
  }
  RadoSystem sys;
  sys.base = &base;
  sys.ground_size = inst.n;
  sys.candidate_sets.reserve(inst.n);
  for (int e = 0; e < inst.n; ++e) {
    sys.candidate_sets.push_back(ball(inst, e, 2.0 * r));
  }
  return sys;
}

bool is_rado_independent(const RadoSystem& sys, std::span<const int> j_set) {
  ElementSet j = canonical_ground(sys, j_set);
  if (j.empty()) return true;
  TransversalMatroid partial(sys.base->ground_size(), family_for(sys, j));
  return max_common_independent(*sys.base, partial).size() == j.size();
}

RepresentativeMap representatives(const RadoSystem& sys, std::span<const int> j_set) {
  ElementSet j = canonical_ground(sys, j_set);
  if (j.empty()) return {};
  TransversalMatroid partial(sys.base->ground_size(), family_for(sys, j));
  ElementSet image = max_common_independent(*sys.base, partial);
  if (image.size() != j.size()) {
    throw NoRepresentativesError("no system of distinct representatives exists");
  }
  auto matching = partial.saturating_matching(image);
  // image came out of the intersection, so the matching must exist
  if (!matching) {
    throw OracleInconsistencyError("intersection witness is not matchable");
  }
  RepresentativeMap map(j.size());
  for (size_t pos = 0; pos < image.size(); ++pos) {
    int member_index = (*matching)[pos];
    map[member_index] = {j[member_index], image[pos]};
  }
  return map;
}

RadoIncrementalContext::RadoIncrementalContext(const RadoSystem& sys) : sys_(&sys) {}

bool RadoIncrementalContext::try_extend(int t) {
  ++probes_;
  if (t < 0 || t >= sys_->ground_size) {
    throw std::out_of_range("extension element outside the derived ground set");
  }
  for (int y : members_) {
    if (y == t) return true;  // J with t = J, already witnessed
  }
  std::vector<int> grown = members_;
  grown.push_back(t);
  // The witness for the current members is still a common independent set
  // after the family gains one more candidate set, so a single augmentation
  // decides whether the grown family is saturable.
  TransversalMatroid partial(sys_->base->ground_size(), family_for(*sys_, grown));
  IntersectionState state(*sys_->base, partial, witness_);
  if (!state.augment()) return false;
  witness_ = state.current();
  members_ = std::move(grown);
  return true;
}

}  // namespace rmc
