#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rmc/matroid.hpp"
#include "rmc/metric.hpp"

namespace rmc {

// A base matroid together with one candidate set per ground element of the
// derived matroid: J is independent in the derived (Rado) matroid iff some
// injective choice of representatives phi(y) in candidate_sets[y] has a
// base-independent image. Immutable; the base oracle must outlive it.
struct RadoSystem {
  const MatroidOracle* base = nullptr;
  int ground_size = 0;  // |Y|
  std::vector<std::vector<int>> candidate_sets;  // per y, subset of base ground
};

// phi as (y, phi(y)) pairs sorted by y.
using RepresentativeMap = std::vector<std::pair<int, int>>;

class NoRepresentativesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The relaxation used by the solver: Y = the point set, candidate set of e is
// the closed ball of radius 2r around e. Every point represents itself
// (d(e,e)=0), so base-independent sets stay independent here.
RadoSystem build_relax(const MetricInstance& inst, const MatroidOracle& base,
                       double r);

// Answered by matroid intersection of the base with the transversal matroid
// of {candidate_sets[y] : y in J}; true iff the maximum common independent
// set saturates J.
bool is_rado_independent(const RadoSystem& sys, std::span<const int> j_set);

// A valid representative map for J, extracted from the intersection witness
// and the matching inside the transversal oracle. Throws
// NoRepresentativesError when J is not independent in the derived matroid.
RepresentativeMap representatives(const RadoSystem& sys, std::span<const int> j_set);

// Witness carried across a run: the accepted set J (in acceptance order), a
// common independent set for it, and enough structure to try one more
// element with a single augmentation. Accept/reject answers match the
// stateless oracle on every call sequence; only the witnesses may differ.
class RadoIncrementalContext {
 public:
  explicit RadoIncrementalContext(const RadoSystem& sys);

  // Attempts to extend the witnessed set by t. On failure the context is
  // unchanged and t is rejected.
  bool try_extend(int t);

  const std::vector<int>& members() const { return members_; }
  std::uint64_t probe_count() const { return probes_; }

 private:
  const RadoSystem* sys_;
  std::vector<int> members_;  // acceptance order
  ElementSet witness_;        // independent in base and matchable into members_
  std::uint64_t probes_ = 0;
};

// MatroidOracle view of the derived matroid (the Rado family is itself a
// matroid); lets generic rank/axiom machinery run on it.
class RadoMatroidOracle final : public MatroidOracle {
 public:
  explicit RadoMatroidOracle(const RadoSystem& sys) : sys_(&sys) {}
  int ground_size() const override { return sys_->ground_size; }
  bool is_independent(std::span<const int> set) const override {
    return is_rado_independent(*sys_, set);
  }

 private:
  const RadoSystem* sys_;
};

}  // namespace rmc
