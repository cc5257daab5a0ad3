#pragma once

#include <stdexcept>
#include <vector>

#include "rmc/matroid.hpp"

namespace rmc {

// Raised when applying an augmenting path produces a set one of the oracles
// rejects. That cannot happen for genuine matroids, so it signals a broken
// oracle rather than a solver bug.
class OracleInconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incremental maximum-cardinality common independent set of two matroids on
// the same ground set. Single-owner mutable; the referenced oracles must
// outlive the state.
class IntersectionState {
 public:
  IntersectionState(const MatroidOracle& m1, const MatroidOracle& m2);
  // Seeds from a set that must already be independent in both matroids
  // (std::invalid_argument otherwise).
  IntersectionState(const MatroidOracle& m1, const MatroidOracle& m2,
                    ElementSet start);

  // One shortest-augmenting-path step over the exchange graph (BFS, arcs
  // explored in ascending element order). Returns false and leaves the
  // current set untouched when it is already maximum.
  bool augment();

  const ElementSet& current() const { return current_; }

 private:
  const MatroidOracle* m1_;
  const MatroidOracle* m2_;
  ElementSet current_;  // sorted ascending
};

ElementSet max_common_independent(const MatroidOracle& m1, const MatroidOracle& m2);

}  // namespace rmc
