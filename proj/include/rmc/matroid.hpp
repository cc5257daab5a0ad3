#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace rmc {

// Element sets are vectors of ground indices. Callers may pass them unsorted
// or with duplicates; every oracle canonicalizes (sort + dedup) on entry and
// throws std::out_of_range for indices outside the ground set.
using ElementSet = std::vector<int>;

// Stateless independence oracle. Queries are pure and safe to issue from any
// number of threads once the object is constructed.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  virtual int ground_size() const = 0;
  virtual bool is_independent(std::span<const int> set) const = 0;

  bool is_independent(const ElementSet& set) const {
    return is_independent(std::span<const int>(set));
  }
};

namespace detail {
// Sorted, deduplicated copy; throws std::out_of_range if any index is
// outside [0, ground).
ElementSet canonical(std::span<const int> set, int ground);
}  // namespace detail

// Independent iff |S| <= k.
class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(int ground, int k);
  int ground_size() const override { return ground_; }
  bool is_independent(std::span<const int> set) const override;
  int k() const { return k_; }

 private:
  int ground_;
  int k_;
};

// Ground elements carry a class label; independent iff every class stays
// within its capacity.
class PartitionMatroid final : public MatroidOracle {
 public:
  PartitionMatroid(std::vector<int> class_of, std::vector<int> capacities);
  int ground_size() const override { return static_cast<int>(class_of_.size()); }
  bool is_independent(std::span<const int> set) const override;
  const std::vector<int>& class_of() const { return class_of_; }
  const std::vector<int>& capacities() const { return capacities_; }

 private:
  std::vector<int> class_of_;
  std::vector<int> capacities_;
};

// Ground set = edges of a multigraph (kept in construction order); a set is
// independent iff its edges are acyclic. Loops are dependent on their own.
class GraphicMatroid final : public MatroidOracle {
 public:
  GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges);
  int ground_size() const override { return static_cast<int>(edges_.size()); }
  bool is_independent(std::span<const int> set) const override;
  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

// Independent iff the set can be matched into distinct members of a fixed
// set family (a partial transversal). Matching is augmenting-path search
// with ascending tie-breaks, so answers and witnesses are deterministic.
class TransversalMatroid final : public MatroidOracle {
 public:
  TransversalMatroid(int ground, std::vector<std::vector<int>> family);
  int ground_size() const override { return ground_; }
  bool is_independent(std::span<const int> set) const override;

  // Matching witness: for the canonicalized `set`, the family index each
  // element is matched to, or nullopt when no saturating matching exists.
  std::optional<std::vector<int>> saturating_matching(std::span<const int> set) const;

  const std::vector<std::vector<int>>& family() const { return family_; }

 private:
  int ground_;
  std::vector<std::vector<int>> family_;
  std::vector<std::vector<int>> sets_containing_;  // element -> family indices
};

// Full list of independent sets, for oracle-equivalence tests on small
// grounds. The constructor verifies nonemptiness, downward closure and the
// exchange axiom and throws std::invalid_argument on any failure; ground
// sizes above 12 are rejected outright.
class ExplicitMatroid final : public MatroidOracle {
 public:
  ExplicitMatroid(int ground, std::vector<ElementSet> independent_sets);
  int ground_size() const override { return ground_; }
  bool is_independent(std::span<const int> set) const override;
  const std::set<ElementSet>& family() const { return family_; }

 private:
  int ground_;
  std::set<ElementSet> family_;
};

// Forwarding wrapper that counts queries; used for instrumentation. The
// counter is atomic so wrapped oracles stay safe under concurrent readers.
class CountingOracle final : public MatroidOracle {
 public:
  explicit CountingOracle(const MatroidOracle& inner) : inner_(&inner) {}
  int ground_size() const override { return inner_->ground_size(); }
  bool is_independent(std::span<const int> set) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_->is_independent(set);
  }
  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  const MatroidOracle* inner_;
  mutable std::atomic<std::uint64_t> calls_ = 0;
};

// Greedy scan in ascending element order; correct by the exchange property.
int rank(const MatroidOracle& m);

// Smallest-index candidate (not already in I) whose addition keeps I
// independent. Throws std::invalid_argument if I itself is dependent.
std::optional<int> extend(const MatroidOracle& m, const ElementSet& independent,
                          const ElementSet& candidates);

}  // namespace rmc
