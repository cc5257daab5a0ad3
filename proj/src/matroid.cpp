#include "rmc/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rmc {

namespace detail {

ElementSet canonical(std::span<const int> set, int ground) {
  ElementSet out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && (out.front() < 0 || out.back() >= ground)) {
    throw std::out_of_range("element outside ground set of size " +
                            std::to_string(ground));
  }
  return out;
}

}  // namespace detail

namespace {

// Path-compressed union-find, local to a single query.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // false if x and y were already connected
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

}  // namespace

UniformMatroid::UniformMatroid(int ground, int k) : ground_(ground), k_(k) {
  if (ground < 0 || k < 0) throw std::invalid_argument("uniform matroid: negative size");
}

bool UniformMatroid::is_independent(std::span<const int> set) const {
  return static_cast<int>(detail::canonical(set, ground_).size()) <= k_;
}

PartitionMatroid::PartitionMatroid(std::vector<int> class_of, std::vector<int> capacities)
    : class_of_(std::move(class_of)), capacities_(std::move(capacities)) {
  for (int c : class_of_) {
    if (c < 0 || c >= static_cast<int>(capacities_.size())) {
      throw std::invalid_argument("partition matroid: class label out of range");
    }
  }
  for (int cap : capacities_) {
    if (cap < 0) throw std::invalid_argument("partition matroid: negative capacity");
  }
}

bool PartitionMatroid::is_independent(std::span<const int> set) const {
  ElementSet s = detail::canonical(set, ground_size());
  std::vector<int> count(capacities_.size(), 0);
  for (int e : s) {
    int c = class_of_[e];
    if (++count[c] > capacities_[c]) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto [u, v] : edges_) {
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) {
      throw std::invalid_argument("graphic matroid: edge endpoint out of range");
    }
  }
}

bool GraphicMatroid::is_independent(std::span<const int> set) const {
  ElementSet s = detail::canonical(set, ground_size());
  UnionFind uf(vertex_count_);
  for (int e : s) {
    auto [u, v] = edges_[e];
    if (!uf.unite(u, v)) return false;  // closes a cycle (loops included)
  }
  return true;
}

TransversalMatroid::TransversalMatroid(int ground, std::vector<std::vector<int>> family)
    : ground_(ground), family_(std::move(family)), sets_containing_(ground) {
  for (size_t j = 0; j < family_.size(); ++j) {
    auto& members = family_[j];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int e : members) {
      if (e < 0 || e >= ground_) {
        throw std::invalid_argument("transversal matroid: family element out of range");
      }
      sets_containing_[e].push_back(static_cast<int>(j));
    }
  }
}

bool TransversalMatroid::is_independent(std::span<const int> set) const {
  return saturating_matching(set).has_value();
}

std::optional<std::vector<int>> TransversalMatroid::saturating_matching(
    std::span<const int> set) const {
  ElementSet s = detail::canonical(set, ground_);
  const int k = static_cast<int>(family_.size());
  std::vector<int> set_owner(k, -1);  // family index -> position in s
  std::vector<int> matched_to(s.size(), -1);

  // Kuhn's augmenting paths, elements and family sets scanned ascending.
  std::vector<char> visited(k, 0);
  auto try_match = [&](auto&& self, int pos) -> bool {
    for (int j : sets_containing_[s[pos]]) {
      if (visited[j]) continue;
      visited[j] = 1;
      if (set_owner[j] == -1 || self(self, set_owner[j])) {
        set_owner[j] = pos;
        matched_to[pos] = j;
        return true;
      }
    }
    return false;
  };

  for (size_t pos = 0; pos < s.size(); ++pos) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!try_match(try_match, static_cast<int>(pos))) return std::nullopt;
  }
  return matched_to;
}

ExplicitMatroid::ExplicitMatroid(int ground, std::vector<ElementSet> independent_sets)
    : ground_(ground) {
  if (ground < 0 || ground > 12) {
    throw std::invalid_argument("explicit matroid: ground size must be in [0, 12]");
  }
  for (auto& s : independent_sets) {
    family_.insert(detail::canonical(s, ground_));
  }
  if (!family_.count(ElementSet{})) {
    throw std::invalid_argument("explicit matroid: family must contain the empty set");
  }
  // Downward closure: removing any single element keeps the set in the family.
  for (const auto& s : family_) {
    for (size_t i = 0; i < s.size(); ++i) {
      ElementSet sub;
      sub.reserve(s.size() - 1);
      for (size_t j = 0; j < s.size(); ++j) {
        if (j != i) sub.push_back(s[j]);
      }
      if (!family_.count(sub)) {
        throw std::invalid_argument("explicit matroid: family not downward closed");
      }
    }
  }
  // Exchange on all ordered pairs.
  for (const auto& small : family_) {
    for (const auto& big : family_) {
      if (big.size() <= small.size()) continue;
      bool found = false;
      for (int e : big) {
        if (std::binary_search(small.begin(), small.end(), e)) continue;
        ElementSet grown = small;
        grown.insert(std::lower_bound(grown.begin(), grown.end(), e), e);
        if (family_.count(grown)) {
          found = true;
          break;
        }
      }
      if (!found) {
        throw std::invalid_argument("explicit matroid: exchange axiom fails");
      }
    }
  }
}

bool ExplicitMatroid::is_independent(std::span<const int> set) const {
  return family_.count(detail::canonical(set, ground_)) > 0;
}

int rank(const MatroidOracle& m) {
  ElementSet current;
  for (int e = 0; e < m.ground_size(); ++e) {
    current.push_back(e);
    if (!m.is_independent(current)) current.pop_back();
  }
  return static_cast<int>(current.size());
}

std::optional<int> extend(const MatroidOracle& m, const ElementSet& independent,
                          const ElementSet& candidates) {
  if (!m.is_independent(independent)) {
    throw std::invalid_argument("extend: the given set is not independent");
  }
  ElementSet base = detail::canonical(independent, m.ground_size());
  ElementSet cands = detail::canonical(candidates, m.ground_size());
  for (int e : cands) {
    if (std::binary_search(base.begin(), base.end(), e)) continue;
    ElementSet grown = base;
    grown.insert(std::lower_bound(grown.begin(), grown.end(), e), e);
    if (m.is_independent(grown)) return e;
  }
  return std::nullopt;
}

}  // namespace rmc
