#include "rmc/intersection.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace rmc {

namespace {

ElementSet with_element(const ElementSet& sorted, int e) {
  ElementSet out = sorted;
  out.insert(std::lower_bound(out.begin(), out.end(), e), e);
  return out;
}

ElementSet swapped(const ElementSet& sorted, int out_elem, int in_elem) {
  ElementSet out;
  out.reserve(sorted.size());
  for (int e : sorted) {
    if (e != out_elem) out.push_back(e);
  }
  out.insert(std::lower_bound(out.begin(), out.end(), in_elem), in_elem);
  return out;
}

}  // namespace

IntersectionState::IntersectionState(const MatroidOracle& m1, const MatroidOracle& m2)
    : IntersectionState(m1, m2, ElementSet{}) {}

IntersectionState::IntersectionState(const MatroidOracle& m1, const MatroidOracle& m2,
                                     ElementSet start)
    : m1_(&m1), m2_(&m2) {
  if (m1.ground_size() != m2.ground_size()) {
    throw std::invalid_argument("matroid intersection: ground sizes differ");
  }
  current_ = detail::canonical(start, m1.ground_size());
  if (!m1.is_independent(current_) || !m2.is_independent(current_)) {
    throw std::invalid_argument(
        "matroid intersection: start set not independent in both matroids");
  }
}

bool IntersectionState::augment() {
  const int n = m1_->ground_size();
  std::vector<char> in_current(n, 0);
  for (int e : current_) in_current[e] = 1;

  // All oracle answers an augmentation step needs, computed once per call.
  std::vector<char> is_source(n, 0), is_target(n, 0);
  for (int y = 0; y < n; ++y) {
    if (in_current[y]) continue;
    ElementSet grown = with_element(current_, y);
    if (m1_->is_independent(grown)) is_source[y] = 1;
    if (m2_->is_independent(grown)) is_target[y] = 1;
  }

  // Exchange arcs. x in I, y outside: x->y when I-x+y stays independent in
  // the first matroid, y->x when it stays independent in the second.
  std::vector<std::vector<int>> adj(n);
  for (int x : current_) {
    for (int y = 0; y < n; ++y) {
      if (in_current[y]) continue;
      ElementSet ex = swapped(current_, x, y);
      if (m1_->is_independent(ex)) adj[x].push_back(y);
      if (m2_->is_independent(ex)) adj[y].push_back(x);
    }
  }
  for (auto& neighbors : adj) std::sort(neighbors.begin(), neighbors.end());

  // BFS from all sources in ascending order; the first dequeued target ends
  // the search, which makes the chosen shortest path deterministic.
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  for (int y = 0; y < n; ++y) {
    if (!in_current[y] && is_source[y]) {
      parent[y] = -1;
      queue.push_back(y);
    }
  }
  int dest = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (!in_current[u] && is_target[u]) {
      dest = u;
      break;
    }
    for (int v : adj[u]) {
      if (parent[v] == -2) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (dest == -1) return false;  // current is maximum

  // Flip membership along the path: outside elements enter, inside leave.
  ElementSet next;
  std::vector<char> on_path(n, 0);
  for (int u = dest; u != -1; u = parent[u]) on_path[u] = 1;
  for (int e = 0; e < n; ++e) {
    if (in_current[e] != on_path[e]) next.push_back(e);
  }

  if (!m1_->is_independent(next) || !m2_->is_independent(next) ||
      next.size() != current_.size() + 1) {
    throw OracleInconsistencyError(
        "augmenting path application violated independence; an oracle is not a "
        "matroid");
  }
  current_ = std::move(next);
  return true;
}

ElementSet max_common_independent(const MatroidOracle& m1, const MatroidOracle& m2) {
  IntersectionState state(m1, m2);
  while (state.augment()) {
  }
  return state.current();
}

}  // namespace rmc
