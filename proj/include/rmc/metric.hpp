#pragma once

#include <span>
#include <string>
#include <vector>

namespace rmc {

// Finite metric space over point indices 0..n-1 with per-point weights and a
// coverage target m. Distances live in an explicit n*n matrix (row-major);
// instances built from coordinates are expanded to a matrix before they get
// here. Immutable after construction as far as the algorithms are concerned.
struct MetricInstance {
  int n = 0;
  std::vector<double> dist;     // n*n, symmetric, zero diagonal
  std::vector<double> weights;  // length n, nonnegative
  double coverage_target = 0.0;
  // Set by validate_metric when no violations are found. The solver runs on
  // unvalidated input, but the approximation guarantee is only claimed for
  // genuine metrics.
  bool metric_checked = false;

  double d(int i, int j) const { return dist[static_cast<size_t>(i) * n + j]; }
  double total_weight() const;
};

// Sorted, deduplicated pairwise distances with 0 always present at the front.
using RadiusList = std::vector<double>;

struct MetricViolation {
  enum class Kind { Diagonal, Symmetry, Triangle };
  Kind kind;
  // Diagonal: (i,i,i). Symmetry: (i,j,j). Triangle: d(i,j) > d(i,k) + d(k,j).
  int i = 0, j = 0, k = 0;
  double magnitude = 0.0;

  std::string describe() const;
};

// Closed ball {v : d(center,v) <= radius}, ascending indices.
std::vector<int> ball(const MetricInstance& inst, int center, double radius);

// Weight of the union of closed balls around `centers`, each point counted
// once, summed in ascending point-index order.
double ball_union_weight(const MetricInstance& inst, std::span<const int> centers,
                         double radius);

RadiusList candidate_radii(const MetricInstance& inst);

// Exhaustive O(n^3) check. Diagonal and symmetry are exact; the triangle
// inequality is allowed absolute slack 1e-9. An empty result marks the
// instance as checked.
std::vector<MetricViolation> validate_metric(MetricInstance& inst);

inline constexpr double kTriangleTolerance = 1e-9;

}  // namespace rmc
