#include "rmc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rmc {

namespace {

void check_point(const MetricInstance& inst, int p) {
  if (p < 0 || p >= inst.n) {
    throw std::out_of_range("point index " + std::to_string(p) +
                            " outside [0, " + std::to_string(inst.n) + ")");
  }
}

}  // namespace

double MetricInstance::total_weight() const {
  double sum = 0.0;
  for (double w : weights) sum += w;
  return sum;
}

std::string MetricViolation::describe() const {
  char buf[128];
  switch (kind) {
    case Kind::Diagonal:
      std::snprintf(buf, sizeof(buf), "d(%d,%d) = %g, expected 0", i, i, magnitude);
      break;
    case Kind::Symmetry:
      std::snprintf(buf, sizeof(buf), "d(%d,%d) != d(%d,%d), gap %g", i, j, j, i,
                    magnitude);
      break;
    case Kind::Triangle:
      std::snprintf(buf, sizeof(buf), "d(%d,%d) > d(%d,%d) + d(%d,%d) by %g", i, j,
                    i, k, k, j, magnitude);
      break;
  }
  return buf;
}

std::vector<int> ball(const MetricInstance& inst, int center, double radius) {
  check_point(inst, center);
  if (radius < 0.0) throw std::invalid_argument("ball radius must be nonnegative");
  std::vector<int> out;
  for (int v = 0; v < inst.n; ++v) {
    if (inst.d(center, v) <= radius) out.push_back(v);
  }
  return out;
}

double ball_union_weight(const MetricInstance& inst, std::span<const int> centers,
                         double radius) {
  std::vector<char> covered(static_cast<size_t>(inst.n), 0);
  for (int c : centers) {
    check_point(inst, c);
    for (int v = 0; v < inst.n; ++v) {
      if (inst.d(c, v) <= radius) covered[v] = 1;
    }
  }
  double sum = 0.0;
  for (int v = 0; v < inst.n; ++v) {
    if (covered[v]) sum += inst.weights[v];
  }
  return sum;
}

RadiusList candidate_radii(const MetricInstance& inst) {
  RadiusList values;
  values.reserve(static_cast<size_t>(inst.n) * (inst.n - 1) / 2 + 1);
  values.push_back(0.0);
  for (int i = 0; i < inst.n; ++i) {
    for (int j = i + 1; j < inst.n; ++j) {
      values.push_back(inst.d(i, j));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<MetricViolation> validate_metric(MetricInstance& inst) {
  std::vector<MetricViolation> out;
  for (int i = 0; i < inst.n; ++i) {
    if (inst.d(i, i) != 0.0) {
      out.push_back({MetricViolation::Kind::Diagonal, i, i, i, inst.d(i, i)});
    }
  }
  for (int i = 0; i < inst.n; ++i) {
    for (int j = i + 1; j < inst.n; ++j) {
      if (inst.d(i, j) != inst.d(j, i)) {
        out.push_back({MetricViolation::Kind::Symmetry, i, j, j,
                       std::abs(inst.d(i, j) - inst.d(j, i))});
      }
    }
  }
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      for (int k = 0; k < inst.n; ++k) {
        if (i == j || j == k || i == k) continue;
        double slack = inst.d(i, j) - inst.d(i, k) - inst.d(k, j);
        if (slack > kTriangleTolerance) {
          out.push_back({MetricViolation::Kind::Triangle, i, j, k, slack});
        }
      }
    }
  }
  if (out.empty()) inst.metric_checked = true;
  return out;
}

}  // namespace rmc
