#include "rmc/solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace rmc {

GreedyRun greedy_fixed_radius(const MetricInstance& inst, const MatroidOracle& base,
                              double r) {
  if (r < 0.0) throw std::invalid_argument("radius guess must be nonnegative");
  const int n = inst.n;
  const int target_rank = rank(base);

  RadoSystem sys = build_relax(inst, base, r);
  RadoIncrementalContext ctx(sys);

  GreedyRun run;
  run.r = r;
  std::vector<char> uncovered(static_cast<size_t>(n), 1);

  for (int iter = 0; iter < target_rank; ++iter) {
    // Coverage each candidate would add at radius r, over uncovered points.
    std::vector<int> candidates;
    std::vector<double> gain(static_cast<size_t>(n), 0.0);
    candidates.reserve(n);
    for (int t = 0; t < n; ++t) {
      bool picked_before = std::find(run.centers_relaxed.begin(),
                                     run.centers_relaxed.end(),
                                     t) != run.centers_relaxed.end();
      if (picked_before) continue;
      double cov = 0.0;
      for (int v = 0; v < n; ++v) {
        if (uncovered[v] && inst.d(t, v) <= r) cov += inst.weights[v];
      }
      gain[t] = cov;
      candidates.push_back(t);
    }
    // Probe best-coverage-first (ties to the smaller index); the first
    // candidate the relaxed matroid accepts is the argmax.
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      if (gain[a] != gain[b]) return gain[a] > gain[b];
      return a < b;
    });

    std::uint64_t probes_before = ctx.probe_count();
    int picked = -1;
    for (int t : candidates) {
      if (ctx.try_extend(t)) {
        picked = t;
        break;
      }
    }
    if (picked == -1) {
      // The relaxation has the same rank as the base matroid, so a correct
      // oracle always admits another element here.
      throw std::logic_error(
          "greedy stalled below the matroid rank; the independence oracle is "
          "inconsistent");
    }

    GreedyStep step;
    step.picked = picked;
    step.marginal_weight = gain[picked];
    step.probes = ctx.probe_count() - probes_before;
    run.centers_relaxed.push_back(picked);

    double removal = 3.0 * r;
    int remaining = 0;
    for (int v = 0; v < n; ++v) {
      if (uncovered[v] && inst.d(picked, v) <= removal) uncovered[v] = 0;
      remaining += uncovered[v];
    }
    step.uncovered_after = remaining;
    run.trace.push_back(step);
  }

  run.rep_map = representatives(sys, run.centers_relaxed);
  run.representatives.reserve(run.rep_map.size());
  for (const auto& [t, rep] : run.rep_map) run.representatives.push_back(rep);
  std::sort(run.representatives.begin(), run.representatives.end());
  run.covered_weight_5r = ball_union_weight(inst, run.representatives, 5.0 * r);
  return run;
}

Solution solution_from_run(const MetricInstance& inst, const GreedyRun& run) {
  Solution sol;
  sol.r = run.r;
  sol.radius = 5.0 * run.r;
  sol.centers = run.representatives;
  sol.rep_map = run.rep_map;
  sol.covered_weight = run.covered_weight_5r;
  sol.feasible = sol.covered_weight >= inst.coverage_target;
  sol.trace = run.trace;
  sol.centers_relaxed = run.centers_relaxed;
  return sol;
}

SearchResult search_radius(const MetricInstance& inst, const MatroidOracle& base) {
  RadiusList radii = candidate_radii(inst);
  const int q = static_cast<int>(radii.size());

  std::map<int, GreedyRun> memo;
  auto run_at = [&](int idx) -> const GreedyRun& {
    auto it = memo.find(idx);
    if (it == memo.end()) {
      it = memo.emplace(idx, greedy_fixed_radius(inst, base, radii[idx])).first;
    }
    return it->second;
  };
  auto success = [&](int idx) {
    return run_at(idx).covered_weight_5r >= inst.coverage_target;
  };

  SearchResult result;
  if (success(0)) {
    result.solution = solution_from_run(inst, run_at(0));
  } else if (!success(q - 1)) {
    // Even the largest distance fails, which certifies that no independent
    // set reaches the coverage target at any radius.
    result.solution = solution_from_run(inst, run_at(q - 1));
  } else {
    // success is not monotone in general; bisect towards any adjacent
    // fail/success pair, which is all the guarantee needs.
    int lo = 0, hi = q - 1;
    while (hi - lo > 1) {
      int mid = lo + (hi - lo) / 2;
      if (success(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    result.solution = solution_from_run(inst, run_at(hi));
  }
  result.radius_probes = static_cast<int>(memo.size());
  return result;
}

bool VerifyReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

VerifyReport verify_solution(const MetricInstance& inst, const MatroidOracle& base,
                             const Solution& sol) {
  VerifyReport report;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  bool indices_ok = base.ground_size() == inst.n;
  std::string index_detail =
      indices_ok ? "" : "matroid ground size does not match the instance";
  auto in_range = [&](int v) { return v >= 0 && v < inst.n; };
  for (int c : sol.centers) {
    if (!in_range(c)) {
      indices_ok = false;
      index_detail = "center index " + std::to_string(c) + " out of range";
    }
  }
  for (const auto& [t, rep] : sol.rep_map) {
    if (!in_range(t) || !in_range(rep)) {
      indices_ok = false;
      index_detail = "representative pair (" + std::to_string(t) + ", " +
                     std::to_string(rep) + ") out of range";
    }
  }
  add("indices_in_range", indices_ok, index_detail);
  if (!indices_ok) {
    add("centers_independent", false, "skipped: invalid indices");
    add("coverage_recomputed", false, "skipped: invalid indices");
    add("radius_is_5r", false, "skipped: invalid indices");
    add("feasible_flag", false, "skipped: invalid indices");
    add("rep_map_valid", false, "skipped: invalid indices");
    return report;
  }

  add("centers_independent", base.is_independent(sol.centers));

  double recomputed = ball_union_weight(inst, sol.centers, sol.radius);
  add("coverage_recomputed", recomputed == sol.covered_weight,
      recomputed == sol.covered_weight
          ? ""
          : "recomputed " + std::to_string(recomputed) + ", claimed " +
                std::to_string(sol.covered_weight));

  add("radius_is_5r", sol.radius == 5.0 * sol.r);

  bool flag_ok = sol.feasible == (sol.covered_weight >= inst.coverage_target);
  add("feasible_flag", flag_ok);

  bool rep_ok = sol.rep_map.size() == sol.centers.size();
  std::string rep_detail = rep_ok ? "" : "map size does not match center count";
  ElementSet image;
  std::vector<int> sources;
  for (const auto& [t, rep] : sol.rep_map) {
    image.push_back(rep);
    sources.push_back(t);
    if (inst.d(t, rep) > 2.0 * sol.r) {
      rep_ok = false;
      rep_detail = "representative of " + std::to_string(t) + " is farther than 2r";
    }
  }
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    rep_ok = false;
    rep_detail = "representatives are not distinct";
  }
  std::sort(sources.begin(), sources.end());
  if (std::adjacent_find(sources.begin(), sources.end()) != sources.end()) {
    rep_ok = false;
    rep_detail = "duplicate source in representative map";
  }
  ElementSet centers_sorted = sol.centers;
  std::sort(centers_sorted.begin(), centers_sorted.end());
  if (rep_ok && image != centers_sorted) {
    rep_ok = false;
    rep_detail = "map image does not equal the center set";
  }
  add("rep_map_valid", rep_ok, rep_detail);

  return report;
}

}  // namespace rmc
