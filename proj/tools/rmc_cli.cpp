#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmc/exact.hpp"
#include "rmc/generator.hpp"
#include "rmc/instance_io.hpp"
#include "rmc/matroid.hpp"
#include "rmc/solver.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

// Shortest round-trip formatting, same as the JSON emitter, so CSV cells are
// stable across runs.
std::string num(double v) { return json(v).dump(); }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

struct SolveOptions {
  std::string instance_path;
  std::string out_path;
  bool validate = false;
  bool trace = false;
  bool timing = false;
  std::optional<double> fixed_r;
};

int run_solve(const SolveOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  rmc::ParsedInstance parsed = rmc::load_instance_file(opt.instance_path);
  if (opt.validate) {
    auto violations = rmc::validate_metric(parsed.metric);
    if (!violations.empty()) {
      for (const auto& v : violations) {
        std::cerr << "metric violation: " << v.describe() << "\n";
      }
      return kExitInputError;
    }
  }

  rmc::CountingOracle counted(*parsed.matroid);
  rmc::Solution sol;
  int radius_probes = 0;
  if (opt.fixed_r) {
    if (*opt.fixed_r < 0.0) {
      std::cerr << "error: --fixed-r must be nonnegative\n";
      return kExitInputError;
    }
    rmc::GreedyRun run =
        rmc::greedy_fixed_radius(parsed.metric, counted, *opt.fixed_r);
    sol = rmc::solution_from_run(parsed.metric, run);
    radius_probes = 1;
  } else {
    rmc::SearchResult result = rmc::search_radius(parsed.metric, counted);
    sol = result.solution;
    radius_probes = result.radius_probes;
  }

  std::uint64_t rado_probes = 0;
  for (const auto& step : sol.trace) rado_probes += step.probes;

  json report;
  report["format"] = 1;
  report["solution"] = rmc::solution_to_json(sol, opt.trace);
  json instr;
  instr["radius_probes"] = radius_probes;
  instr["greedy_iterations"] = sol.trace.size();
  instr["rado_probes"] = rado_probes;
  instr["base_oracle_calls"] = counted.calls();
  if (opt.timing) instr["wall_ms"] = elapsed_ms(start);
  report["instrumentation"] = instr;

  emit(report.dump(2) + "\n", opt.out_path);
  return sol.feasible ? kExitOk : kExitInfeasible;
}

struct ExactOptions {
  std::string instance_path;
  std::string out_path;
  std::uint64_t max_enum = rmc::kDefaultEnumerationCap;
  bool timing = false;
};

int run_exact(const ExactOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  rmc::ParsedInstance parsed = rmc::load_instance_file(opt.instance_path);
  rmc::ExactResult result = rmc::exact_solve(parsed.metric, *parsed.matroid, opt.max_enum);

  json doc;
  doc["format"] = 1;
  json exact;
  exact["feasible"] = result.feasible;
  if (result.feasible) {
    exact["opt_radius"] = result.opt_radius;
    exact["witness"] = result.witness;
  }
  exact["radii"] = result.radii;
  exact["best_coverage"] = result.best_coverage;
  doc["exact"] = exact;
  if (opt.timing) doc["wall_ms"] = elapsed_ms(start);

  emit(doc.dump(2) + "\n", opt.out_path);
  return result.feasible ? kExitOk : kExitInfeasible;
}

struct GenOptions {
  rmc::GenSpec spec;
  std::string out_path;
};

int run_gen(const GenOptions& opt) {
  json doc = rmc::generate_instance(opt.spec);
  emit(doc.dump(2) + "\n", opt.out_path);
  return kExitOk;
}

int run_verify(const std::string& instance_path, const std::string& solution_path) {
  rmc::ParsedInstance parsed = rmc::load_instance_file(instance_path);
  rmc::Solution sol = rmc::load_solution_file(solution_path);
  rmc::VerifyReport report = rmc::verify_solution(parsed.metric, *parsed.matroid, sol);
  for (const auto& check : report.checks) {
    std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
    if (!check.detail.empty()) std::cout << ": " << check.detail;
    std::cout << "\n";
  }
  return report.all_pass() ? kExitOk : kExitInfeasible;
}

struct BenchOptions {
  std::string corpus_dir;
  std::string out_path;
  std::uint64_t max_enum = rmc::kDefaultEnumerationCap;
  bool timing = false;
};

int run_bench(const BenchOptions& opt) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(opt.corpus_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::ostringstream csv;
  csv << "file,n,rank,opt,radius,ratio,base_oracle_calls,rado_probes,radius_probes,"
         "ms,error\n";
  bool guarantee_violated = false;
  bool counters_violated = false;

  for (const auto& path : files) {
    const std::string name = path.filename().string();
    try {
      auto start = std::chrono::steady_clock::now();
      rmc::ParsedInstance parsed = rmc::load_instance_file(path.string());
      rmc::CountingOracle counted(*parsed.matroid);
      int base_rank = rmc::rank(counted);
      rmc::SearchResult result = rmc::search_radius(parsed.metric, counted);
      const rmc::Solution& sol = result.solution;

      // Counter sanity on every run: rank many iterations, at most |X|
      // probes each.
      if (static_cast<int>(sol.trace.size()) != base_rank) counters_violated = true;
      std::uint64_t rado_probes = 0;
      for (const auto& step : sol.trace) {
        if (step.probes > static_cast<std::uint64_t>(parsed.metric.n)) {
          counters_violated = true;
        }
        rado_probes += step.probes;
      }

      bool is_metric = rmc::validate_metric(parsed.metric).empty();
      std::string opt_cell, ratio_cell;
      try {
        rmc::ExactResult exact =
            rmc::exact_solve(parsed.metric, *parsed.matroid, opt.max_enum);
        if (exact.feasible) {
          opt_cell = num(exact.opt_radius);
          if (!sol.feasible) {
            // a solvable instance the search declared infeasible breaks the
            // guarantee outright
            ratio_cell = "inf";
            if (is_metric) guarantee_violated = true;
          } else if (exact.opt_radius > 0.0) {
            double ratio = sol.radius / exact.opt_radius;
            ratio_cell = num(ratio);
            if (is_metric && ratio > 5.0) guarantee_violated = true;
          } else {
            // optimum 0: the guarantee demands we match it exactly
            ratio_cell = sol.radius == 0.0 ? num(1.0) : "inf";
            if (is_metric && sol.radius != 0.0) guarantee_violated = true;
          }
        }
      } catch (const rmc::EnumerationLimitError&) {
        // instance too large for the exact reference; leave cells empty
      }

      csv << name << ',' << parsed.metric.n << ',' << base_rank << ',' << opt_cell
          << ',' << num(sol.radius) << ',' << ratio_cell << ',' << counted.calls()
          << ',' << rado_probes << ',' << result.radius_probes << ',';
      if (opt.timing) csv << num(elapsed_ms(start));
      csv << ",\n";
    } catch (const std::exception& e) {
      std::string message = e.what();
      for (char& c : message) {
        if (c == ',' || c == '\n') c = ';';
      }
      csv << name << ",,,,,,,,,," << message << "\n";
    }
  }

  emit(csv.str(), opt.out_path);
  if (guarantee_violated) {
    std::cerr << "error: approximation ratio exceeded 5.0 on a metric instance\n";
    return kExitInputError;
  }
  if (counters_violated) {
    std::cerr << "error: oracle-call accounting out of bounds (solver bug)\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust matroid center: greedy 5-approximation over a Rado relaxation"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  double fixed_r_value = 0.0;
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("instance", solve_opt.instance_path, "instance JSON file")
      ->required();
  solve->add_option("--out", solve_opt.out_path, "write the report here instead of stdout");
  solve->add_flag("--validate-metric", solve_opt.validate,
                  "reject instances that violate metric axioms");
  auto* fixed_flag = solve->add_option("--fixed-r", fixed_r_value,
                                       "run the fixed-radius greedy only");
  solve->add_flag("--trace", solve_opt.trace, "include the per-iteration trace");
  solve->add_flag("--timing", solve_opt.timing,
                  "include wall time (breaks byte-identical reruns)");

  ExactOptions exact_opt;
  auto* exact = app.add_subcommand("exact", "brute-force optimum for small instances");
  exact->add_option("instance", exact_opt.instance_path, "instance JSON file")
      ->required();
  exact->add_option("--out", exact_opt.out_path, "output file");
  exact->add_option("--max-enum", exact_opt.max_enum,
                    "cap on enumerated independent sets");
  exact->add_flag("--timing", exact_opt.timing, "include wall time");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--seed", gen_opt.spec.seed, "PRNG seed")->capture_default_str();
  gen->add_option("--n", gen_opt.spec.n, "number of points")->capture_default_str();
  gen->add_option("--geometry", gen_opt.spec.geometry, "graph | euclidean")
      ->capture_default_str();
  auto* dim_flag = gen->add_option("--dim", gen_opt.spec.dim,
                                   "dimension for euclidean geometry");
  gen->add_option("--weight-min", gen_opt.spec.weight_min, "minimum point weight")
      ->capture_default_str();
  gen->add_option("--weight-max", gen_opt.spec.weight_max, "maximum point weight")
      ->capture_default_str();
  double m_value = 0.0;
  auto* m_flag = gen->add_option("--m", m_value, "coverage target (default: random)");
  gen->add_option("--matroid", gen_opt.spec.matroid_type,
                  "uniform | partition | graphic | transversal")
      ->capture_default_str();
  int k_value = 0, classes_value = 0, vertices_value = 0, family_value = 0;
  auto* k_flag = gen->add_option("--k", k_value, "uniform matroid rank");
  auto* classes_flag =
      gen->add_option("--classes", classes_value, "partition class count");
  auto* vertices_flag =
      gen->add_option("--vertices", vertices_value, "graphic vertex count");
  auto* family_flag =
      gen->add_option("--family-size", family_value, "transversal family size");
  gen->add_option("--out", gen_opt.out_path, "output file");

  std::string verify_instance, verify_solution_path;
  auto* verify = app.add_subcommand("verify", "re-check a solution against an instance");
  verify->add_option("instance", verify_instance, "instance JSON file")->required();
  verify->add_option("solution", verify_solution_path, "solution JSON file")->required();

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "solve a directory of instances, CSV out");
  bench->add_option("corpus", bench_opt.corpus_dir, "directory of instance files")
      ->required();
  bench->add_option("--out", bench_opt.out_path, "output file");
  bench->add_option("--max-enum", bench_opt.max_enum,
                    "cap for the exact reference per instance");
  bench->add_flag("--timing", bench_opt.timing, "fill the ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*solve) {
      if (*fixed_flag) solve_opt.fixed_r = fixed_r_value;
      return run_solve(solve_opt);
    }
    if (*exact) return run_exact(exact_opt);
    if (*gen) {
      if (*dim_flag && gen_opt.spec.geometry != "euclidean") {
        std::cerr << "error: --dim only applies to euclidean geometry\n";
        return kExitInputError;
      }
      if (*k_flag && gen_opt.spec.matroid_type != "uniform") {
        std::cerr << "error: --k only applies to the uniform matroid\n";
        return kExitInputError;
      }
      if (*classes_flag && gen_opt.spec.matroid_type != "partition") {
        std::cerr << "error: --classes only applies to the partition matroid\n";
        return kExitInputError;
      }
      if (*vertices_flag && gen_opt.spec.matroid_type != "graphic") {
        std::cerr << "error: --vertices only applies to the graphic matroid\n";
        return kExitInputError;
      }
      if (*family_flag && gen_opt.spec.matroid_type != "transversal") {
        std::cerr << "error: --family-size only applies to the transversal matroid\n";
        return kExitInputError;
      }
      if (*m_flag) gen_opt.spec.coverage_target = m_value;
      if (*k_flag) gen_opt.spec.uniform_k = k_value;
      if (*classes_flag) gen_opt.spec.partition_classes = classes_value;
      if (*vertices_flag) gen_opt.spec.graphic_vertices = vertices_value;
      if (*family_flag) gen_opt.spec.transversal_family_size = family_value;
      return run_gen(gen_opt);
    }
    if (*verify) return run_verify(verify_instance, verify_solution_path);
    if (*bench) return run_bench(bench_opt);
  } catch (const rmc::EnumerationLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
