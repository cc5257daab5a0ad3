#include <doctest.h>

#include <algorithm>

#include "rmc/exact.hpp"
#include "rmc/rado.hpp"

#include "test_util.hpp"

using namespace rmc;

namespace {

// Random system: random base matroid plus random candidate sets.
RadoSystem random_system(rmc::Rng& rng, std::unique_ptr<MatroidOracle>& base_out,
                         int base_ground, int derived_ground) {
  base_out = testutil::random_matroid(rng, base_ground);
  RadoSystem sys;
  sys.base = base_out.get();
  sys.ground_size = derived_ground;
  sys.candidate_sets.resize(derived_ground);
  for (auto& cand : sys.candidate_sets) {
    for (int e = 0; e < base_ground; ++e) {
      if (rng.next_u64() % 2 == 0) cand.push_back(e);
    }
  }
  return sys;
}

}  // namespace

TEST_CASE("build_relax candidate sets are 2r balls") {
  MetricInstance inst = testutil::line_instance({0, 1, 2}, {1, 1, 1}, 3);
  UniformMatroid base(3, 1);

  RadoSystem at_zero = build_relax(inst, base, 0.0);
  CHECK(at_zero.candidate_sets[0] == std::vector<int>{0});
  CHECK(at_zero.candidate_sets[1] == std::vector<int>{1});
  CHECK(at_zero.candidate_sets[2] == std::vector<int>{2});

  RadoSystem half = build_relax(inst, base, 0.5);
  CHECK(half.candidate_sets[0] == std::vector<int>{0, 1});
  CHECK(half.candidate_sets[1] == std::vector<int>{0, 1, 2});
  CHECK(half.candidate_sets[2] == std::vector<int>{1, 2});

  // saturation once 2r reaches the diameter
  RadoSystem full = build_relax(inst, base, 1.0);
  for (const auto& cand : full.candidate_sets) {
    CHECK(cand == std::vector<int>{0, 1, 2});
  }

  UniformMatroid wrong(4, 1);
  CHECK_THROWS_AS(build_relax(inst, wrong, 1.0), std::invalid_argument);
}

TEST_CASE("rado independence basics") {
  MetricInstance inst = testutil::line_instance({0, 1, 2}, {1, 1, 1}, 3);
  UniformMatroid base(3, 2);
  RadoSystem sys = build_relax(inst, base, 0.0);
  CHECK(is_rado_independent(sys, ElementSet{}));
  // r = 0 with distinct points: coincides with the base matroid
  for (const auto& s : testutil::all_subsets(3)) {
    CHECK(is_rado_independent(sys, s) == base.is_independent(s));
  }
  CHECK_THROWS_AS(is_rado_independent(sys, ElementSet{3}), std::out_of_range);
}

TEST_CASE("rado independence agrees with injection enumeration") {
  rmc::Rng rng(616);
  for (int trial = 0; trial < 80; ++trial) {
    std::unique_ptr<MatroidOracle> base;
    RadoSystem sys = random_system(rng, base, rng.uniform_int(1, 7),
                                   rng.uniform_int(1, 4));
    for (const auto& j : testutil::all_subsets(sys.ground_size)) {
      CHECK(is_rado_independent(sys, j) == exhaustive_rado_check(sys, j));
    }
  }
}

TEST_CASE("representatives of the empty set and of identity systems") {
  MetricInstance inst = testutil::line_instance({0, 2, 4}, {1, 1, 1}, 3);
  UniformMatroid base(3, 2);
  RadoSystem sys = build_relax(inst, base, 0.0);
  CHECK(representatives(sys, ElementSet{}).empty());
  RepresentativeMap map = representatives(sys, ElementSet{0, 2});
  REQUIRE(map.size() == 2);
  CHECK(map[0] == std::pair<int, int>{0, 0});
  CHECK(map[1] == std::pair<int, int>{2, 2});
}

TEST_CASE("representatives rejects dependent requests with a distinct error") {
  MetricInstance inst = testutil::line_instance({0, 1, 2}, {1, 1, 1}, 3);
  UniformMatroid base(3, 1);
  RadoSystem sys = build_relax(inst, base, 0.0);
  CHECK_THROWS_AS(representatives(sys, ElementSet{0, 1}), NoRepresentativesError);
}

TEST_CASE("representative maps satisfy all three invariants on random systems") {
  rmc::Rng rng(1234);
  int validated = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::unique_ptr<MatroidOracle> base;
    RadoSystem sys = random_system(rng, base, rng.uniform_int(1, 7),
                                   rng.uniform_int(1, 4));
    for (const auto& j : testutil::all_subsets(sys.ground_size)) {
      bool independent = is_rado_independent(sys, j);
      CHECK(independent == exhaustive_rado_check(sys, j));
      if (!independent) {
        CHECK_THROWS_AS(representatives(sys, j), NoRepresentativesError);
        continue;
      }
      RepresentativeMap map = representatives(sys, j);
      ++validated;
      REQUIRE(map.size() == j.size());
      ElementSet image;
      for (size_t i = 0; i < map.size(); ++i) {
        auto [y, rep] = map[i];
        CHECK(y == j[i]);
        const auto& cand = sys.candidate_sets[y];
        CHECK(std::find(cand.begin(), cand.end(), rep) != cand.end());
        image.push_back(rep);
      }
      std::sort(image.begin(), image.end());
      CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
      CHECK(base->is_independent(image));
    }
  }
  CHECK(validated > 100);  // the sweep must not be vacuous
}

TEST_CASE("rado family axioms hold exhaustively on small systems") {
  rmc::Rng rng(909);
  for (int trial = 0; trial < 20; ++trial) {
    std::unique_ptr<MatroidOracle> base;
    RadoSystem sys = random_system(rng, base, rng.uniform_int(1, 6),
                                   rng.uniform_int(1, 6));
    RadoMatroidOracle oracle(sys);
    CHECK(testutil::check_empty_independent(oracle));
    CHECK(testutil::check_downward_closed(oracle));
    CHECK(testutil::check_exchange(oracle));
  }
}

TEST_CASE("relaxation keeps base-independent sets and preserves the rank") {
  rmc::Rng rng(111);
  for (int trial = 0; trial < 30; ++trial) {
    auto parsed = testutil::random_instance(rng.next_u64() % 100000, 7, "uniform");
    const auto& inst = parsed.metric;
    RadiusList radii = candidate_radii(inst);
    double r = radii[rng.uniform_int(0, static_cast<int>(radii.size()) - 1)];
    RadoSystem sys = build_relax(inst, *parsed.matroid, r);
    RadoMatroidOracle oracle(sys);
    for (const auto& s : testutil::all_subsets(inst.n)) {
      if (parsed.matroid->is_independent(s)) {
        CHECK(oracle.is_independent(s));
      }
    }
    CHECK(rank(oracle) == rank(*parsed.matroid));
  }
}

TEST_CASE("rado independence is monotone in the radius") {
  auto parsed = testutil::random_instance(77, 7, "partition");
  const auto& inst = parsed.metric;
  RadiusList radii = candidate_radii(inst);
  for (size_t ri = 1; ri < radii.size(); ++ri) {
    RadoSystem lo = build_relax(inst, *parsed.matroid, radii[ri - 1]);
    RadoSystem hi = build_relax(inst, *parsed.matroid, radii[ri]);
    for (const auto& s : testutil::all_subsets(inst.n)) {
      if (is_rado_independent(lo, s)) CHECK(is_rado_independent(hi, s));
    }
  }
}

TEST_CASE("incremental context accepts and rejects like the stateless oracle") {
  rmc::Rng rng(3210);
  for (int trial = 0; trial < 200; ++trial) {
    std::unique_ptr<MatroidOracle> base;
    RadoSystem sys = random_system(rng, base, rng.uniform_int(1, 6),
                                   rng.uniform_int(1, 5));
    RadoIncrementalContext ctx(sys);
    ElementSet accepted;
    int calls = rng.uniform_int(1, 10);
    for (int c = 0; c < calls; ++c) {
      int t = rng.uniform_int(0, sys.ground_size - 1);
      ElementSet grown = accepted;
      if (std::find(grown.begin(), grown.end(), t) == grown.end()) {
        grown.push_back(t);
      }
      bool expected = is_rado_independent(sys, grown);
      bool actual = ctx.try_extend(t);
      CHECK(actual == expected);
      if (actual) accepted = grown;
    }
    ElementSet members = ctx.members();
    std::sort(members.begin(), members.end());
    std::sort(accepted.begin(), accepted.end());
    CHECK(members == accepted);
  }
}

TEST_CASE("incremental context hits the rank cap") {
  MetricInstance inst = testutil::line_instance({0, 1, 2, 3}, {1, 1, 1, 1}, 4);
  UniformMatroid base(4, 2);
  RadoSystem sys = build_relax(inst, base, 2.0);  // 2r = 4 covers everything
  RadoIncrementalContext ctx(sys);
  CHECK(ctx.try_extend(0));
  CHECK(ctx.try_extend(1));
  CHECK_FALSE(ctx.try_extend(2));  // rank(base) = 2 caps the relaxation
  CHECK_FALSE(ctx.try_extend(3));
  CHECK(ctx.probe_count() == 4);
}
