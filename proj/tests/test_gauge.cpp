#include "qtower/errors.hpp"
#include "qtower/gauge.hpp"

#include <doctest.h>

#include <random>

using namespace qtower;

namespace {

EMProduct type_of(const std::string &spec, int max = 40) {
  return rational_type(GroupSpec::parse(spec), max);
}

GradedDims sphere(int m) { return GradedDims{{0, 1}, {m, 1}}; }

const std::vector<std::string> kCatalog = {
    "so:5",      "spin:7",     "spin:8",       "spin:9<8>",   "spin:16<12>",
    "spinpq:7,9", "stableO",    "stableO<8>",   "string",      "fivebrane",
    "twospin",   "ninebrane",  "fivebrane:11", "e8",          "e8<4>"};

} // namespace

TEST_CASE("master formula examples") {
  // stable Spin over S4: pi_3 picks up pi_3 and pi_7 of the group
  CHECK(gauge_pi(type_of("stableO", 24), sphere(4), false, 3) == 2);
  CHECK(gauge_pi(type_of("stableO", 24), sphere(4), false, 0) == 0);
  // String has no pi_3, so only pi_7 contributes
  CHECK(gauge_pi(type_of("string", 24), sphere(4), false, 3) == 1);
  auto g = type_of("spin:8");
  for (int q = 0; q <= 12; ++q)
    CHECK(gauge_pi(g, GradedDims{{0, 1}}, false, q) == g.multiplicity(q));
}

TEST_CASE("sphere case agrees with the master formula") {
  for (const auto &spec : kCatalog) {
    auto g = type_of(spec, 40);
    for (int m = 1; m <= 16; ++m)
      for (int n = 0; n <= 16 && n + m <= g.exact_through(); ++n)
        CHECK_MESSAGE(sphere_case(m, g, n) == gauge_pi(g, sphere(m), false, n),
                      spec << " m=" << m << " n=" << n);
  }
  CHECK(sphere_case(4, type_of("stableO", 24), 3) == 2);
  CHECK(sphere_case(8, EMProduct{11, 15}, 3) == 1);
  CHECK(sphere_case(8, EMProduct{15}, 3) == 0);
  CHECK(sphere_case(4, type_of("spin:7"), 30) == 0);
}

TEST_CASE("based and unbased differ by the degree zero term") {
  std::mt19937 rng(51);
  std::uniform_int_distribution<int> b(0, 3);
  for (const auto &spec : kCatalog) {
    auto g = type_of(spec, 40);
    GradedDims base{{0, 1}};
    for (int d = 2; d <= 10; ++d)
      base.set(d, b(rng));
    for (int q = 0; q + 10 <= g.exact_through() && q <= 20; ++q)
      CHECK(gauge_pi(g, base, false, q) - gauge_pi(g, base, true, q) ==
            g.multiplicity(q));
  }
}

TEST_CASE("periodicity on stable groups") {
  std::mt19937 rng(52);
  std::uniform_int_distribution<int> b(0, 3);
  for (std::string spec : {"stableO", "string", "fivebrane", "twospin", "ninebrane",
                           "stableO<8>"}) {
    auto gs = GroupSpec::parse(spec);
    auto g = rational_type(gs, 48);
    int k = gs.cover_level ? gs.cover_level : family_cover_level(gs.family);
    for (int trial = 0; trial < 10; ++trial) {
      GradedDims base{{0, 1}};
      for (int d = 2; d <= 12; ++d)
        base.set(d, b(rng));
      GaugeQuery q{g, base, trial % 2 == 1, 0, 48 - 12};
      CHECK_MESSAGE(periodicity_check(q, k), spec);
    }
  }
  // a finite unstable type breaks the pattern
  GaugeQuery finite{EMProduct{3, 7}, GradedDims{{0, 1}}, false, 0, 20};
  CHECK_FALSE(periodicity_check(finite, 0));
}

TEST_CASE("window of truncated types") {
  auto g = type_of("stableO", 24);
  CHECK_THROWS_AS(gauge_pi(g, sphere(8), false, 17), Error);
  CHECK_NOTHROW(gauge_pi(g, sphere(8), false, 16));
  CHECK_THROWS_AS(sphere_case(8, g, 17), Error);
  CHECK_THROWS_AS(sphere_case(4, type_of("e8"), 12), Error);
}

TEST_CASE("connectivity") {
  // X a point: connectivity is that of the group
  auto c = connectivity(EMProduct{11, 15}, GradedDims{{0, 1}}, false);
  CHECK(c.value == 10);
  // bound k - n for k-connected G over n-dimensional X
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> b(0, 2);
  for (const auto &spec : kCatalog) {
    auto g = type_of(spec, 40);
    int k = g.empty() ? 40 : g.degrees().front() - 1;
    for (int trial = 0; trial < 10; ++trial) {
      GradedDims base{{0, 1}};
      int n = 2 + trial;
      for (int d = 2; d <= n; ++d)
        base.set(d, b(rng));
      base.set(n, 1);
      auto cn = connectivity(g, base, false);
      CHECK(cn.value >= std::min(k - n, cn.window));
    }
  }
}

TEST_CASE("string, fivebrane and ninebrane gauge groups are 3-connected") {
  std::mt19937 rng(54);
  std::uniform_int_distribution<int> b(0, 2);
  std::vector<std::pair<std::string, int>> cases = {
      {"string", 3}, {"fivebrane", 7}, {"ninebrane", 11}};
  for (const auto &[spec, dim] : cases) {
    auto g = type_of(spec, 32);
    for (int trial = 0; trial < 20; ++trial) {
      GradedDims base{{0, 1}};
      for (int d = 1; d <= dim; ++d)
        base.set(d, b(rng));
      for (bool based : {false, true}) {
        auto c = connectivity(g, base, based);
        CHECK(c.value >= 3);
        for (int q = 0; q <= 3; ++q)
          CHECK(gauge_pi(g, base, based, q) == 0);
      }
    }
  }
}

TEST_CASE("e8 over a 3-connected base") {
  auto e8 = type_of("e8");
  // open 12-manifold retracting onto HP2
  GradedDims open{{0, 1}, {4, 1}, {8, 1}};
  CHECK(connectivity(e8, open, true).value >= 3);
  CHECK(connectivity(type_of("e8<4>"), open, true).value >= 3);
  // a closed one has H12 = Q and pi_3 picks up pi_15 of E8
  GradedDims closed{{0, 1}, {4, 1}, {8, 1}, {12, 1}};
  CHECK(gauge_pi(e8, closed, true, 3) == 1);
  CHECK(connectivity(e8, closed, true).value == 2);
}

TEST_CASE("universal bundle") {
  auto bgens = bcohomology_generators(GroupSpec::parse("bstableO"), 32);
  auto g = type_of("stableO", 32);
  CHECK(universal_bundle_pi(bgens, g, 1) == 0);
  CHECK(universal_bundle_pi(bgens, g, 2) == 0);
  CHECK(universal_bundle_pi(bgens, g, 5) == 0);
  CHECK(universal_bundle_pi(bgens, g, 3) >= 1);
  for (int q = 0; q <= 20; ++q)
    if (q % 4 != 3)
      CHECK(universal_bundle_pi(bgens, g, q) == 0);
  // q = 3 counts monomials of degree 4j paired with pi_{4j+3}, r + 3 <= 32
  auto dims = poincare_dims(FreeGCA(bgens), 32);
  long expect = 0;
  for (int r = 0; r + 3 <= 32; r += 4)
    expect += dims.at(r);
  CHECK(universal_bundle_pi(bgens, g, 3) == expect);
}
