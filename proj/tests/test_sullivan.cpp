#include "qtower/errors.hpp"
#include "qtower/sullivan.hpp"

#include <doctest.h>

using namespace qtower;

namespace {

// Independent cohomology count: build the full cochain complex through
// max+1 by hand and eliminate, without differential_matrix.
GradedDims brute_cohomology(const CDGA &c, int max) {
  const auto &alg = c.algebra();
  std::vector<long> rk(max + 2, 0);
  for (int n = 0; n <= max; ++n) {
    auto src = alg.basis_in_degree(n);
    auto dst = alg.basis_in_degree(n + 1);
    std::vector<RatVector> cols;
    for (const auto &m : src) {
      Polynomial dp = differential_extend(c, alg.monomial(m));
      RatVector v(dst.size());
      for (std::size_t i = 0; i < dst.size(); ++i)
        v[i] = dp.coefficient(dst[i]);
      cols.push_back(v);
    }
    rk[n] = static_cast<long>(span_dim(dst.size(), cols));
  }
  GradedDims out;
  for (int n = 0; n <= max; ++n) {
    long dim = static_cast<long>(alg.basis_in_degree(n).size());
    out.set(n, dim - rk[n] - (n > 0 ? rk[n - 1] : 0));
  }
  return out;
}

} // namespace

TEST_CASE("differential extension") {
  FreeGCA alg({{"x4", 4}, {"sy4", 3}});
  CDGA c(alg, {{"sy4", alg.generator("x4")}});
  CHECK(differential_extend(c, alg.generator("sy4")) == alg.generator("x4"));
  auto prod = multiply(alg.generator("x4"), alg.generator("sy4"));
  CHECK(differential_extend(c, prod) ==
        multiply(alg.generator("x4"), alg.generator("x4")));
  CHECK(differential_extend(c, alg.one()).is_zero());
  CHECK(d_squared_check(c, 20));
}

TEST_CASE("degree check on differentials") {
  FreeGCA alg({{"x4", 4}, {"y3", 3}});
  CHECK_THROWS_AS(CDGA(alg, {{"y3", alg.generator("y3")}}), std::invalid_argument);
}

TEST_CASE("corrupted model fails the d squared check") {
  FreeGCA alg({{"x4", 4}, {"sy4", 3}});
  auto bad = CDGA::unchecked(
      alg, {{"sy4", alg.generator("x4")},
            {"x4", multiply(alg.generator("sy4"), alg.generator("x4"))}});
  CHECK_FALSE(d_squared_check(bad, 10));
  try {
    cohomology_dims(bad, 10);
    FAIL("expected a precondition error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
  FreeGCA z({{"a", 3}, {"b", 4}});
  CHECK(d_squared_check(CDGA(z, {}), 20));
}

TEST_CASE("koszul pair is acyclic") {
  FreeGCA alg({{"x4", 4}, {"sy3", 3}});
  CDGA c(alg, {{"sy3", alg.generator("x4")}});
  CHECK(cohomology_dims(c, 20) == GradedDims{{0, 1}});
  CHECK(brute_cohomology(c, 20) == GradedDims{{0, 1}});
}

TEST_CASE("koszul complexes are acyclic") {
  for (int n = 1; n <= 3; ++n) {
    CDGA k = koszul_cdga(n);
    CHECK(k.is_minimal() == false);
    CHECK(cohomology_dims(k, 4 * n + 4) == GradedDims{{0, 1}});
  }
}

TEST_CASE("zero differential gives the poincare series") {
  FreeGCA alg({{"a", 3}, {"b", 4}, {"c", 6}});
  CDGA c(alg, {});
  CHECK(cohomology_dims(c, 24) == poincare_dims(alg, 24));
  CHECK(c.is_minimal());
}

TEST_CASE("relative model of the string to fivebrane stage") {
  auto base = bcohomology_generators(GroupSpec::parse("bstring:7"), 24);
  auto rm = relative_model_of_cover(base, "x8");
  CHECK(rm.total.str() == "L(x8,x12,sy8), d(sy8) = x8");
  CHECK(rm.fiber.algebra().generators().size() == 1);
  CHECK(rm.fiber.algebra().generators()[0].name == "sy8");
  CHECK(rm.fiber.algebra().generators()[0].degree == 7);
  CHECK(cohomology_dims(rm.total, 24) == GradedDims{{0, 1}, {12, 1}, {24, 1}});
  CHECK(d_squared_check(rm.total, 24));
}

TEST_CASE("relative model of the fivebrane to ninebrane stage") {
  auto base = bcohomology_generators(GroupSpec::parse("bfivebrane:7"), 24);
  auto rm = relative_model_of_cover(base, "x12");
  FreeGCA quotient(std::vector<Generator>{});
  CHECK(cohomology_dims(rm.total, 24) == poincare_dims(quotient, 24));
}

TEST_CASE("relative models agree with the quotient algebra") {
  for (std::string spec : {"bstring", "bfivebrane", "bspin:9", "bso:10", "bstableO"}) {
    auto base = bcohomology_generators(GroupSpec::parse(spec), 20);
    for (const auto &g : base.items()) {
      if (g.odd())
        continue;
      auto rm = relative_model_of_cover(base, g.name);
      std::vector<Generator> rest;
      for (const auto &h : base.items())
        if (h.name != g.name)
          rest.push_back(h);
      CHECK_MESSAGE(cohomology_dims(rm.total, 20) ==
                        poincare_dims(FreeGCA(rest), 20),
                    spec << " kill " << g.name);
      CHECK(brute_cohomology(rm.total, 12) == poincare_dims(FreeGCA(rest), 12));
    }
  }
}

TEST_CASE("relative model errors") {
  GeneratorSet base({{"x3", 3}, {"x8", 8}});
  CHECK_THROWS(relative_model_of_cover(base, "x3"));
  CHECK_THROWS(relative_model_of_cover(base, "nope"));
}

TEST_CASE("pathspace model") {
  auto pm = pathspace_model(EMProduct{4, 8, 12});
  CHECK(pm.total.algebra().generators().size() == 6);
  CHECK(cohomology_dims(pm.total, 24) == GradedDims{{0, 1}});
  CHECK(pm.total.d_of("sy8") == pm.total.algebra().generator("y8"));
  CHECK(pm.fiber.algebra().generators().size() == 3);

  auto empty = pathspace_model(EMProduct{});
  CHECK(empty.total.algebra().generators().size() == 0);
  CHECK(cohomology_dims(empty.total, 10) == GradedDims{{0, 1}});

  auto two = pathspace_model(EMProduct{2});
  CHECK(two.total.algebra().generators()[1].name == "sy2");
  CHECK(two.total.algebra().generators()[1].degree == 1);
  CHECK(cohomology_dims(two.total, 12) == GradedDims{{0, 1}});

  auto doubled = pathspace_model(EMProduct{8, 8});
  CHECK(cohomology_dims(doubled.total, 24) == GradedDims{{0, 1}});
}

TEST_CASE("split relative model carries the quotient differential") {
  FreeGCA alg({{"x4", 4}, {"sy4", 3}, {"z7", 7}});
  auto x4 = alg.generator("x4"), sy = alg.generator("sy4");
  CDGA tot(alg, {{"sy4", x4}, {"z7", multiply(x4, x4)}});
  auto rm = split_relative(tot, {"x4"});
  CHECK(rm.fiber.algebra().generators().size() == 2);
  CHECK(rm.fiber.d_of("sy4").is_zero());
  CHECK(rm.fiber.d_of("z7").is_zero());
  CHECK(rm.inclusion == std::vector<std::size_t>{0});
}
