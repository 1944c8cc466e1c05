#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "qtower/qtower.h"

#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>

namespace {

std::string fixture(const char *name) {
  return std::string(QTOWER_FIXTURES) + "/" + name;
}

} // namespace

TEST_CASE("tower type through the C interface") {
  qt_report *r = nullptr;
  REQUIRE(qt_tower_type("spin:8", 0, &r) == QT_OK);
  CHECK(std::string(qt_report_summary(r)) == "K(Q,3) x K(Q,7)^2 x K(Q,11)");
  CHECK(std::string(qt_report_text(r)).rfind("K(Q,3)", 0) == 0);
  CHECK(std::strstr(qt_report_json(r), "\"command\": \"tower type\"") != nullptr);
  qt_report_free(r);
}

TEST_CASE("status codes") {
  qt_report *r = nullptr;
  CHECK(qt_tower_type("bogus", 0, &r) == QT_ERR_GROUPSPEC);
  CHECK(r == nullptr);
  CHECK(std::strstr(qt_last_error(), "catalog") != nullptr);
  CHECK(qt_tower_type(nullptr, 0, &r) == QT_ERR_USAGE);
  CHECK(qt_tower_trivial("string", &r) == QT_ERR_PRECONDITION);

  qt_manifold *m = nullptr;
  CHECK(qt_manifold_parse("betti = {", "x.toml", &m) == QT_ERR_PARSE);
  CHECK(qt_manifold_parse("betti = {\"0\" = 2}", "x.toml", &m) == QT_ERR_VALIDATION);
  CHECK(std::strstr(qt_last_error(), "x.toml") != nullptr);
  CHECK(m == nullptr);
  CHECK(qt_manifold_load(fixture("nope.toml").c_str(), &m) == QT_ERR_PARSE);

  REQUIRE(qt_manifold_load(fixture("hp2.toml").c_str(), &m) == QT_OK);
  CHECK(qt_structures_report(m, 8, 0, &r) == QT_ERR_PRECONDITION);
  qt_manifold_free(m);
}

TEST_CASE("manifold accessors and reports") {
  qt_manifold *m = nullptr;
  REQUIRE(qt_manifold_load(fixture("s4.toml").c_str(), &m) == QT_OK);
  long b = -1;
  int dim = -1;
  CHECK(qt_manifold_betti(m, 4, &b) == QT_OK);
  CHECK(b == 1);
  CHECK(qt_manifold_betti(m, 5, &b) == QT_OK);
  CHECK(b == 0);
  CHECK(qt_manifold_dim(m, &dim) == QT_OK);
  CHECK(dim == 4);

  qt_report *r = nullptr;
  REQUIRE(qt_structures_report(m, 8, 0, &r) == QT_OK);
  CHECK(std::string(qt_report_summary(r)) == "decomposition (1,1,0), kernel 1");
  qt_report_free(r);

  REQUIRE(qt_ss_run(m, "a3", 12, 1, &r) == QT_OK);
  qt_report_free(r);
  REQUIRE(qt_gauge_pi("spin:5", m, 0, 8, 0, &r) == QT_OK);
  qt_report_free(r);
  REQUIRE(qt_gauge_connectivity("string", m, 1, 0, &r) == QT_OK);
  qt_report_free(r);
  REQUIRE(qt_gauge_periodicity("stableO", m, 0, 16, 0, &r) == QT_OK);
  qt_report_free(r);
  REQUIRE(qt_maps_decompose(m, 8, 0, &r) == QT_OK);
  qt_report_free(r);
  qt_manifold_free(m);
  qt_report_free(nullptr);
  qt_manifold_free(nullptr);
}

TEST_CASE("errors are per thread") {
  qt_report *r = nullptr;
  CHECK(qt_tower_type("bogus", 0, &r) == QT_ERR_GROUPSPEC);
  std::string other;
  std::thread t([&] {
    qt_report *r2 = nullptr;
    qt_tower_type("spin:7", 0, &r2);
    other = qt_last_error();
    qt_report_free(r2);
  });
  t.join();
  CHECK(other.empty());
  CHECK(std::strlen(qt_last_error()) > 0);
}

TEST_CASE("version and defaults") {
  CHECK(std::strlen(qt_version()) > 0);
  CHECK(qt_default_max_degree() > 0);
}
