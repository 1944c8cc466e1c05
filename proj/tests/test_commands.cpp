#include "qtower/commands.hpp"
#include "qtower/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>

using namespace qtower;

namespace {

std::vector<ManifoldFile> all_fixtures() {
  std::vector<std::filesystem::path> paths;
  for (const auto &e : std::filesystem::directory_iterator(QTOWER_FIXTURES))
    if (e.path().extension() == ".toml")
      paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<ManifoldFile> out;
  for (const auto &p : paths)
    out.push_back(parse_manifold(p.string()));
  return out;
}

// Every report a fixture supports; failures with a library error are fine
// (they are tested elsewhere) and simply produce no report.
std::vector<Report> reports_for(const ManifoldFile &m) {
  std::vector<std::function<Report()>> makers = {
      [&] { return structures_report(m, 4, 0); },
      [&] { return structures_report(m, 8, 0); },
      [&] { return structures_report(m, 12, 0); },
      [&] { return maps_decompose_report(m, 8, false); },
      [&] { return maps_decompose_report(m, 12, true); },
      [&] { return ss_run_report(m, "a3,a7,a11", 16, false); },
      [&] { return gauge_pi_report("spin:9", m, 0, 12, false); },
      [&] { return gauge_pi_report("string", m, 0, 8, true); },
      [&] { return gauge_connectivity_report("fivebrane", m, false, 0); },
      [&] { return gauge_periodicity_report("stableO", m, 0, 12, false); },
  };
  std::vector<Report> out;
  for (const auto &f : makers) {
    try {
      out.push_back(f());
    } catch (const Error &) {
    }
  }
  return out;
}

std::string digits(const std::string &s) {
  std::string d;
  for (char c : s)
    if (c >= '0' && c <= '9')
      d += c;
  std::sort(d.begin(), d.end());
  return d;
}

void check_agree(const Report &r) {
  auto text = r.text();
  auto json = r.json();
  CHECK_MESSAGE(digits(text) == digits(json), r.command);
  auto j = nlohmann::json::parse(json);
  CHECK(j["command"] == r.command);
  for (const auto &t : r.tables) {
    REQUIRE(j["tables"].contains(t.name));
    CHECK(j["tables"][t.name].size() == t.rows.size());
  }
  for (const auto &[k, v] : r.params)
    CHECK(j["params"].contains(k));
}

} // namespace

TEST_CASE("tower reports") {
  CHECK(tower_type_report("spin:8", 0).summary == "K(Q,3) x K(Q,7)^2 x K(Q,11)");
  CHECK(tower_type_report("spin:7", 0).summary == "K(Q,3) x K(Q,7) x K(Q,11)");
  CHECK(tower_trivial_report("fivebrane:6").summary == "trivial (k=8 >= 8)");
  CHECK(tower_trivial_report("fivebrane:7").summary == "nontrivial (k=8 < 12)");
  CHECK(tower_model_report("bstring:7", "x8", 0).summary ==
        "L(x8,x12,sy8), d(sy8) = x8");
  check_agree(tower_type_report("stableO<8>", 24));
  check_agree(tower_model_report("bfivebrane:9", "x12", 24));
  check_agree(tower_split_report(7, 9, 8, 24));
  check_agree(tower_trivial_report("ninebrane:8"));
}

TEST_CASE("tower report errors") {
  try {
    tower_type_report("nope", 0);
    FAIL("bad group accepted");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::groupspec);
  }
  try {
    tower_model_report("spin:7", "p1", 0);
    FAIL("group-level model accepted");
  } catch (const Error &e) {
    CHECK(e.kind() != ErrorKind::precondition);
  }
  CHECK_THROWS_AS(tower_model_report("bstring:7", "x9", 0), Error);
}

TEST_CASE("structures report on the four sphere") {
  auto m = parse_manifold(std::string(QTOWER_FIXTURES) + "/s4.toml");
  auto r = structures_report(m, 8, 0);
  CHECK(r.summary == "decomposition (1,1,0), kernel 1");
  check_agree(r);
}

TEST_CASE("nonzero obstruction is a precondition failure") {
  auto m = parse_manifold(std::string(QTOWER_FIXTURES) + "/hp2.toml");
  try {
    structures_report(m, 8, 0);
    FAIL("nonzero p1 accepted");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::precondition);
    CHECK(std::string(e.what()).find("p1") != std::string::npos);
  }
}

TEST_CASE("gauge reports reject classifying specs") {
  auto m = parse_manifold(std::string(QTOWER_FIXTURES) + "/s4.toml");
  try {
    gauge_pi_report("bspin:7", m, 0, 4, false);
    FAIL("classifying spec accepted");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::groupspec);
  }
}

TEST_CASE("text and json agree on every fixture") {
  int n = 0;
  for (const auto &m : all_fixtures())
    for (const auto &r : reports_for(m)) {
      check_agree(r);
      ++n;
    }
  CHECK(n > 50);
}

TEST_CASE("reports are deterministic") {
  auto a = all_fixtures(), b = all_fixtures();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ra = reports_for(a[i]), rb = reports_for(b[i]);
    REQUIRE(ra.size() == rb.size());
    for (std::size_t j = 0; j < ra.size(); ++j) {
      CHECK(ra[j].text() == rb[j].text());
      CHECK(ra[j].json() == rb[j].json());
    }
  }
}

TEST_CASE("report rendering") {
  Report r;
  r.command = "demo";
  r.summary = "ok";
  r.param("flag", true).param("name", std::string("x"));
  auto &t = r.table("rows", {"a", "bb"});
  t.rows.push_back({1L, std::string("long cell")});
  r.table("empty", {"c"});
  auto text = r.text();
  CHECK(text.rfind("ok\n", 0) == 0);
  CHECK(text.find("flag: true") != std::string::npos);
  CHECK(text.find("(none)") != std::string::npos);
  auto j = nlohmann::json::parse(r.json());
  CHECK(j["tables"]["rows"][0]["a"] == 1);
  CHECK(j["tables"]["rows"][0]["bb"] == "long cell");
  CHECK(j["tables"]["empty"].empty());
}
