// The construction-string grammar, the deterministic group catalog, and the
// verification suites with their serialized reports.

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "rue/catalog.hpp"
#include "rue/errors.hpp"
#include "rue/group.hpp"
#include "rue/isomorphism.hpp"
#include "rue/subgroup.hpp"
#include "rue/suites.hpp"

using rue::CatalogEntry;
using rue::GroupTable;

namespace {

bool catalog_contains(const std::vector<CatalogEntry>& entries, const std::string& spec) {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const CatalogEntry& e) { return e.spec == spec; });
}

}  // namespace

TEST_CASE("construction strings build the advertised groups") {
  CHECK(rue::build_group("cyclic:1").order() == 1);
  CHECK(rue::build_group("cyclic:12").order() == 12);
  CHECK(rue::build_group("dihedral:6").order() == 6);
  CHECK(rue::build_group("dicyclic:8").order() == 8);
  CHECK(rue::build_group("symmetric:4").order() == 24);
  CHECK(rue::build_group("alternating:3").order() == 3);
  CHECK(rue::build_group("alternating:5").order() == 60);
  CHECK(rue::build_group("gamma:9").order() == 72);
  CHECK(rue::build_group("elementary:2^3").order() == 8);
  CHECK(rue::build_group("elementary:3^2").exponent() == 3);
  CHECK(rue::build_group("cyclic:2*cyclic:3").order() == 6);
  CHECK(rue::build_group("symmetric:3*cyclic:2*cyclic:2").order() == 24);
  CHECK(rue::brute_force_isomorphic(rue::build_group("dihedral:6"),
                                    rue::build_group("symmetric:3")));
}

TEST_CASE("malformed construction strings are rejected") {
  for (const char* bad : {"", "cyclic", "cyclic:", "cyclic:x", "cyclic:0", "cyclic:-3",
                          "unknown:5", "dihedral:7", "dihedral:4", "dicyclic:6", "dicyclic:10",
                          "alternating:2", "elementary:4^2", "elementary:3", "symmetric:0",
                          "cyclic:3**cyclic:2", "*cyclic:2", "cyclic:2*"}) {
    CHECK_THROWS_AS(rue::build_group(bad), rue::Error);
  }
  CHECK_THROWS_AS(rue::build_group("gamma:6"), rue::NotPrimePower);
  CHECK_THROWS_AS(rue::build_group("gamma:2"), rue::QTooSmall);
}

TEST_CASE("file-backed construction strings") {
  auto path = std::filesystem::temp_directory_path() / "catalog_sample.grp";
  {
    std::ofstream out(path);
    out << "# a four-cycle\ndegree 4\n(0 1 2 3)\n";
  }
  CHECK(rue::build_group("@" + path.string()).order() == 4);
  {
    std::ofstream out(path);
    out << "degree 4\n(0 1\n";
  }
  try {
    rue::build_group("@" + path.string());
    FAIL("expected a parse error");
  } catch (const rue::ParseError& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST_CASE("the enumeration bound comes from the environment when set") {
  unsetenv("RUE_MAX_ELEMENTS");
  CHECK(rue::enumeration_bound() == rue::kDefaultEnumerationBound);
  setenv("RUE_MAX_ELEMENTS", "50", 1);
  CHECK(rue::enumeration_bound() == 50);
  CHECK_THROWS_AS(rue::build_group("symmetric:5"), rue::EnumerationBoundExceeded);
  setenv("RUE_MAX_ELEMENTS", "not-a-number", 1);
  CHECK(rue::enumeration_bound() == rue::kDefaultEnumerationBound);
  unsetenv("RUE_MAX_ELEMENTS");
  CHECK(rue::build_group("symmetric:5").order() == 120);
}

TEST_CASE("catalog sizes are frozen") {
  CHECK(rue::build_catalog(1).size() == 1);
  CHECK(rue::build_catalog(24).size() == 58);
  CHECK(rue::build_catalog(60).size() == 141);
  CHECK(rue::build_catalog(120).size() == 273);
  CHECK(rue::build_catalog(240).size() == 533);
}

TEST_CASE("catalog contents at the usual bounds") {
  auto c1 = rue::build_catalog(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].spec == "cyclic:1");

  auto c60 = rue::build_catalog(60);
  for (const char* expected : {"symmetric:3", "alternating:4", "gamma:5", "dicyclic:12",
                               "alternating:5", "dihedral:8", "elementary:2^4", "gamma:7",
                               "gamma:3*cyclic:2", "cyclic:59"}) {
    CHECK(catalog_contains(c60, expected));
  }
  CHECK_FALSE(catalog_contains(c60, "symmetric:5"));

  auto c240 = rue::build_catalog(240);
  CHECK(catalog_contains(c240, "gamma:3*gamma:4"));
  CHECK(catalog_contains(c240, "gamma:3*cyclic:4"));
  CHECK(catalog_contains(c240, "symmetric:5"));

  auto c720 = rue::build_catalog(720);
  CHECK(catalog_contains(c720, "symmetric:6"));
  CHECK(catalog_contains(c720, "alternating:5"));
  CHECK(catalog_contains(c720, "gamma:27"));
}

TEST_CASE("catalog entries are unique, bounded, and honest about orders") {
  auto entries = rue::build_catalog(120);
  std::set<std::string> seen;
  for (const auto& e : entries) {
    CHECK(seen.insert(e.spec).second);
    CHECK(e.order >= 1);
    CHECK(e.order <= 120);
  }
  // The declared order matches the built group on a sample.
  for (std::size_t i = 0; i < entries.size(); i += 17) {
    CHECK(rue::build_group(entries[i].spec).order() == entries[i].order);
  }
}

TEST_CASE("suite names and manifest") {
  const auto& names = rue::suite_names();
  REQUIRE(names.size() == 12);
  CHECK(names.front() == "orthogonality");
  CHECK(names.back() == "all");
  const auto& manifest = rue::suite_manifest();
  REQUIRE(manifest.size() == names.size());
  std::size_t total = 0;
  for (const auto& [suite, checks] : manifest) {
    CHECK(std::find(names.begin(), names.end(), suite) != names.end());
    CHECK_FALSE(checks.empty());
    if (suite != "all") total += checks.size();
  }
  CHECK(manifest.back().first == "all");
  CHECK(manifest.back().second.size() == total);
}

TEST_CASE("unknown suites are rejected") {
  auto catalog = rue::build_catalog(6);
  CHECK_THROWS_AS(rue::run_suite("nope", catalog, 6), rue::UnknownSuite);
  CHECK_THROWS_AS(rue::run_suite("", catalog, 6), rue::UnknownSuite);
}

TEST_CASE("the full suite passes on a small catalog") {
  auto catalog = rue::build_catalog(12);
  auto report = rue::run_suite("all", catalog, 12);
  CHECK(report.ok());
  CHECK(report.failed == 0);
  CHECK(report.disagreements.empty());
  CHECK(report.passed > 0);
  CHECK(report.groups.size() == catalog.size());
  CHECK(report.passed + report.failed + report.skipped ==
        static_cast<long long>(report.checks.size()));
}

TEST_CASE("the full suite is trivially green on the trivial catalog") {
  auto report = rue::run_suite("all", rue::build_catalog(1), 1);
  CHECK(report.ok());
  REQUIRE(report.groups.size() == 1);
  CHECK(report.groups[0].spec == "cyclic:1");
  CHECK(report.groups[0].verdict == "Abelian");
  CHECK(report.groups[0].agreement);
}

TEST_CASE("group records carry the class census and both verdict sides") {
  auto report = rue::run_suite("theoremB", rue::build_catalog(24), 24);
  CHECK(report.ok());
  bool found = false;
  for (const auto& g : report.groups) {
    if (g.spec != "symmetric:3") continue;
    found = true;
    CHECK(g.order == 6);
    CHECK(g.class_count == 3);
    CHECK(g.commuting_probability == rue::Fraction(1, 2));
    CHECK(g.rue_elements.size() == 2);
    CHECK(g.verdict == "RueByTheoremB");
    CHECK(g.gamma_orders == std::vector<long>{3});
    CHECK(g.center_order == 1);
    CHECK(g.predicted_elements == g.rue_elements);
    CHECK(g.agreement);
  }
  CHECK(found);
  for (const auto& g : report.groups) {
    if (g.spec == "dihedral:8" || g.spec == "dicyclic:8" || g.spec == "symmetric:4") {
      CHECK(g.verdict == "NoRueElement");
      CHECK(g.rue_elements.empty());
      CHECK(g.agreement);
    }
  }
}

TEST_CASE("a single-family run only emits its own checks") {
  auto report = rue::run_suite("orthogonality", rue::build_catalog(8), 8);
  CHECK(report.ok());
  std::set<std::string> allowed = {"degree-square-sum", "row-orthogonality",
                                   "column-orthogonality"};
  CHECK_FALSE(report.checks.empty());
  for (const auto& c : report.checks) CHECK(allowed.count(c.check) == 1);
}

TEST_CASE("the standalone witness family runs without groups") {
  auto report = rue::run_suite("lemma33", rue::build_catalog(1), 1);
  CHECK(report.ok());
  CHECK(report.passed > 0);
  for (const auto& c : report.checks) {
    CHECK((c.check == "even-type-witness" || c.check == "pinned-zero-values"));
  }
}

TEST_CASE("serialized reports are byte-identical across runs") {
  auto catalog = rue::build_catalog(16);
  auto a = rue::run_suite("all", catalog, 16);
  auto b = rue::run_suite("all", rue::build_catalog(16), 16);
  a.wall_seconds = 1.0;  // wall time must not leak into the serialization
  b.wall_seconds = 99.0;
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("serialized reports parse and carry the schema") {
  auto report = rue::run_suite("cor43", rue::build_catalog(12), 12);
  auto j = nlohmann::json::parse(report.to_json());
  CHECK(j["schema"] == 1);
  CHECK(j["suite"] == "cor43");
  CHECK(j["max_order"] == 12);
  CHECK(j["group_count"] == report.groups.size());
  CHECK(j["groups"].size() == report.groups.size());
  CHECK(j["checks"].size() == report.checks.size());
  CHECK(j["summary"]["ok"] == true);
  CHECK(j["summary"]["passed"] == report.passed);
  CHECK(j.count("wall_seconds") == 0);
  CHECK(j["manifest"].count("cor43") == 1);
  const auto& first = j["groups"][0];
  for (const char* field : {"name", "order", "class_count", "commuting_probability",
                            "unit_elements", "verdict", "gamma_orders", "center_order",
                            "predicted_elements", "agreement"}) {
    CHECK(first.count(field) == 1);
  }
}

TEST_CASE("check results name their subject and status") {
  auto report = rue::run_suite("lemma23", rue::build_catalog(10), 10);
  CHECK(report.ok());
  for (const auto& c : report.checks) {
    CHECK_FALSE(c.check.empty());
    CHECK_FALSE(c.subject.empty());
    CHECK((c.status == "pass" || c.status == "fail" || c.status == "skip"));
  }
}
