// Permutations, enumerated groups, conjugacy classes, subgroup machinery,
// the group-file format, and the brute-force isomorphism oracle, checked
// against hand-computed small cases.

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "rue/catalog.hpp"
#include "rue/conjugacy.hpp"
#include "rue/errors.hpp"
#include "rue/group.hpp"
#include "rue/group_io.hpp"
#include "rue/isomorphism.hpp"
#include "rue/permutation.hpp"
#include "rue/subgroup.hpp"

using rue::GroupTable;
using rue::Permutation;
using rue::Subgroup;

namespace {

std::vector<std::size_t> order_census(const GroupTable& g) {
  std::vector<std::size_t> orders;
  for (std::size_t i = 0; i < g.order(); ++i) orders.push_back(g.element_order(i));
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<std::size_t> class_sizes(const GroupTable& g) {
  auto cls = rue::conjugacy_classes(g);
  std::vector<std::size_t> sizes;
  for (std::size_t c = 0; c < cls.count(); ++c) sizes.push_back(cls.cls(c).members.size());
  return sizes;  // already sorted within the (order, size) class ordering
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation p = rue::parse_cycles("(0 1 2)(3 4)", 6);
  CHECK(p.degree() == 6);
  CHECK(p.order() == 6);
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(2) == 0);
  CHECK(p.apply(5) == 5);
  CHECK(rue::cycle_string(p) == "(0 1 2)(3 4)");
  CHECK(p * p.inverse() == Permutation::identity(6));
  CHECK(p.power(6).is_identity());
  CHECK(p.power(-1) == p.inverse());
  CHECK(p.power(7) == p);
  CHECK(rue::cycle_type(p) == std::vector<int>{3, 2, 1});
  CHECK(rue::cycle_string(Permutation::identity(4)) == "()");
  CHECK(rue::parse_cycles("()", 3) == Permutation::identity(3));
}

TEST_CASE("products apply the left factor first") {
  Permutation a = rue::parse_cycles("(0 1)", 3);
  Permutation b = rue::parse_cycles("(1 2)", 3);
  Permutation ab = a * b;
  // 0 -> a -> 1 -> b -> 2
  CHECK(ab.apply(0) == 2);
  CHECK(ab.apply(2) == 1);
  CHECK(ab.apply(1) == 0);
  for (rue::Permutation::Point i = 0; i < 3; ++i) CHECK(ab[i] == b[a[i]]);
}

TEST_CASE("malformed permutations are rejected") {
  CHECK_THROWS_AS(rue::parse_cycles("(0 1", 3), rue::InvalidPermutation);
  CHECK_THROWS_AS(rue::parse_cycles("(0 5)", 3), rue::InvalidPermutation);
  CHECK_THROWS_AS(rue::parse_cycles("(0 1)(1 2)", 3), rue::InvalidPermutation);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), rue::InvalidPermutation);
}

TEST_CASE("symmetric group on three points") {
  GroupTable g = GroupTable::from_generators(
      3, {rue::parse_cycles("(0 1)", 3), rue::parse_cycles("(0 1 2)", 3)});
  CHECK(g.order() == 6);
  CHECK(g.element(0).is_identity());
  CHECK(g.exponent() == 6);
  CHECK(order_census(g) == std::vector<std::size_t>{1, 2, 2, 2, 3, 3});
  for (std::size_t i = 0; i < g.order(); ++i) {
    CHECK(g.mul(i, g.inv(i)) == 0);
    CHECK(g.index_of(g.element(i)) == i);
    CHECK(g.power(i, static_cast<long long>(g.element_order(i))) == 0);
  }
  CHECK_FALSE(g.contains(rue::parse_cycles("(0 1)", 4).power(1)));
}

TEST_CASE("element numbering is reproducible") {
  auto gens = std::vector<Permutation>{rue::parse_cycles("(0 1 2 3)", 4),
                                       rue::parse_cycles("(0 1)", 4)};
  GroupTable a = GroupTable::from_generators(4, gens);
  GroupTable b = GroupTable::from_generators(4, gens);
  REQUIRE(a.order() == 24);
  for (std::size_t i = 0; i < a.order(); ++i) CHECK(a.element(i) == b.element(i));
}

TEST_CASE("enumeration bound is enforced") {
  CHECK_THROWS_AS(GroupTable::from_generators(
                      5, {rue::parse_cycles("(0 1 2 3 4)", 5), rue::parse_cycles("(0 1)", 5)}, 30),
                  rue::EnumerationBoundExceeded);
}

TEST_CASE("trivial group from no generators") {
  GroupTable g = GroupTable::from_generators(1, {});
  CHECK(g.order() == 1);
  CHECK(g.exponent() == 1);
}

TEST_CASE("conjugacy classes of small symmetric and alternating groups") {
  CHECK(class_sizes(rue::build_group("symmetric:3")) == std::vector<std::size_t>{1, 3, 2});
  // Classes sort by (element order, size): within order 2, the three double
  // transpositions precede the six transpositions.
  CHECK(class_sizes(rue::build_group("symmetric:4")) == std::vector<std::size_t>{1, 3, 6, 8, 6});
  CHECK(class_sizes(rue::build_group("alternating:5")) ==
        std::vector<std::size_t>{1, 15, 20, 12, 12});
}

TEST_CASE("class structure invariants") {
  GroupTable g = rue::build_group("symmetric:4");
  auto cls = rue::conjugacy_classes(g);
  CHECK(cls.count() == 5);
  CHECK(cls.cls(0).members == std::vector<std::size_t>{0});
  std::size_t total = 0;
  for (std::size_t c = 0; c < cls.count(); ++c) {
    const auto& members = cls.cls(c).members;
    total += members.size();
    CHECK(cls.cls(c).representative == members.front());
    CHECK(std::is_sorted(members.begin(), members.end()));
    for (std::size_t m : members) CHECK(cls.class_of(m) == c);
    // Same cycle type across the class.
    auto type = rue::cycle_type(g.element(cls.cls(c).representative));
    for (std::size_t m : members) CHECK(rue::cycle_type(g.element(m)) == type);
  }
  CHECK(total == g.order());
}

TEST_CASE("power classes agree with element powers") {
  GroupTable g = rue::build_group("symmetric:4");
  auto cls = rue::conjugacy_classes(g);
  for (std::size_t c = 0; c < cls.count(); ++c) {
    for (long long k : {-3LL, -1LL, 0LL, 1LL, 2LL, 3LL, 7LL}) {
      std::size_t expected = cls.class_of(g.power(cls.cls(c).representative, k));
      CHECK(cls.power_class(c, k) == expected);
      // Well defined: every member's power lands in the same class.
      for (std::size_t m : cls.cls(c).members) {
        CHECK(cls.class_of(g.power(m, k)) == expected);
      }
    }
  }
}

TEST_CASE("centralizers in the symmetric group on three points") {
  GroupTable g = rue::build_group("symmetric:3");
  auto cls = rue::conjugacy_classes(g);
  for (std::size_t c = 0; c < cls.count(); ++c) {
    std::size_t rep = cls.cls(c).representative;
    Subgroup cent = rue::centralizer(g, rep);
    CHECK(cent.order() * cls.cls(c).members.size() == g.order());
    CHECK(cent.contains(rep));
  }
  CHECK(rue::centralizer(g, 0).is_whole_group());
}

TEST_CASE("center and derived subgroup of the quaternion group") {
  GroupTable q8 = rue::build_group("dicyclic:8");
  REQUIRE(q8.order() == 8);
  CHECK(order_census(q8) == std::vector<std::size_t>{1, 2, 4, 4, 4, 4, 4, 4});
  Subgroup z = rue::center(q8);
  Subgroup d = rue::derived_subgroup(q8);
  CHECK(z.order() == 2);
  CHECK(d.order() == 2);
  CHECK(z.members() == d.members());
  auto minimals = rue::minimal_normal_subgroups(q8);
  REQUIRE(minimals.size() == 1);
  CHECK(minimals[0].members() == z.members());
}

TEST_CASE("fitting subgroups of small groups") {
  GroupTable s3 = rue::build_group("symmetric:3");
  Subgroup f3 = rue::fitting_subgroup(s3);
  CHECK(f3.order() == 3);
  CHECK(f3.is_normal());
  CHECK(f3.is_abelian());

  GroupTable s4 = rue::build_group("symmetric:4");
  Subgroup f4 = rue::fitting_subgroup(s4);
  CHECK(f4.order() == 4);
  CHECK(f4.is_abelian());
  CHECK(f4.is_nilpotent());
  CHECK(f4.members() == rue::p_core(s4, 2).members());
  for (std::size_t m : f4.members()) CHECK(s4.element_order(m) <= 2);

  GroupTable a5 = rue::build_group("alternating:5");
  CHECK(rue::fitting_subgroup(a5).is_trivial());

  GroupTable d4 = rue::build_group("dihedral:8");
  CHECK(rue::fitting_subgroup(d4).is_whole_group());
}

TEST_CASE("sylow subgroups and p-cores of Sym4") {
  GroupTable s4 = rue::build_group("symmetric:4");
  CHECK(rue::sylow_subgroup(s4, 2).order() == 8);
  CHECK(rue::sylow_subgroup(s4, 3).order() == 3);
  CHECK(rue::sylow_subgroup(s4, 5).is_trivial());
  CHECK(rue::p_core(s4, 2).order() == 4);
  CHECK(rue::p_core(s4, 3).is_trivial());
  CHECK(rue::prime_divisors(24) == std::vector<std::size_t>{2, 3});
  CHECK(rue::prime_divisors(1).empty());
}

TEST_CASE("normal closures in Sym4") {
  GroupTable s4 = rue::build_group("symmetric:4");
  // A transposition generates everything; a double transposition generates
  // the normal four-subgroup.
  std::size_t transposition = 0, double_transposition = 0;
  for (std::size_t i = 1; i < s4.order(); ++i) {
    auto type = rue::cycle_type(s4.element(i));
    if (type == std::vector<int>{2, 1, 1}) transposition = i;
    if (type == std::vector<int>{2, 2}) double_transposition = i;
  }
  CHECK(rue::normal_closure(s4, {transposition}).is_whole_group());
  CHECK(rue::normal_closure(s4, {double_transposition}).order() == 4);
}

TEST_CASE("upper central series") {
  GroupTable s3 = rue::build_group("symmetric:3");
  auto series3 = rue::upper_central_series(s3);
  REQUIRE(series3.size() == 1);
  CHECK(series3[0].is_trivial());
  CHECK(rue::hypercenter(s3).is_trivial());

  GroupTable d4 = rue::build_group("dihedral:8");
  auto series4 = rue::upper_central_series(d4);
  REQUIRE(series4.size() == 2);
  CHECK(series4[0].order() == 2);
  CHECK(series4[1].order() == 8);
  CHECK(rue::hypercenter(d4).is_whole_group());
}

TEST_CASE("structural flags") {
  auto f = rue::structural_flags(rue::build_group("symmetric:3"));
  CHECK_FALSE(f.abelian);
  CHECK_FALSE(f.nilpotent);
  CHECK(f.solvable);
  CHECK(f.metabelian);

  f = rue::structural_flags(rue::build_group("symmetric:4"));
  CHECK(f.solvable);
  CHECK_FALSE(f.metabelian);

  f = rue::structural_flags(rue::build_group("alternating:5"));
  CHECK_FALSE(f.solvable);
  CHECK_FALSE(f.metabelian);

  f = rue::structural_flags(rue::build_group("cyclic:6"));
  CHECK(f.abelian);
  CHECK(f.nilpotent);
  CHECK(f.solvable);
  CHECK(f.metabelian);

  f = rue::structural_flags(rue::build_group("dicyclic:8"));
  CHECK(f.nilpotent);
  CHECK_FALSE(f.abelian);
}

TEST_CASE("quotient by the normal four-subgroup of Sym4") {
  GroupTable s4 = rue::build_group("symmetric:4");
  auto v4 = rue::p_core(s4, 2);
  auto q = rue::quotient(s4, v4.members());
  CHECK(q.group.order() == 6);
  CHECK_FALSE(rue::whole_group(q.group).is_abelian());
  CHECK(rue::brute_force_isomorphic(q.group, rue::build_group("symmetric:3")));
  // The projection is a homomorphism.
  for (std::size_t i = 0; i < s4.order(); i += 5) {
    for (std::size_t j = 0; j < s4.order(); j += 7) {
      CHECK(q.projection[s4.mul(i, j)] == q.group.mul(q.projection[i], q.projection[j]));
    }
  }
  CHECK_THROWS_AS(rue::quotient(s4, rue::sylow_subgroup(s4, 2).members()), rue::NotNormal);
}

TEST_CASE("direct products") {
  GroupTable g = rue::direct_product(rue::build_group("cyclic:2"), rue::build_group("cyclic:3"));
  CHECK(g.order() == 6);
  CHECK(g.exponent() == 6);
  CHECK(rue::whole_group(g).is_abelian());
  CHECK(rue::brute_force_isomorphic(g, rue::build_group("cyclic:6")));
}

TEST_CASE("subgroup closure") {
  GroupTable s4 = rue::build_group("symmetric:4");
  auto all = rue::subgroup_closure(s4, s4.generator_indices());
  CHECK(all.size() == 24);
  CHECK(rue::subgroup_closure(s4, {}).size() == 1);
  CHECK(rue::trivial_subgroup(s4).order() == 1);
  CHECK(rue::whole_group(s4).order() == 24);
}

TEST_CASE("isomorphism oracle positives and negatives") {
  CHECK(rue::brute_force_isomorphic(rue::build_group("gamma:4"), rue::build_group("alternating:4")));
  CHECK(rue::brute_force_isomorphic(rue::build_group("dihedral:12"),
                                    rue::build_group("cyclic:2*symmetric:3")));
  CHECK(rue::brute_force_isomorphic(rue::build_group("gamma:3"), rue::build_group("symmetric:3")));
  CHECK_FALSE(
      rue::brute_force_isomorphic(rue::build_group("cyclic:4"), rue::build_group("elementary:2^2")));
  CHECK_FALSE(
      rue::brute_force_isomorphic(rue::build_group("dihedral:12"), rue::build_group("dicyclic:12")));
  CHECK_FALSE(
      rue::brute_force_isomorphic(rue::build_group("dihedral:8"), rue::build_group("dicyclic:8")));
  CHECK_THROWS_AS(
      rue::brute_force_isomorphic(rue::build_group("cyclic:4"), rue::build_group("cyclic:5")),
      rue::OrderMismatch);
  GroupTable big = rue::build_group("elementary:2^9");
  CHECK_THROWS_AS(rue::brute_force_isomorphic(big, big), rue::OracleBoundExceeded);
}

TEST_CASE("group files parse with comments and blank lines") {
  std::istringstream in(
      "# five-cycle plus transposition\n"
      "degree 5\n"
      "\n"
      "(0 1 2 3 4)\n"
      "(0 1)\n");
  auto file = rue::parse_group_stream(in, "inline");
  CHECK(file.degree == 5);
  REQUIRE(file.generators.size() == 2);
  GroupTable g = GroupTable::from_generators(file.degree, file.generators);
  CHECK(g.order() == 120);
}

TEST_CASE("group file errors carry the line number") {
  std::istringstream bad(
      "degree 4\n"
      "(0 1 9)\n");
  try {
    rue::parse_group_stream(bad, "sample");
    FAIL("expected a parse error");
  } catch (const rue::ParseError& e) {
    CHECK(std::string(e.what()).find("sample:2") != std::string::npos);
  }
  std::istringstream noheader("(0 1)\n");
  try {
    rue::parse_group_stream(noheader, "other");
    FAIL("expected a parse error");
  } catch (const rue::ParseError& e) {
    CHECK(std::string(e.what()).find("other:1") != std::string::npos);
  }
}

TEST_CASE("group files round-trip through the filesystem") {
  auto path = std::filesystem::temp_directory_path() / "round_trip_sample.grp";
  {
    std::ofstream out(path);
    out << "degree 3\n(0 1 2)\n(0 1)\n";
  }
  auto file = rue::read_group_file(path.string());
  CHECK(file.degree == 3);
  GroupTable g = rue::build_group("@" + path.string());
  CHECK(g.order() == 6);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(rue::read_group_file("/nonexistent/missing.grp"), rue::ParseError);
}
