// Exact character tables checked against hand-computed small cases, the
// documented row/column ordering, orthogonality, structure constants, and
// the unit-modulus verdict machinery.

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "rue/catalog.hpp"
#include "rue/character_table.hpp"
#include "rue/conjugacy.hpp"
#include "rue/cyclotomic.hpp"
#include "rue/errors.hpp"
#include "rue/rational.hpp"
#include "rue/subgroup.hpp"

using rue::BigInt;
using rue::CharacterTable;
using rue::Cyclotomic;
using rue::GroupTable;

namespace {

CharacterTable table_of(const std::string& spec) {
  static std::map<std::string, std::shared_ptr<GroupTable>> groups;
  auto it = groups.find(spec);
  if (it == groups.end()) {
    it = groups.emplace(spec, std::make_shared<GroupTable>(rue::build_group(spec))).first;
  }
  return rue::character_table(*it->second);
}

std::vector<long long> sorted_degrees(const CharacterTable& t) {
  std::vector<long long> d;
  for (std::size_t r = 0; r < t.irreducible_count(); ++r) d.push_back(t.degree(r));
  return d;  // rows are sorted by degree first, so this is ascending already
}

// Column index of the unique class with the given element order and size.
std::size_t column_of(const CharacterTable& t, std::size_t elt_order, std::size_t size) {
  const auto& cls = t.classes();
  const GroupTable& g = t.group();
  std::size_t found = cls.count();
  for (std::size_t c = 0; c < cls.count(); ++c) {
    if (g.element_order(cls.cls(c).representative) == elt_order &&
        cls.cls(c).members.size() == size) {
      REQUIRE(found == cls.count());  // must be unique
      found = c;
    }
  }
  REQUIRE(found < cls.count());
  return found;
}

void check_orthogonality(const CharacterTable& t) {
  const auto& cls = t.classes();
  std::size_t k = t.irreducible_count();
  long e = t.conductor();
  long long order = static_cast<long long>(t.group().order());
  BigInt sq = 0;
  for (std::size_t r = 0; r < k; ++r) sq += BigInt(t.degree(r)) * BigInt(t.degree(r));
  CHECK(sq == order);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic acc(e);
      for (std::size_t c = 0; c < k; ++c) {
        acc += Cyclotomic::integer(e, BigInt(cls.cls(c).members.size())) * t.value(i, c) *
               t.value(j, c).conjugate();
      }
      if (i == j) {
        CHECK(acc == static_cast<long>(order));
      } else {
        CHECK(acc.is_zero());
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c; d < k; ++d) {
      Cyclotomic acc(e);
      for (std::size_t r = 0; r < k; ++r) acc += t.value(r, c) * t.value(r, d).conjugate();
      if (c == d) {
        CHECK(acc ==
              static_cast<long>(order / static_cast<long long>(cls.cls(c).members.size())));
      } else {
        CHECK(acc.is_zero());
      }
    }
  }
}

}  // namespace

TEST_CASE("trivial group") {
  CharacterTable t = table_of("cyclic:1");
  REQUIRE(t.irreducible_count() == 1);
  CHECK(t.degree(0) == 1);
  CHECK(t.value(0, 0) == 1);
  CHECK(t.conductor() == 1);
}

TEST_CASE("Sym3: the full hand-computed integer table") {
  CharacterTable t = table_of("symmetric:3");
  REQUIRE(t.irreducible_count() == 3);
  CHECK(t.conductor() == 6);
  CHECK(t.modular_prime() == 7);  // least prime 1 mod 6 whose square exceeds 4*6
  // Columns: identity, the three transpositions, the two rotations.
  CHECK(column_of(t, 1, 1) == 0);
  CHECK(column_of(t, 2, 3) == 1);
  CHECK(column_of(t, 3, 2) == 2);
  // Rows sorted by (degree, lexicographic value coefficients): the sign row
  // precedes the trivial row because -1 < 1 in the second column.
  long expected[3][3] = {{1, -1, 1}, {1, 1, 1}, {2, 0, -1}};
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(t.degree(r) == expected[r][0]);
    for (std::size_t c = 0; c < 3; ++c) CHECK(t.value(r, c) == expected[r][c]);
  }
  check_orthogonality(t);
}

TEST_CASE("cyclic group of order 4: exact fourth-root table") {
  CharacterTable t = table_of("cyclic:4");
  REQUIRE(t.irreducible_count() == 4);
  CHECK(t.conductor() == 4);
  // Columns: powers of the generator are numbered in enumeration order, and
  // classes sort by element order: identity, the involution, then the two
  // order-4 singletons in member order.
  const char* expected[4][4] = {
      {"1", "-1", "4:[0,-1]", "4:[0,1]"},
      {"1", "-1", "4:[0,1]", "4:[0,-1]"},
      {"1", "1", "-1", "-1"},
      {"1", "1", "1", "1"},
  };
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      CHECK(t.value(r, c).to_string() == expected[r][c]);
    }
  }
  check_orthogonality(t);
}

TEST_CASE("Alt4: linear characters carry cube roots; degrees are 1,1,1,3") {
  CharacterTable t = table_of("alternating:4");
  REQUIRE(t.irreducible_count() == 4);
  CHECK(t.conductor() == 6);
  CHECK(sorted_degrees(t) == std::vector<long long>{1, 1, 1, 3});
  std::size_t c_inv = column_of(t, 2, 3);
  // The two order-3 classes of size 4.
  std::vector<std::size_t> c3;
  for (std::size_t c = 0; c < 4; ++c) {
    if (t.group().element_order(t.classes().cls(c).representative) == 3) c3.push_back(c);
  }
  REQUIRE(c3.size() == 2);
  Cyclotomic omega = Cyclotomic::root_of_unity(6, 2);  // primitive cube root
  Cyclotomic omega2 = Cyclotomic::root_of_unity(6, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    if (t.degree(r) == 3) {
      CHECK(t.value(r, 0) == 3);
      CHECK(t.value(r, c_inv) == -1);
      CHECK(t.value(r, c3[0]).is_zero());
      CHECK(t.value(r, c3[1]).is_zero());
    } else {
      CHECK(t.value(r, c_inv) == 1);
      Cyclotomic a = t.value(r, c3[0]);
      Cyclotomic b = t.value(r, c3[1]);
      if (a == 1) {
        CHECK(b == 1);  // the trivial row
      } else {
        // A nontrivial linear row takes the two primitive cube roots,
        // conjugate to each other, one on each rotation class.
        CHECK(((a == omega && b == omega2) || (a == omega2 && b == omega)));
      }
    }
  }
  check_orthogonality(t);
}

TEST_CASE("dihedral and quaternion groups of order 8 share the degree pattern") {
  for (const char* spec : {"dihedral:8", "dicyclic:8"}) {
    CharacterTable t = table_of(spec);
    REQUIRE(t.irreducible_count() == 5);
    CHECK(sorted_degrees(t) == std::vector<long long>{1, 1, 1, 1, 2});
    std::size_t center_col = column_of(t, 2, 1);
    for (std::size_t r = 0; r < 5; ++r) {
      if (t.degree(r) != 2) continue;
      CHECK(t.value(r, center_col) == -2);
      for (std::size_t c = 1; c < 5; ++c) {
        if (c != center_col) CHECK(t.value(r, c).is_zero());
      }
    }
    check_orthogonality(t);
  }
}

TEST_CASE("Alt5: degrees, golden-ratio values, exact orthogonality") {
  CharacterTable t = table_of("alternating:5");
  REQUIRE(t.irreducible_count() == 5);
  CHECK(t.conductor() == 30);
  CHECK(t.modular_prime() == 31);
  CHECK(sorted_degrees(t) == std::vector<long long>{1, 3, 3, 4, 5});
  std::vector<std::size_t> c5;
  for (std::size_t c = 0; c < 5; ++c) {
    if (t.group().element_order(t.classes().cls(c).representative) == 5) c5.push_back(c);
  }
  REQUIRE(c5.size() == 2);
  std::size_t c2 = column_of(t, 2, 15);
  std::size_t c3 = column_of(t, 3, 20);
  for (std::size_t r = 0; r < 5; ++r) {
    Cyclotomic a = t.value(r, c5[0]);
    Cyclotomic b = t.value(r, c5[1]);
    switch (t.degree(r)) {
      case 1:
        CHECK(a == 1);
        CHECK(b == 1);
        break;
      case 3:
        // The two values are (1 +- sqrt 5)/2: they sum to 1, multiply to -1,
        // and neither has modulus one.
        CHECK(a + b == 1);
        CHECK(a * b == -1);
        CHECK_FALSE(a.is_unit_modulus());
        CHECK_FALSE(b.is_unit_modulus());
        CHECK(t.value(r, c2) == -1);
        CHECK(t.value(r, c3).is_zero());
        break;
      case 4:
        CHECK(a == -1);
        CHECK(b == -1);
        CHECK(t.value(r, c2).is_zero());
        CHECK(t.value(r, c3) == 1);
        break;
      case 5:
        CHECK(a.is_zero());
        CHECK(b.is_zero());
        CHECK(t.value(r, c2) == 1);
        CHECK(t.value(r, c3) == -1);
        break;
    }
  }
  // The squared moduli of the golden-ratio values, exactly.
  std::set<std::string> norms;
  for (std::size_t r = 0; r < 5; ++r) {
    if (t.degree(r) == 3) norms.insert(t.value(r, c5[0]).norm_square().to_string());
  }
  CHECK(norms == std::set<std::string>{"30:[1,0,1,1,0,0,0,-1]", "30:[2,0,-1,-1,0,0,0,1]"});
  check_orthogonality(t);
}

TEST_CASE("Sym5 degrees and prime") {
  CharacterTable t = table_of("symmetric:5");
  CHECK(t.conductor() == 60);
  CHECK(t.modular_prime() == 61);
  CHECK(sorted_degrees(t) == std::vector<long long>{1, 1, 4, 4, 5, 5, 6});
  check_orthogonality(t);
}

TEST_CASE("rows are sorted by degree, then lexicographically") {
  for (const char* spec : {"symmetric:4", "dihedral:12", "gamma:5", "cyclic:6"}) {
    CharacterTable t = table_of(spec);
    for (std::size_t r = 1; r < t.irreducible_count(); ++r) {
      bool ordered = t.degree(r - 1) < t.degree(r);
      if (t.degree(r - 1) == t.degree(r)) {
        ordered = false;
        for (std::size_t c = 0; c < t.irreducible_count(); ++c) {
          if (t.value(r - 1, c) != t.value(r, c)) {
            ordered = t.value(r - 1, c).lex_less(t.value(r, c));
            break;
          }
        }
      }
      CHECK(ordered);
    }
  }
}

TEST_CASE("class multiplication constants of Sym3") {
  GroupTable g = rue::build_group("symmetric:3");
  auto cls = rue::conjugacy_classes(g);
  auto a = rue::class_multiplication_constants(g, cls);
  // Two transpositions compose to the identity (3 ways) or a rotation
  // (3 ways at each rotation), never to a transposition.
  CHECK(a[1][1][0] == 3);
  CHECK(a[1][1][1] == 0);
  CHECK(a[1][1][2] == 3);
}

TEST_CASE("class multiplication constants satisfy the counting identity") {
  GroupTable g = rue::build_group("symmetric:4");
  auto cls = rue::conjugacy_classes(g);
  auto a = rue::class_multiplication_constants(g, cls);
  for (std::size_t i = 0; i < cls.count(); ++i) {
    for (std::size_t j = 0; j < cls.count(); ++j) {
      long long lhs = 0;
      for (std::size_t c = 0; c < cls.count(); ++c) {
        lhs += a[i][j][c] * static_cast<long long>(cls.cls(c).members.size());
      }
      CHECK(lhs == static_cast<long long>(cls.cls(i).members.size() * cls.cls(j).members.size()));
    }
  }
}

TEST_CASE("central characters are algebraic integers satisfying the product relation") {
  CharacterTable t = table_of("symmetric:3");
  const auto& cls = t.classes();
  auto a = rue::class_multiplication_constants(t.group(), cls);
  long e = t.conductor();
  for (std::size_t r = 0; r < t.irreducible_count(); ++r) {
    std::vector<Cyclotomic> w;
    for (std::size_t c = 0; c < cls.count(); ++c) w.push_back(rue::omega(t, r, c));
    for (std::size_t i = 0; i < cls.count(); ++i) {
      for (std::size_t j = 0; j < cls.count(); ++j) {
        Cyclotomic rhs(e);
        for (std::size_t c = 0; c < cls.count(); ++c) {
          rhs += Cyclotomic::integer(e, BigInt(a[i][j][c])) * w[c];
        }
        CHECK(w[i] * w[j] == rhs);
      }
    }
  }
}

TEST_CASE("unit-modulus verdicts for Sym3") {
  CharacterTable t = table_of("symmetric:3");
  auto verdicts = rue::rue_verdicts(t);
  const auto& cls = t.classes();
  REQUIRE(verdicts.size() == 6);
  for (const auto& v : verdicts) {
    std::size_t c = cls.class_of(v.element);
    std::size_t order = t.group().element_order(v.element);
    if (order == 3) {
      CHECK(v.is_rue);
      CHECK(v.is_nonvanishing);
      CHECK(v.witness_row == t.irreducible_count());
    } else if (order == 2) {
      CHECK_FALSE(v.is_rue);
      CHECK_FALSE(v.is_nonvanishing);
      CHECK(t.value(v.witness_row, c).is_zero());
    } else {
      CHECK_FALSE(v.is_rue);               // the degree-2 value at the identity
      CHECK(v.is_nonvanishing);
      CHECK(t.degree(v.witness_row) == 2);  // witness: a value of modulus != 1
    }
  }
}

TEST_CASE("abelian groups are unit-modulus everywhere") {
  for (const char* spec : {"cyclic:4", "cyclic:6", "elementary:3^2"}) {
    CharacterTable t = table_of(spec);
    for (const auto& v : rue::rue_verdicts(t)) {
      CHECK(v.is_rue);
      CHECK(v.is_nonvanishing);
    }
  }
}

TEST_CASE("class census and commuting probability") {
  CHECK(rue::k_of_group(table_of("symmetric:3")) == 3);
  CHECK(rue::commuting_probability(table_of("symmetric:3")) == rue::Fraction(1, 2));
  CHECK(rue::k_of_group(table_of("symmetric:4")) == 5);
  CHECK(rue::commuting_probability(table_of("symmetric:4")) == rue::Fraction(5, 24));
  CHECK(rue::k_of_group(table_of("alternating:5")) == 5);
  CHECK(rue::commuting_probability(table_of("alternating:5")) == rue::Fraction(1, 12));
  CHECK(rue::commuting_probability(table_of("dihedral:8")) == rue::Fraction(5, 8));
  CHECK(rue::commuting_probability(table_of("cyclic:6")) == rue::Fraction(1, 1));
}

TEST_CASE("degrees divide class sizes at unit-modulus values") {
  for (const char* spec : {"symmetric:3", "symmetric:4", "alternating:5", "dihedral:8",
                           "gamma:5", "dicyclic:12"}) {
    CHECK(rue::check_divisibility(table_of(spec)).empty());
  }
}

TEST_CASE("centralizer bound records for Sym3") {
  CharacterTable t = table_of("symmetric:3");
  auto records = rue::nonvanishing_bound_check(t);
  REQUIRE(records.size() == 6);
  for (const auto& r : records) {
    std::size_t order = t.group().element_order(r.element);
    CHECK(r.centralizer_order == rue::centralizer(t.group(), r.element).order());
    if (order == 1) {
      CHECK(r.nonvanishing);
      CHECK(r.centralizer_order == 6);
      CHECK_FALSE(r.equality);
      CHECK_FALSE(r.rue);
    } else if (order == 2) {
      CHECK_FALSE(r.nonvanishing);
    } else {
      CHECK(r.nonvanishing);
      CHECK(r.centralizer_order == 3);  // equals the class count
      CHECK(r.equality);
      CHECK(r.rue);
    }
  }
}

TEST_CASE("the bound records never contradict the floor") {
  for (const char* spec : {"symmetric:4", "alternating:5", "dicyclic:12", "gamma:4"}) {
    CharacterTable t = table_of(spec);
    std::size_t k = rue::k_of_group(t);
    for (const auto& r : rue::nonvanishing_bound_check(t)) {
      CHECK(r.equality == (r.centralizer_order == k));
      if (r.nonvanishing) {
        CHECK(r.centralizer_order >= k);
        // Among nonvanishing elements the tie is hit exactly at unit modulus.
        CHECK(r.equality == r.rue);
      }
      if (r.rue) CHECK(r.equality);
    }
  }
}

TEST_CASE("everything outside a unique nonabelian minimal normal subgroup vanishes") {
  GroupTable s5 = rue::build_group("symmetric:5");
  CharacterTable t = rue::character_table(s5);
  auto minimals = rue::minimal_normal_subgroups(s5);
  REQUIRE(minimals.size() == 1);
  REQUIRE(minimals[0].order() == 60);
  CHECK(rue::verify_vanishing_outside(t, minimals[0]));

  // Hypotheses are enforced: Sym3's minimal normal subgroup is abelian.
  GroupTable s3 = rue::build_group("symmetric:3");
  CharacterTable t3 = rue::character_table(s3);
  auto m3 = rue::minimal_normal_subgroups(s3);
  REQUIRE(m3.size() == 1);
  CHECK_THROWS_AS(rue::verify_vanishing_outside(t3, m3[0]), rue::HypothesisNotMet);
}

TEST_CASE("galois action permutes the rows of a table") {
  CharacterTable t = table_of("alternating:5");
  long e = t.conductor();
  std::size_t k = t.irreducible_count();
  std::map<std::vector<std::string>, std::size_t> row_index;
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<std::string> key;
    for (std::size_t c = 0; c < k; ++c) key.push_back(t.value(r, c).to_string());
    row_index[key] = r;
  }
  for (long u : rue::unit_exponents(e)) {
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<std::string> image;
      for (std::size_t c = 0; c < k; ++c) image.push_back(t.value(r, c).galois(u).to_string());
      CHECK(row_index.count(image) == 1);
    }
  }
}
