#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rue/conjugacy.hpp"
#include "rue/cyclotomic.hpp"
#include "rue/group.hpp"
#include "rue/rational.hpp"
#include "rue/subgroup.hpp"

namespace rue {

// The complete exact character table of a finite group.
//
// Values live in Z[zeta_e] for e the group exponent. Rows (irreducible
// characters) are sorted by (degree, lexicographic canonical value sequence);
// columns follow the conjugacy class order of ConjClassSet. Construction
// computes values modulo a prime p = 1 (mod e), p > 2*sqrt(|G|), as
// simultaneous eigenvectors of the class sum matrices, and lifts them exactly
// through root-of-unity multiplicities; the invariants (row count = class
// count, sum of squared degrees = |G|, exact orthogonality) are enforced by
// the verification suites and tests.
class CharacterTable {
 public:
  const GroupTable& group() const { return *group_; }
  const ConjClassSet& classes() const { return classes_; }
  long conductor() const { return conductor_; }
  std::uint64_t modular_prime() const { return prime_; }

  std::size_t irreducible_count() const { return values_.size(); }
  long long degree(std::size_t row) const { return degrees_[row]; }
  const Cyclotomic& value(std::size_t row, std::size_t cls) const { return values_[row][cls]; }
  const std::vector<Cyclotomic>& row(std::size_t r) const { return values_[r]; }

 private:
  friend CharacterTable character_table(const GroupTable& g);
  const GroupTable* group_ = nullptr;
  ConjClassSet classes_;
  long conductor_ = 1;
  std::uint64_t prime_ = 0;
  std::vector<long long> degrees_;
  std::vector<std::vector<Cyclotomic>> values_;

  CharacterTable(const GroupTable& g, ConjClassSet classes)
      : group_(&g), classes_(std::move(classes)) {}
};

CharacterTable character_table(const GroupTable& g);

// a[i][j][k] = number of ways a fixed element of class k factors as x*y with
// x in class i, y in class j. Satisfies sum_k a[i][j][k]*|C_k| = |C_i|*|C_j|.
std::vector<std::vector<std::vector<long long>>> class_multiplication_constants(
    const GroupTable& g, const ConjClassSet& classes);

// The central character value |C_c| * chi_i(c) / chi_i(1); the division is
// exact for every irreducible character (InexactDivision otherwise).
Cyclotomic omega(const CharacterTable& t, std::size_t row, std::size_t cls);

// Character-side verdict for one element.
struct RueVerdict {
  std::size_t element = 0;
  bool is_nonvanishing = false;  // no character vanishes on the element
  bool is_rue = false;           // every character value has modulus 1
  // Witness rows: a vanishing character when !is_nonvanishing; a character of
  // modulus != 1 when nonvanishing but not RUE; irreducible_count() otherwise.
  std::size_t witness_row = 0;
};

std::vector<RueVerdict> rue_verdicts(const CharacterTable& t);

std::size_t k_of_group(const CharacterTable& t);

// k(G)/|G| as an exact reduced fraction.
Fraction commuting_probability(const CharacterTable& t);

// Wherever a character value has modulus 1, its degree must divide the class
// size; returns the (row, class) pairs violating that, which must be empty.
struct DivisibilityViolation {
  std::size_t row;
  std::size_t cls;
};
std::vector<DivisibilityViolation> check_divisibility(const CharacterTable& t);

// Per-element record for the centralizer bound on nonvanishing elements:
// |C_G(x)| >= k(G), with equality exactly for elements of unit modulus
// everywhere.
struct BoundRecord {
  std::size_t element = 0;
  bool nonvanishing = false;
  std::size_t centralizer_order = 0;
  bool equality = false;
  bool rue = false;
};
std::vector<BoundRecord> nonvanishing_bound_check(const CharacterTable& t);

// For a group whose unique minimal normal subgroup N is nonabelian with G/N
// solvable, every element outside N is a zero of some irreducible character.
// Preconditions are checked (HypothesisNotMet); returns true when the
// vanishing statement holds for every element outside N.
bool verify_vanishing_outside(const CharacterTable& t, const Subgroup& n);

}  // namespace rue
