#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "rue/permutation.hpp"

namespace rue {

inline constexpr std::size_t kDefaultEnumerationBound = 20000;

// A fully enumerated finite permutation group.
//
// Elements are listed breadth-first from the generating set: index 0 is the
// identity, each later BFS level is sorted by lexicographic image sequence, so
// the numbering is reproducible for a fixed generator list. Products are
// resolved through a hash index instead of a materialized |G|^2 table, which
// keeps groups of a few tens of thousands of elements cheap to hold.
//
// Instances are immutable after construction and safe to share across
// concurrent readers.
class GroupTable {
 public:
  // Enumerates <gens> by breadth-first closure. Throws InvalidPermutation on
  // degree mismatches and EnumerationBoundExceeded if the closure would pass
  // `bound` elements. An empty generator list yields the trivial group.
  static GroupTable from_generators(std::size_t degree, std::vector<Permutation> gens,
                                    std::size_t bound = kDefaultEnumerationBound);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

  // Index of p, or order() when p is not a member.
  std::size_t index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) != order(); }

  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inv(std::size_t i) const { return inverse_[i]; }
  std::size_t element_order(std::size_t i) const { return orders_[i]; }
  std::size_t power(std::size_t i, long long k) const;

  // Indices of the generators the table was built from (identity excluded).
  const std::vector<std::size_t>& generator_indices() const { return generators_; }

  // Smallest e >= 1 with g^e = 1 for all g.
  std::size_t exponent() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<std::size_t> generators_;
};

struct QuotientResult {
  GroupTable group;                     // G/N as the action on right cosets of N
  std::vector<std::size_t> projection;  // element index of G -> element index of G/N
};

// Factors G by the normal subgroup with the given (sorted) member indices.
// Throws NotNormal if the member set is not closed under conjugation.
QuotientResult quotient(const GroupTable& g, const std::vector<std::size_t>& normal_members);

// G x H acting on the disjoint union of the two point sets.
GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                          std::size_t bound = kDefaultEnumerationBound);

}  // namespace rue
