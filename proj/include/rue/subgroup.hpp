#pragma once

#include <atomic>
#include <cstddef>
#include <vector>

#include "rue/group.hpp"

namespace rue {

// A subgroup of an enumerated group, held as the sorted list of member element
// indices. The parent table must outlive the subgroup. Structural flags are
// computed on first use and cached; recomputation races are benign (both
// writers store the same answer), so instances are safe to share across
// concurrent readers.
class Subgroup {
 public:
  Subgroup(const GroupTable& parent, std::vector<std::size_t> members);

  // Copies transfer the cached flags; the atomics themselves cannot be
  // copied member-wise.
  Subgroup(const Subgroup& other);
  Subgroup& operator=(const Subgroup& other);

  const GroupTable& parent() const { return *parent_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(std::size_t element) const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole_group() const { return members_.size() == parent_->order(); }

  bool is_normal() const;
  bool is_abelian() const;
  bool is_nilpotent() const;

  bool operator==(const Subgroup& rhs) const { return members_ == rhs.members_; }

 private:
  const GroupTable* parent_;
  std::vector<std::size_t> members_;
  mutable std::atomic<signed char> normal_{-1};
  mutable std::atomic<signed char> abelian_{-1};
  mutable std::atomic<signed char> nilpotent_{-1};
};

// Closure of the given element indices under multiplication, as sorted indices.
std::vector<std::size_t> subgroup_closure(const GroupTable& g,
                                          const std::vector<std::size_t>& generators);

Subgroup trivial_subgroup(const GroupTable& g);
Subgroup whole_group(const GroupTable& g);

Subgroup centralizer(const GroupTable& g, std::size_t element);
Subgroup center(const GroupTable& g);
Subgroup derived_subgroup(const GroupTable& g);

// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const GroupTable& g, const std::vector<std::size_t>& seed);

// A Sylow p-subgroup, grown inside successive normalizers until its index is
// coprime to p. Returns the trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const GroupTable& g, std::size_t p);

// Intersection of all conjugates of a Sylow p-subgroup: the largest normal
// p-subgroup.
Subgroup p_core(const GroupTable& g, std::size_t p);

// Product of the p-cores over the primes dividing |G|: the largest nilpotent
// normal subgroup.
Subgroup fitting_subgroup(const GroupTable& g);

// Ascending central series Z1 <= Z2 <= ..., strictly increasing until stable.
// For a centerless group this is the single term [trivial].
std::vector<Subgroup> upper_central_series(const GroupTable& g);
Subgroup hypercenter(const GroupTable& g);

// All minimal nonidentity normal subgroups, sorted by (order, member list).
std::vector<Subgroup> minimal_normal_subgroups(const GroupTable& g);

struct StructuralFlags {
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  bool metabelian = false;  // derived subgroup abelian
};

StructuralFlags structural_flags(const GroupTable& g);

// Normalizer of the subgroup with the given sorted members.
Subgroup normalizer(const GroupTable& g, const std::vector<std::size_t>& members);

// Derived subgroup of the subgroup with the given members, inside g.
std::vector<std::size_t> derived_of(const GroupTable& g, const std::vector<std::size_t>& members);

// Prime factors of n, ascending, without multiplicity.
std::vector<std::size_t> prime_divisors(std::size_t n);

}  // namespace rue
