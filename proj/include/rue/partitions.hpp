#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rue {

// An integer partition: weakly decreasing positive parts. The empty partition
// (of 0) is allowed. Immutable.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);  // InvalidPartition

  long n() const { return n_; }
  std::size_t rows() const { return parts_.size(); }
  long part(std::size_t i) const { return parts_[i]; }
  const std::vector<long>& parts() const { return parts_; }

  bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }
  bool operator!=(const Partition& rhs) const { return parts_ != rhs.parts_; }
  bool operator<(const Partition& rhs) const { return parts_ < rhs.parts_; }

  // Comma-separated parts, e.g. "5,2"; empty string for the empty partition.
  std::string to_string() const;
  static Partition parse(const std::string& text);  // InvalidPartition

 private:
  std::vector<long> parts_;
  long n_ = 0;
};

// h[i][j] = arm + leg + 1 for each cell of the Young diagram.
using HookGrid = std::vector<std::vector<long>>;
HookGrid hook_lengths(const Partition& p);

Partition conjugate_partition(const Partition& p);
bool is_self_conjugate(const Partition& p);

// n! / (product of hook lengths): the number of standard Young tableaux, and
// the degree of the corresponding symmetric group character.
long long hook_degree(const Partition& p);

// Exact symmetric group character value: the character labeled by lambda at
// the class of cycle type mu, by recursive rim-hook removal of the largest
// part of mu (memoized). SizeMismatch unless |lambda| = |mu|.
long long mn_value(const Partition& lambda, const Partition& mu);

// For shapes whose second row hook h_{2,1} is shorter than beta_1 (0 when
// there is no second row) and whose first-row overhang gamma_1 - gamma_2 is
// at least beta_1 (HypothesisNotMet otherwise): removing beta_1 must come
// down to truncating the first row. Returns true when the value at beta and
// the value of the truncated shape at the remaining parts agree, computed
// independently.
bool strip_identity_check(const Partition& gamma, const Partition& beta);

// True iff no hook length is divisible by p.
bool is_p_defect_zero(const Partition& p, long prime);

// A permutation of cycle type alpha is even iff n minus the number of parts
// is even.
bool is_even_cycle_type(const Partition& alpha);

// For the cycle type alpha of an even permutation with |alpha| = n >= 6:
// a non-self-conjugate lambda whose character value at alpha is neither 1
// nor -1. Candidates (n-2,1,1), (n-2,2), (n-s,1^s) for s the smallest part
// of alpha are tried first, then every partition of n in lexicographic
// order. NTooSmall / NotEvenCycleType on bad input; NoWitness if the scan
// exhausts (which would refute the classification this verifies).
Partition lemma33_witness(const Partition& alpha);

// All partitions of n, ordered lexicographically by part sequence.
std::vector<Partition> partitions_of(long n);

}  // namespace rue
