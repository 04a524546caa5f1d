#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rue {

// A permutation of {0, ..., degree-1}, stored as its image sequence.
//
// Products compose as right actions: (p * q) applies p first, then q, i.e.
// (p * q)[i] = q[p[i]]. This orientation makes the permutation action on
// right cosets (see GroupTable::quotient) a homomorphism.
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;

  // Throws InvalidPermutation unless images is a bijection on {0,...,n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point apply(Point i) const { return images_[i]; }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;

  Permutation operator*(const Permutation& rhs) const;  // this first, then rhs
  Permutation inverse() const;

  // Smallest k >= 1 with p^k = identity.
  std::size_t order() const;
  Permutation power(long long k) const;

  bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Permutation& rhs) const { return images_ != rhs.images_; }
  bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// Disjoint-cycle rendering, fixed points omitted; identity renders as "()".
std::string cycle_string(const Permutation& p);

// Parses disjoint-cycle notation such as "(0 1 2)(3 4)" or "()" over the given
// degree. Points may be separated by spaces or commas. Throws InvalidPermutation
// on malformed input, out-of-range points, or a point repeated across cycles.
Permutation parse_cycles(const std::string& text, std::size_t degree);

// Sorted cycle lengths >= 2, padded with 1s to the degree: the cycle type as a
// partition of the degree (weakly decreasing).
std::vector<int> cycle_type(const Permutation& p);

}  // namespace rue
