#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace rue {

struct PrimePower {
  long p = 0;  // prime base
  long k = 0;  // exponent >= 1
};

// q = p^k with p prime, or nullopt.
std::optional<PrimePower> prime_power_decomposition(long q);

// The finite field with q = p^k elements, as exact add/mul tables.
//
// Elements are the q polynomials over F_p of degree < k, numbered by base-p
// ids with the constant coefficient as the least significant digit. The
// modulus is the first monic irreducible of degree k when candidates are
// ordered lexicographically by (constant, ..., leading) coefficient tuple;
// irreducibility is established by trial division against every monic of
// lower degree. A multiplicative generator is located and its order verified
// at construction. Immutable after construction.
class FqField {
 public:
  explicit FqField(long q);  // NotPrimePower unless q = p^k >= 2

  long q() const { return q_; }
  long p() const { return p_; }
  long k() const { return k_; }
  // Coefficients constant-first, length k+1, leading coefficient 1.
  const std::vector<long>& modulus() const { return modulus_; }

  long add(long a, long b) const { return add_[a][b]; }
  long mul(long a, long b) const { return mul_[a][b]; }
  long neg(long a) const { return neg_[a]; }
  long inv(long a) const;  // a nonzero
  long pow(long a, long n) const;

  // id of the monomial x^i for 0 <= i < k.
  long monomial(long i) const;
  // Smallest id generating the multiplicative group.
  long generator() const { return generator_; }
  // Multiplicative order of a nonzero element.
  long element_order(long a) const;

 private:
  long q_ = 0, p_ = 0, k_ = 0;
  std::vector<long> modulus_;
  std::vector<std::vector<long>> add_, mul_;
  std::vector<long> neg_;
  long generator_ = 0;
};

}  // namespace rue
