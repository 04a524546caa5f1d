#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rue {

using BigInt = boost::multiprecision::cpp_int;

// An element of Z[zeta_e], held in the canonical basis 1, zeta, ...,
// zeta^(phi(e)-1): coefficients are the remainder of the raw polynomial modulo
// the e-th cyclotomic polynomial, so equality of values is equality of
// coefficient vectors. Coefficients are unbounded integers. Values are
// immutable; all operations are pure, and binary operations require equal
// conductors (lift explicitly with lifted()).
class Cyclotomic {
 public:
  // The zero value of conductor e.
  explicit Cyclotomic(long conductor);

  // Reduces a raw coefficient vector (exponents read modulo e; any length).
  static Cyclotomic from_raw(long conductor, std::vector<BigInt> raw);
  static Cyclotomic integer(long conductor, BigInt n);
  static Cyclotomic root_of_unity(long conductor, long exponent);

  long conductor() const { return e_; }
  // Canonical coefficients, length phi(e).
  const std::vector<BigInt>& coeffs() const { return c_; }

  bool is_zero() const;
  // True iff the value is a rational integer (canonical tail is zero).
  bool is_rational() const;
  // The rational value; only meaningful when is_rational().
  const BigInt& rational_value() const { return c_[0]; }

  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  bool operator==(const Cyclotomic& rhs) const { return e_ == rhs.e_ && c_ == rhs.c_; }
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }
  bool operator==(long n) const;
  bool operator!=(long n) const { return !(*this == n); }

  // Lexicographic comparison of canonical coefficients (same conductor only).
  bool lex_less(const Cyclotomic& rhs) const;

  // The image under zeta -> zeta^k; requires gcd(k, e) = 1 (NonUnitExponent).
  Cyclotomic galois(long k) const;
  // Complex conjugate: the Galois image for k = e-1 (identity for e <= 2).
  Cyclotomic conjugate() const;
  // v * conj(v); fixed by conjugation, and equal to 1 exactly when the value
  // is a root of unity times a sign, i.e. has complex modulus 1.
  Cyclotomic norm_square() const;
  bool is_unit_modulus() const;

  // Exact division by a rational integer, or nullopt if any canonical
  // coefficient is not divisible.
  std::optional<Cyclotomic> divided_by(const BigInt& n) const;

  // Same value in the larger ring Z[zeta_m]; requires e | m.
  Cyclotomic lifted(long m) const;

  // Numerical embedding at exp(2*pi*i/e); for cross-checks in tests only.
  std::complex<double> embed() const;

  // "n" for rational integers, otherwise "e:[c0,c1,...]" with trailing zeros
  // trimmed from the canonical coefficients.
  std::string to_string() const;

 private:
  long e_ = 1;
  std::vector<BigInt> c_;  // length phi(e)
};

// The automorphism zeta_e -> zeta_e^k of Q(zeta_e); requires gcd(k, e) = 1.
class GaloisMap {
 public:
  GaloisMap(long conductor, long exponent);

  long conductor() const { return e_; }
  long exponent() const { return k_; }

  Cyclotomic apply(const Cyclotomic& v) const;
  GaloisMap compose(const GaloisMap& rhs) const;  // this after rhs

 private:
  long e_;
  long k_;
};

// All unit exponents 1 <= k < e with gcd(k, e) = 1 (just {1} for e = 1).
std::vector<long> unit_exponents(long conductor);

// Checks Galois stability under every unit exponent and returns the constant
// if the value is fixed by the full automorphism group, else nullopt.
std::optional<BigInt> rational_part_test(const Cyclotomic& v);

// Monic cyclotomic polynomial Phi_e as its coefficient vector (degree phi(e)),
// computed by exact division of x^e - 1 by the proper-divisor factors.
std::vector<BigInt> cyclotomic_polynomial(long e);

long euler_phi(long e);

}  // namespace rue
