#pragma once

#include <stdexcept>
#include <string>

namespace rue {

// Base class for every error raised by this library. Each concrete type names
// the contract that was violated; messages carry the offending values.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A generator image sequence is not a bijection, or a point is out of range.
struct InvalidPermutation : Error {
  using Error::Error;
};

// Closure enumeration grew past the configured element bound.
struct EnumerationBoundExceeded : Error {
  using Error::Error;
};

// quotient() was asked to factor by a subgroup that is not normal.
struct NotNormal : Error {
  using Error::Error;
};

// The isomorphism oracle requires both groups to have the same order.
struct OrderMismatch : Error {
  using Error::Error;
};

// The isomorphism oracle refuses groups larger than its stated bound.
struct OracleBoundExceeded : Error {
  using Error::Error;
};

// A Galois map exponent k with gcd(k, e) != 1 does not define an automorphism.
struct NonUnitExponent : Error {
  using Error::Error;
};

// Arithmetic between cyclotomic values of different conductors requires an
// explicit lift; implicit mixing is rejected.
struct ConductorMismatch : Error {
  using Error::Error;
};

// An exact ring division had a nonzero remainder.
struct InexactDivision : Error {
  using Error::Error;
};

// A checked precondition of a verification op does not hold for the input.
struct HypothesisNotMet : Error {
  using Error::Error;
};

// Finite field construction needs a prime power order.
struct NotPrimePower : Error {
  using Error::Error;
};

// The one-dimensional affine construction needs q > 2.
struct QTooSmall : Error {
  using Error::Error;
};

// A part sequence that is not weakly decreasing or not strictly positive.
struct InvalidPartition : Error {
  using Error::Error;
};

// Two partitions fed to the recursion do not partition the same integer.
struct SizeMismatch : Error {
  using Error::Error;
};

// The witness scan exhausted all partitions (expected to be unreachable).
struct NoWitness : Error {
  using Error::Error;
};

// The witness scan only accepts cycle types of even permutations.
struct NotEvenCycleType : Error {
  using Error::Error;
};

// The witness scan only accepts n >= 6.
struct NTooSmall : Error {
  using Error::Error;
};

// predicted_rue_set called on a classification with no predicted set.
struct WrongVerdict : Error {
  using Error::Error;
};

// run_suite was handed a name outside the fixed suite list.
struct UnknownSuite : Error {
  using Error::Error;
};

// Group file could not be parsed; message carries file:line.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace rue
