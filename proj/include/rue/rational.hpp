#pragma once

#include <numeric>
#include <string>

namespace rue {

// An exact reduced fraction with positive denominator.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Fraction& rhs) const { return num == rhs.num && den == rhs.den; }
  bool operator!=(const Fraction& rhs) const { return !(*this == rhs); }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace rue
