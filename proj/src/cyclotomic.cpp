#include "rue/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "rue/errors.hpp"

namespace rue {

namespace {

// Per-conductor context: Phi_e and the canonical forms of the powers
// zeta^d for phi(e) <= d < e and for products (degree up to 2*phi(e)-2).
struct Ring {
  long e;
  long phi;
  std::vector<BigInt> modulus;                  // Phi_e, monic, degree phi
  std::vector<std::vector<BigInt>> high_power;  // x^(phi + j) mod Phi_e
};

// Exact division of polynomials (monic divisor), asserting zero remainder.
std::vector<BigInt> exact_poly_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  long deg_d = static_cast<long>(den.size()) - 1;
  long deg_n = static_cast<long>(num.size()) - 1;
  std::vector<BigInt> q(deg_n - deg_d + 1);
  for (long d = deg_n; d >= deg_d; --d) {
    BigInt f = num[d];
    q[d - deg_d] = f;
    if (f == 0) continue;
    for (long j = 0; j <= deg_d; ++j) num[d - deg_d + j] -= f * den[j];
  }
  for (const BigInt& r : num) {
    if (r != 0) throw Error("cyclotomic polynomial division left a remainder (internal defect)");
  }
  return q;
}

const Ring& ring_for(long e) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<Ring>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e);
  if (it != cache.end()) return *it->second;

  auto ring = std::make_unique<Ring>();
  ring->e = e;
  ring->modulus = cyclotomic_polynomial(e);
  ring->phi = static_cast<long>(ring->modulus.size()) - 1;

  long max_deg = std::max(e - 1, 2 * ring->phi - 2);
  ring->high_power.reserve(std::max<long>(0, max_deg - ring->phi + 1));
  // x^phi mod Phi = x^phi - Phi (monic), then multiply by x and reduce.
  std::vector<BigInt> cur(ring->phi);
  for (long j = 0; j < ring->phi; ++j) cur[j] = -ring->modulus[j];
  for (long d = ring->phi; d <= max_deg; ++d) {
    ring->high_power.push_back(cur);
    // cur <- x * cur mod Phi
    std::vector<BigInt> next(ring->phi);
    for (long j = 0; j + 1 < ring->phi; ++j) next[j + 1] = cur[j];
    const BigInt& top = cur[ring->phi - 1];
    if (top != 0) {
      for (long j = 0; j < ring->phi; ++j) next[j] -= top * ring->modulus[j];
    }
    cur = std::move(next);
  }
  const Ring& ref = *ring;
  cache.emplace(e, std::move(ring));
  return ref;
}

void check_same_conductor(long a, long b) {
  if (a != b) {
    throw ConductorMismatch("conductors " + std::to_string(a) + " and " + std::to_string(b) +
                            " cannot mix; lift explicitly");
  }
}

}  // namespace

long euler_phi(long e) {
  long result = e;
  long n = e;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<BigInt> cyclotomic_polynomial(long e) {
  if (e < 1) throw Error("conductor must be positive");
  // x^e - 1 divided by Phi_d for every proper divisor d, recursively.
  std::vector<BigInt> num(e + 1);
  num[0] = -1;
  num[e] = 1;
  for (long d = 1; d < e; ++d) {
    if (e % d == 0) num = exact_poly_div(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

Cyclotomic::Cyclotomic(long conductor) : e_(conductor) {
  if (conductor < 1) throw Error("conductor must be positive");
  c_.assign(ring_for(conductor).phi, BigInt(0));
}

Cyclotomic Cyclotomic::from_raw(long conductor, std::vector<BigInt> raw) {
  const Ring& ring = ring_for(conductor);
  Cyclotomic out(conductor);
  // Fold exponents into [0, e), then push the window [phi, e) down.
  std::vector<BigInt> folded(conductor);
  for (std::size_t d = 0; d < raw.size(); ++d) {
    if (raw[d] != 0) folded[d % conductor] += raw[d];
  }
  for (long j = 0; j < ring.phi && j < conductor; ++j) out.c_[j] = std::move(folded[j]);
  for (long d = ring.phi; d < conductor; ++d) {
    if (folded[d] == 0) continue;
    const std::vector<BigInt>& row = ring.high_power[d - ring.phi];
    for (long j = 0; j < ring.phi; ++j) {
      if (row[j] != 0) out.c_[j] += folded[d] * row[j];
    }
  }
  return out;
}

Cyclotomic Cyclotomic::integer(long conductor, BigInt n) {
  Cyclotomic out(conductor);
  out.c_[0] = std::move(n);
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(long conductor, long exponent) {
  long d = exponent % conductor;
  if (d < 0) d += conductor;
  const Ring& ring = ring_for(conductor);
  Cyclotomic out(conductor);
  if (d < ring.phi) {
    out.c_[d] = 1;
  } else {
    out.c_ = ring.high_power[d - ring.phi];
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const BigInt& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j) {
    if (c_[j] != 0) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  check_same_conductor(e_, rhs.e_);
  Cyclotomic out = *this;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (rhs.c_[j] != 0) out.c_[j] += rhs.c_[j];
  }
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_same_conductor(e_, rhs.e_);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (rhs.c_[j] != 0) c_[j] += rhs.c_[j];
  }
  return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
  check_same_conductor(e_, rhs.e_);
  Cyclotomic out = *this;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (rhs.c_[j] != 0) out.c_[j] -= rhs.c_[j];
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (BigInt& x : out.c_) x = -x;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  check_same_conductor(e_, rhs.e_);
  const Ring& ring = ring_for(e_);
  long phi = ring.phi;
  // Sparse schoolbook product into degree <= 2*phi-2, then fold the high part.
  std::vector<BigInt> prod(2 * phi - 1 > 0 ? 2 * phi - 1 : 1);
  for (long i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (long j = 0; j < phi; ++j) {
      if (rhs.c_[j] != 0) prod[i + j] += c_[i] * rhs.c_[j];
    }
  }
  Cyclotomic out(e_);
  for (long j = 0; j < phi; ++j) out.c_[j] = std::move(prod[j]);
  for (long d = phi; d < static_cast<long>(prod.size()); ++d) {
    if (prod[d] == 0) continue;
    const std::vector<BigInt>& row = ring.high_power[d - phi];
    for (long j = 0; j < phi; ++j) {
      if (row[j] != 0) out.c_[j] += prod[d] * row[j];
    }
  }
  return out;
}

bool Cyclotomic::operator==(long n) const {
  if (c_[0] != n) return false;
  return is_rational();
}

bool Cyclotomic::lex_less(const Cyclotomic& rhs) const {
  check_same_conductor(e_, rhs.e_);
  return std::lexicographical_compare(c_.begin(), c_.end(), rhs.c_.begin(), rhs.c_.end());
}

Cyclotomic Cyclotomic::galois(long k) const {
  long kk = ((k % e_) + e_) % e_;
  if (e_ == 1) kk = 0;  // the trivial automorphism group
  else if (std::gcd(kk, e_) != 1) {
    throw NonUnitExponent("exponent " + std::to_string(k) + " is not a unit modulo " +
                          std::to_string(e_));
  }
  std::vector<BigInt> raw(e_);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != 0) raw[(static_cast<long>(j) * kk) % e_] += c_[j];
  }
  return from_raw(e_, std::move(raw));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (e_ <= 2) return *this;
  return galois(e_ - 1);
}

Cyclotomic Cyclotomic::norm_square() const { return *this * conjugate(); }

bool Cyclotomic::is_unit_modulus() const { return norm_square() == 1; }

std::optional<Cyclotomic> Cyclotomic::divided_by(const BigInt& n) const {
  if (n == 0) throw InexactDivision("division by zero");
  Cyclotomic out(e_);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] % n != 0) return std::nullopt;
    out.c_[j] = c_[j] / n;
  }
  return out;
}

Cyclotomic Cyclotomic::lifted(long m) const {
  if (m % e_ != 0) {
    throw ConductorMismatch("cannot lift conductor " + std::to_string(e_) + " into " +
                            std::to_string(m));
  }
  long scale = m / e_;
  std::vector<BigInt> raw(m);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != 0) raw[static_cast<long>(j) * scale] += c_[j];
  }
  return from_raw(m, std::move(raw));
}

std::complex<double> Cyclotomic::embed() const {
  std::complex<double> sum = 0.0;
  const double tau = 6.283185307179586476925287;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double cd = c_[j].convert_to<double>();
    double angle = tau * static_cast<double>(j) / static_cast<double>(e_);
    sum += cd * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  if (is_rational()) {
    out << c_[0];
    return out.str();
  }
  std::size_t last = c_.size();
  while (last > 0 && c_[last - 1] == 0) --last;
  out << e_ << ":[";
  for (std::size_t j = 0; j < last; ++j) {
    if (j) out << ',';
    out << c_[j];
  }
  out << ']';
  return out.str();
}

GaloisMap::GaloisMap(long conductor, long exponent) : e_(conductor) {
  k_ = ((exponent % conductor) + conductor) % conductor;
  if (conductor == 1) {
    k_ = 0;
  } else if (std::gcd(k_, conductor) != 1) {
    throw NonUnitExponent("exponent " + std::to_string(exponent) + " is not a unit modulo " +
                          std::to_string(conductor));
  }
}

Cyclotomic GaloisMap::apply(const Cyclotomic& v) const {
  check_same_conductor(e_, v.conductor());
  return v.galois(k_);
}

GaloisMap GaloisMap::compose(const GaloisMap& rhs) const {
  check_same_conductor(e_, rhs.e_);
  if (e_ == 1) return GaloisMap(1, 1);
  return GaloisMap(e_, (k_ * rhs.k_) % e_);
}

std::vector<long> unit_exponents(long conductor) {
  std::vector<long> out;
  if (conductor == 1) return {1};
  for (long k = 1; k < conductor; ++k) {
    if (std::gcd(k, conductor) == 1) out.push_back(k);
  }
  return out;
}

std::optional<BigInt> rational_part_test(const Cyclotomic& v) {
  for (long k : unit_exponents(v.conductor())) {
    if (v.galois(k) != v) return std::nullopt;
  }
  // Galois-stable canonical values are constant.
  if (!v.is_rational()) throw Error("Galois-stable value with nonconstant coefficients (defect)");
  return v.rational_value();
}

}  // namespace rue
