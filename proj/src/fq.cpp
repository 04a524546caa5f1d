#include "rue/fq.hpp"

#include <string>

#include "rue/errors.hpp"

namespace rue {

namespace {

using Poly = std::vector<long>;  // constant-first coefficients over F_p

Poly digits_of(long id, long p, long k) {
  Poly d(static_cast<std::size_t>(k), 0);
  for (long i = 0; i < k; ++i) {
    d[static_cast<std::size_t>(i)] = id % p;
    id /= p;
  }
  return d;
}

long id_of(const Poly& d, long p) {
  long id = 0;
  for (std::size_t i = d.size(); i-- > 0;) id = id * p + d[i];
  return id;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by the monic divisor b, coefficients mod p.
Poly poly_mod(Poly a, const Poly& b, long p) {
  trim(a);
  std::size_t db = b.size() - 1;  // b monic, degree db
  while (a.size() > db) {
    long lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        long& c = a[shift + i];
        c = ((c - lead * b[i]) % p + p) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& m, long p) {
  long k = static_cast<long>(m.size()) - 1;
  for (long d = 1; 2 * d <= k; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (long low = 0; low < count; ++low) {
      Poly div = digits_of(low, p, d);
      div.push_back(1);  // monic of degree d
      Poly r = poly_mod(m, div, p);
      if (r.empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<PrimePower> prime_power_decomposition(long q) {
  if (q < 2) return std::nullopt;
  long p = 0;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};
  long k = 0;
  long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, k};
}

FqField::FqField(long q) {
  std::optional<PrimePower> pp = prime_power_decomposition(q);
  if (!pp) throw NotPrimePower("not a prime power: " + std::to_string(q));
  q_ = q;
  p_ = pp->p;
  k_ = pp->k;

  if (k_ == 1) {
    modulus_ = {0, 1};  // x: the field is Z/p itself
  } else {
    // Candidates ordered lexicographically by (c_0, ..., c_{k-1}); the
    // enumeration rank therefore carries c_0 in its most significant digit.
    long count = 1;
    for (long i = 0; i < k_; ++i) count *= p_;
    bool found = false;
    for (long rank = 0; rank < count && !found; ++rank) {
      Poly low(static_cast<std::size_t>(k_), 0);
      long rest = rank;
      for (long i = k_ - 1; i >= 0; --i) {
        low[static_cast<std::size_t>(i)] = rest % p_;
        rest /= p_;
      }
      Poly m = low;
      m.push_back(1);
      if (is_irreducible(m, p_)) {
        modulus_ = std::move(m);
        found = true;
      }
    }
    if (!found) throw Error("no irreducible modulus found (internal defect)");
  }

  add_.assign(static_cast<std::size_t>(q_), std::vector<long>(static_cast<std::size_t>(q_), 0));
  mul_.assign(static_cast<std::size_t>(q_), std::vector<long>(static_cast<std::size_t>(q_), 0));
  neg_.assign(static_cast<std::size_t>(q_), 0);
  for (long a = 0; a < q_; ++a) {
    Poly da = digits_of(a, p_, k_);
    Poly na(static_cast<std::size_t>(k_), 0);
    for (long i = 0; i < k_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = id_of(na, p_);
    for (long b = 0; b < q_; ++b) {
      Poly db = digits_of(b, p_, k_);
      Poly s(static_cast<std::size_t>(k_), 0);
      for (long i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a][b] = id_of(s, p_);
      Poly prod(static_cast<std::size_t>(2 * k_ - 1), 0);
      for (long i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (long j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
      Poly r = poly_mod(std::move(prod), modulus_, p_);
      r.resize(static_cast<std::size_t>(k_), 0);
      mul_[a][b] = id_of(r, p_);
    }
  }

  generator_ = 0;
  for (long a = 1; a < q_ && generator_ == 0; ++a) {
    if (element_order(a) == q_ - 1) generator_ = a;
  }
  if (generator_ == 0) throw Error("multiplicative group has no generator (internal defect)");
}

long FqField::inv(long a) const {
  if (a == 0) throw Error("division by zero in finite field");
  for (long b = 1; b < q_; ++b) {
    if (mul_[a][b] == 1) return b;
  }
  throw Error("nonzero field element without inverse (internal defect)");
}

long FqField::pow(long a, long n) const {
  long acc = 1;
  long base = a;
  while (n > 0) {
    if (n & 1) acc = mul_[acc][base];
    base = mul_[base][base];
    n >>= 1;
  }
  return acc;
}

long FqField::monomial(long i) const {
  long id = 1;
  for (long j = 0; j < i; ++j) id *= p_;
  return id;
}

long FqField::element_order(long a) const {
  if (a == 0) throw Error("zero has no multiplicative order");
  long ord = 1;
  long cur = a;
  while (cur != 1) {
    cur = mul_[cur][a];
    ++ord;
  }
  return ord;
}

}  // namespace rue
