#include "rue/character_table.hpp"

#include <algorithm>
#include <numeric>

#include "rue/errors.hpp"

namespace rue {

namespace {

using u64 = std::uint64_t;

u64 mod_mul(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 mod_pow(u64 base, u64 exp, u64 p) {
  u64 acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = mod_mul(acc, base, p);
    base = mod_mul(base, base, p);
    exp >>= 1;
  }
  return acc;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a % p, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Smallest prime p = 1 (mod e) with p^2 > 4|G| (so degrees and multiplicities
// lift uniquely from their residues).
u64 choose_modular_prime(std::size_t order, std::size_t exponent) {
  for (u64 t = 1;; ++t) {
    u64 p = t * exponent + 1;
    if (p * p > 4 * static_cast<u64>(order) && is_prime(p)) return p;
  }
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 r = 2;; ++r) {
    bool ok = true;
    for (u64 q : factors) {
      if (mod_pow(r, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
  }
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns pivot column per row.
std::vector<std::size_t> rref(Mat& m, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size();
  if (rows == 0) return pivots;
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    u64 inv = mod_inv(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = mod_mul(m[r][j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = (m[i][j] + p - mod_mul(f, m[r][j], p)) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Nullspace basis (as rows) of a square matrix, deterministic.
Mat nullspace(Mat m, u64 p) {
  std::size_t n = m.size();
  std::vector<std::size_t> pivots = rref(m, p);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      // pivot column value determined by the free column's entry
      v[pivots[r]] = (p - m[r][free]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial (monic, ascending coefficients) via Hessenberg
// reduction and the leading-minor recurrence.
Vec char_poly(Mat h, u64 p) {
  std::size_t d = h.size();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < d; ++j) {
    std::size_t sel = d;
    for (std::size_t i = j + 1; i < d; ++i) {
      if (h[i][j] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == d) continue;
    std::swap(h[j + 1], h[sel]);
    for (std::size_t i = 0; i < d; ++i) std::swap(h[i][j + 1], h[i][sel]);
    u64 inv = mod_inv(h[j + 1][j], p);
    for (std::size_t i = j + 2; i < d; ++i) {
      if (h[i][j] == 0) continue;
      u64 f = mod_mul(h[i][j], inv, p);
      for (std::size_t c = 0; c < d; ++c) {
        h[i][c] = (h[i][c] + p - mod_mul(f, h[j + 1][c], p)) % p;
      }
      for (std::size_t r = 0; r < d; ++r) {
        h[r][j + 1] = (h[r][j + 1] + mod_mul(f, h[r][i], p)) % p;
      }
    }
  }

  // p_k = (x - h[k][k]) p_{k-1} - sum_m h[m][k] (prod subdiagonals) p_{m-1}
  std::vector<Vec> minors(d + 1);
  minors[0] = {1};
  for (std::size_t k = 1; k <= d; ++k) {
    const Vec& prev = minors[k - 1];
    Vec cur(k + 1, 0);
    u64 diag = h[k - 1][k - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = (cur[i + 1] + prev[i]) % p;
      cur[i] = (cur[i] + p - mod_mul(diag, prev[i], p)) % p;
    }
    u64 beta = 1;
    for (std::size_t m = k - 1; m >= 1; --m) {
      beta = mod_mul(beta, h[m][m - 1], p);
      if (beta == 0) break;
      u64 coeff = mod_mul(h[m - 1][k - 1], beta, p);
      if (coeff != 0) {
        const Vec& pm = minors[m - 1];
        for (std::size_t i = 0; i < pm.size(); ++i) {
          cur[i] = (cur[i] + p - mod_mul(coeff, pm[i], p)) % p;
        }
      }
    }
    minors[k] = std::move(cur);
  }
  return minors[d];
}

struct ModularTable {
  u64 p = 0;
  u64 root = 0;                    // primitive root of p
  std::vector<u64> degrees;        // chi(1) mod p, lifted below p/2
  std::vector<Vec> theta;          // character values mod p, [row][class]
};

// The class sum matrix (A_i)[j][k] = a_{ijk}, built over one class.
Mat class_matrix(const GroupTable& g, const ConjClassSet& cls, std::size_t i, u64 p) {
  std::size_t k = cls.count();
  Mat a(k, Vec(k, 0));
  for (std::size_t kc = 0; kc < k; ++kc) {
    std::size_t z = cls.cls(kc).representative;
    for (std::size_t x : cls.cls(i).members) {
      std::size_t j = cls.class_of(g.mul(g.inv(x), z));
      a[j][kc] = (a[j][kc] + 1) % p;
    }
  }
  return a;
}

ModularTable modular_character_table(const GroupTable& g, const ConjClassSet& cls, u64 p) {
  std::size_t k = cls.count();

  // Split F_p^k into the common eigenspaces of the class sum matrices. Each
  // one-dimensional common eigenspace is spanned by the central character
  // vector w with w[j] = |C_j| chi(g_j) / chi(1) mod p.
  std::vector<Mat> spaces;
  {
    Mat full(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < k; ++i) {
    bool all_split = true;
    for (const Mat& s : spaces) {
      if (s.size() > 1) {
        all_split = false;
        break;
      }
    }
    if (all_split) break;

    Mat a = class_matrix(g, cls, i, p);
    std::vector<Mat> next;
    for (Mat& s : spaces) {
      if (s.size() <= 1) {
        next.push_back(std::move(s));
        continue;
      }
      std::size_t d = s.size();
      std::vector<std::size_t> pivots = rref(s, p);  // normalize basis first
      // Restriction R with columns = coordinates of A*b_r.
      Mat r_mat(d, Vec(d, 0));
      for (std::size_t rcol = 0; rcol < d; ++rcol) {
        Vec image(k, 0);
        for (std::size_t row = 0; row < k; ++row) {
          u64 acc = 0;
          for (std::size_t c = 0; c < k; ++c) {
            if (a[row][c] != 0 && s[rcol][c] != 0) acc = (acc + mod_mul(a[row][c], s[rcol][c], p)) % p;
          }
          image[row] = acc;
        }
        for (std::size_t srow = 0; srow < d; ++srow) r_mat[srow][rcol] = image[pivots[srow]];
        // Invariance check: image must equal sum of coordinates * basis.
        for (std::size_t c = 0; c < k; ++c) {
          u64 acc = 0;
          for (std::size_t srow = 0; srow < d; ++srow) {
            if (r_mat[srow][rcol] != 0 && s[srow][c] != 0)
              acc = (acc + mod_mul(r_mat[srow][rcol], s[srow][c], p)) % p;
          }
          if (acc != image[c]) throw Error("class matrix broke subspace invariance (internal defect)");
        }
      }

      Vec cp = char_poly(r_mat, p);
      std::size_t split_dims = 0;
      for (u64 lam = 0; lam < p; ++lam) {
        // Horner evaluation.
        u64 val = 0;
        for (std::size_t ci = cp.size(); ci-- > 0;) val = (mod_mul(val, lam, p) + cp[ci]) % p;
        if (val != 0) continue;
        Mat shifted = r_mat;
        for (std::size_t di = 0; di < d; ++di) shifted[di][di] = (shifted[di][di] + p - lam) % p;
        Mat coords = nullspace(std::move(shifted), p);
        if (coords.empty()) continue;
        Mat sub;
        for (const Vec& cv : coords) {
          Vec v(k, 0);
          for (std::size_t srow = 0; srow < d; ++srow) {
            if (cv[srow] == 0) continue;
            for (std::size_t c = 0; c < k; ++c) {
              if (s[srow][c] != 0) v[c] = (v[c] + mod_mul(cv[srow], s[srow][c], p)) % p;
            }
          }
          sub.push_back(std::move(v));
        }
        rref(sub, p);
        split_dims += sub.size();
        next.push_back(std::move(sub));
      }
      if (split_dims != d) throw Error("eigenspace splitting lost dimensions (internal defect)");
    }
    spaces = std::move(next);
  }

  for (const Mat& s : spaces) {
    if (s.size() != 1) throw Error("common eigenspace of dimension > 1 (internal defect)");
  }
  if (spaces.size() != k) throw Error("wrong number of common eigenspaces (internal defect)");

  // Inverse-class table for the degree formula.
  std::vector<std::size_t> inv_class(k);
  for (std::size_t j = 0; j < k; ++j) {
    inv_class[j] = cls.class_of(g.inv(cls.cls(j).representative));
  }
  std::vector<u64> class_size(k), class_size_inv(k);
  for (std::size_t j = 0; j < k; ++j) {
    class_size[j] = cls.cls(j).members.size() % p;
    class_size_inv[j] = mod_inv(class_size[j], p);
  }

  ModularTable out;
  out.p = p;
  out.root = primitive_root(p);
  u64 order_mod = g.order() % p;
  for (const Mat& s : spaces) {
    Vec w = s[0];
    if (w[0] == 0) throw Error("central character with vanishing identity coordinate (defect)");
    u64 scale = mod_inv(w[0], p);
    for (u64& x : w) x = mod_mul(x, scale, p);

    u64 sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      sum = (sum + mod_mul(mod_mul(w[j], w[inv_class[j]], p), class_size_inv[j], p)) % p;
    }
    if (sum == 0) throw Error("degree normalization sum vanished (internal defect)");
    u64 deg_sq = mod_mul(order_mod, mod_inv(sum, p), p);
    u64 deg = 0;
    for (u64 t = 1; 2 * t < p; ++t) {
      if (mod_mul(t, t, p) == deg_sq) {
        deg = t;
        break;
      }
    }
    if (deg == 0) throw Error("no degree below p/2 with the required square (internal defect)");

    Vec theta(k);
    for (std::size_t j = 0; j < k; ++j) {
      theta[j] = mod_mul(mod_mul(deg, w[j], p), class_size_inv[j], p);
    }
    out.degrees.push_back(deg);
    out.theta.push_back(std::move(theta));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::vector<long long>>> class_multiplication_constants(
    const GroupTable& g, const ConjClassSet& cls) {
  std::size_t k = cls.count();
  std::vector<std::vector<std::vector<long long>>> a(
      k, std::vector<std::vector<long long>>(k, std::vector<long long>(k, 0)));
  for (std::size_t kc = 0; kc < k; ++kc) {
    std::size_t z = cls.cls(kc).representative;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t x : cls.cls(i).members) {
        a[i][cls.class_of(g.mul(g.inv(x), z))][kc] += 1;
      }
    }
  }
  return a;
}

CharacterTable character_table(const GroupTable& g) {
  CharacterTable table(g, conjugacy_classes(g));
  const ConjClassSet& cls = table.classes_;
  std::size_t k = cls.count();
  long e = static_cast<long>(g.exponent());
  table.conductor_ = e;

  u64 p = choose_modular_prime(g.order(), g.exponent());
  table.prime_ = p;
  ModularTable mt = modular_character_table(g, cls, p);

  // Exact lifting: on a class of element order m the value is a sum of m-th
  // roots of unity; the multiplicity of each is recovered from the character
  // values on the power classes, as residues below p.
  u64 z_e = mod_pow(mt.root, (p - 1) / static_cast<u64>(e), p);
  // The power-class map and the per-class root constants depend only on the
  // class, so compute them once instead of per row.
  struct ClassLift {
    std::size_t m;
    u64 z_m_inv;
    u64 m_inv;
    std::vector<std::size_t> power_cls;
  };
  std::vector<ClassLift> lift;
  lift.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    ClassLift cl;
    cl.m = g.element_order(cls.cls(c).representative);
    u64 z_m = mod_pow(z_e, static_cast<u64>(e) / cl.m, p);
    cl.z_m_inv = mod_inv(z_m, p);
    cl.m_inv = mod_inv(cl.m % p, p);
    cl.power_cls.resize(cl.m);
    for (std::size_t s = 0; s < cl.m; ++s) {
      cl.power_cls[s] = cls.power_class(c, static_cast<long long>(s));
    }
    lift.push_back(std::move(cl));
  }
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<long long> degrees;
  std::vector<u64> theta_s;
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<Cyclotomic> row;
    row.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
      const ClassLift& cl = lift[c];
      std::size_t m = cl.m;
      theta_s.resize(m);
      for (std::size_t s = 0; s < m; ++s) theta_s[s] = mt.theta[r][cl.power_cls[s]];
      std::vector<BigInt> raw(static_cast<std::size_t>(e), BigInt(0));
      u64 total = 0;
      for (std::size_t t = 0; t < m; ++t) {
        u64 acc = 0;
        u64 zpow = mod_pow(cl.z_m_inv, t, p);
        u64 cur = 1;
        for (std::size_t s = 0; s < m; ++s) {
          acc = (acc + mod_mul(theta_s[s], cur, p)) % p;
          cur = mod_mul(cur, zpow, p);
        }
        u64 mult = mod_mul(acc, cl.m_inv, p);
        total += mult;
        if (mult != 0) raw[t * (static_cast<std::size_t>(e) / m)] += BigInt(mult);
      }
      if (total != mt.degrees[r]) {
        throw Error("root-of-unity multiplicities do not sum to the degree (internal defect)");
      }
      row.push_back(Cyclotomic::from_raw(e, std::move(raw)));
    }
    rows.push_back(std::move(row));
    degrees.push_back(static_cast<long long>(mt.degrees[r]));
  }

  // Rows ordered by (degree, lexicographic canonical value sequence).
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    for (std::size_t c = 0; c < k; ++c) {
      if (rows[a][c] != rows[b][c]) return rows[a][c].lex_less(rows[b][c]);
    }
    return false;
  });
  for (std::size_t i : perm) {
    table.degrees_.push_back(degrees[i]);
    table.values_.push_back(std::move(rows[i]));
  }
  return table;
}

Cyclotomic omega(const CharacterTable& t, std::size_t row, std::size_t cls) {
  BigInt size(static_cast<long long>(t.classes().cls(cls).members.size()));
  Cyclotomic scaled = t.value(row, cls) * Cyclotomic::integer(t.conductor(), size);
  std::optional<Cyclotomic> q = scaled.divided_by(BigInt(t.degree(row)));
  if (!q) {
    throw InexactDivision("central character value is not an algebraic integer as computed");
  }
  return *q;
}

std::size_t k_of_group(const CharacterTable& t) { return t.classes().count(); }

Fraction commuting_probability(const CharacterTable& t) {
  return Fraction(static_cast<long long>(t.classes().count()),
                  static_cast<long long>(t.group().order()));
}

std::vector<DivisibilityViolation> check_divisibility(const CharacterTable& t) {
  std::vector<DivisibilityViolation> out;
  std::size_t k = t.classes().count();
  for (std::size_t r = 0; r < t.irreducible_count(); ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (!t.value(r, c).is_unit_modulus()) continue;
      long long size = static_cast<long long>(t.classes().cls(c).members.size());
      if (size % t.degree(r) != 0) out.push_back({r, c});
    }
  }
  return out;
}

std::vector<RueVerdict> rue_verdicts(const CharacterTable& t) {
  std::size_t k = t.classes().count();
  std::size_t rows = t.irreducible_count();
  // Per-class verdicts; every element inherits its class verdict.
  std::vector<RueVerdict> cls_verdict(k);
  for (std::size_t c = 0; c < k; ++c) {
    RueVerdict v;
    v.is_nonvanishing = true;
    v.is_rue = true;
    v.witness_row = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t.value(r, c).is_zero()) {
        v.is_nonvanishing = false;
        v.is_rue = false;
        v.witness_row = r;
        break;
      }
      if (v.is_rue && !t.value(r, c).is_unit_modulus()) {
        v.is_rue = false;
        v.witness_row = r;
      }
    }
    cls_verdict[c] = v;
  }
  std::vector<RueVerdict> out(t.group().order());
  for (std::size_t x = 0; x < t.group().order(); ++x) {
    out[x] = cls_verdict[t.classes().class_of(x)];
    out[x].element = x;
  }
  return out;
}

std::vector<BoundRecord> nonvanishing_bound_check(const CharacterTable& t) {
  std::vector<RueVerdict> verdicts = rue_verdicts(t);
  std::size_t k = t.classes().count();
  std::vector<BoundRecord> out;
  out.reserve(verdicts.size());
  for (const RueVerdict& v : verdicts) {
    BoundRecord rec;
    rec.element = v.element;
    rec.nonvanishing = v.is_nonvanishing;
    std::size_t cls = t.classes().class_of(v.element);
    rec.centralizer_order = t.group().order() / t.classes().cls(cls).members.size();
    rec.equality = (rec.centralizer_order == k);
    rec.rue = v.is_rue;
    out.push_back(rec);
  }
  return out;
}

bool verify_vanishing_outside(const CharacterTable& t, const Subgroup& n) {
  const GroupTable& g = t.group();
  if (&n.parent() != &g) throw HypothesisNotMet("subgroup belongs to a different group");
  std::vector<Subgroup> minimal = minimal_normal_subgroups(g);
  if (minimal.size() != 1 || !(minimal[0] == n)) {
    throw HypothesisNotMet("subgroup is not the unique minimal normal subgroup");
  }
  if (n.is_abelian()) throw HypothesisNotMet("minimal normal subgroup is abelian");
  QuotientResult q = quotient(g, n.members());
  if (!structural_flags(q.group).solvable) {
    throw HypothesisNotMet("quotient by the minimal normal subgroup is not solvable");
  }

  std::size_t k = t.classes().count();
  for (std::size_t c = 0; c < k; ++c) {
    if (n.contains(t.classes().cls(c).representative)) continue;
    bool vanishes = false;
    for (std::size_t r = 0; r < t.irreducible_count(); ++r) {
      if (t.value(r, c).is_zero()) {
        vanishes = true;
        break;
      }
    }
    if (!vanishes) return false;
  }
  return true;
}

}  // namespace rue
