#include "rue/suites.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rue/character_table.hpp"
#include "rue/conjugacy.hpp"
#include "rue/cyclotomic.hpp"
#include "rue/errors.hpp"
#include "rue/gamma.hpp"
#include "rue/group.hpp"
#include "rue/isomorphism.hpp"
#include "rue/partitions.hpp"
#include "rue/subgroup.hpp"

namespace rue {
namespace {

std::string index_list(const std::vector<std::size_t>& v, std::size_t cap = 12) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < cap; ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  if (v.size() > cap) s += ",+" + std::to_string(v.size() - cap) + " more";
  return s;
}

std::string long_list(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<std::size_t> image_sorted(const std::vector<std::size_t>& members,
                                      const std::vector<std::size_t>& projection) {
  std::vector<std::size_t> out;
  out.reserve(members.size());
  for (std::size_t m : members) out.push_back(projection[m]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void emit(std::vector<CheckResult>& out, const char* check, const std::string& subject, bool ok,
          std::string detail) {
  out.push_back({check, subject, ok ? "pass" : "fail", std::move(detail)});
}

void emit_skip(std::vector<CheckResult>& out, const char* check, const std::string& subject,
               std::string detail) {
  out.push_back({check, subject, "skip", std::move(detail)});
}

// ---------------------------------------------------------------------------
// Per-group analysis shared by every check family: the exact character table
// with per-element verdicts on one side, the structural classification on the
// other, plus the structural subgroups several families consult.
// ---------------------------------------------------------------------------

struct Analysis {
  std::string spec;
  std::shared_ptr<GroupTable> g;
  std::optional<CharacterTable> table;
  std::vector<RueVerdict> verdicts;            // indexed by element
  std::vector<std::size_t> rue_elements;       // sorted
  std::vector<std::size_t> rue_class_reps;     // one representative per unit class
  std::optional<ClassificationResult> classification;
  std::vector<std::size_t> predicted;
  std::optional<Subgroup> fitting;
  std::optional<Subgroup> derived;
  StructuralFlags flags;
  std::optional<std::vector<Subgroup>> minimal_normals_cache;
  GroupRecord record;
};

const std::vector<Subgroup>& minimal_normals(Analysis& a) {
  if (!a.minimal_normals_cache) a.minimal_normals_cache = minimal_normal_subgroups(*a.g);
  return *a.minimal_normals_cache;
}

Analysis analyze(const CatalogEntry& entry) {
  Analysis a;
  a.spec = entry.spec;
  a.g = std::make_shared<GroupTable>(build_group(entry.spec));
  const GroupTable& g = *a.g;
  a.table.emplace(character_table(g));
  const CharacterTable& t = *a.table;
  a.verdicts = rue_verdicts(t);
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (a.verdicts[e].is_rue) a.rue_elements.push_back(e);
  }
  for (std::size_t c = 0; c < t.classes().count(); ++c) {
    std::size_t rep = t.classes().cls(c).representative;
    if (a.verdicts[rep].is_rue) a.rue_class_reps.push_back(rep);
  }
  a.classification.emplace(theorem_b_classify(g));
  const ClassificationResult& cl = *a.classification;
  if (cl.verdict != TheoremBVerdict::NoRueElement) a.predicted = predicted_rue_set(cl);
  a.fitting.emplace(fitting_subgroup(g));
  a.derived.emplace(derived_subgroup(g));
  a.flags = structural_flags(g);

  GroupRecord& r = a.record;
  r.spec = a.spec;
  r.order = static_cast<long long>(g.order());
  r.class_count = static_cast<long long>(t.irreducible_count());
  r.commuting_probability = commuting_probability(t);
  r.rue_elements = a.rue_elements;
  r.verdict = verdict_name(cl.verdict);
  if (cl.decomposition) {
    for (const GammaFactor& f : cl.decomposition->factors) r.gamma_orders.push_back(f.q);
  }
  r.center_order = static_cast<long long>(cl.center.order());
  r.predicted_elements = a.predicted;
  r.agreement = (!a.rue_elements.empty()) == (cl.verdict != TheoremBVerdict::NoRueElement);
  return a;
}

// All subgroups of the abelian subgroup spanned by `members`, produced by
// closing cyclic extensions; sorted member lists in lexicographic order.
std::vector<std::vector<std::size_t>> abelian_subgroup_lattice(
    const GroupTable& g, const std::vector<std::size_t>& members) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> work;
  std::vector<std::size_t> triv{0};
  seen.insert(triv);
  work.push_back(triv);
  while (!work.empty()) {
    std::vector<std::size_t> h = std::move(work.back());
    work.pop_back();
    for (std::size_t m : members) {
      if (std::binary_search(h.begin(), h.end(), m)) continue;
      std::vector<std::size_t> ext;
      const std::size_t ord = g.element_order(m);
      ext.reserve(h.size() * ord);
      std::size_t pw = 0;
      for (std::size_t step = 0; step < ord; ++step) {
        for (std::size_t x : h) ext.push_back(g.mul(x, pw));
        pw = g.mul(pw, m);
      }
      std::sort(ext.begin(), ext.end());
      ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
      if (seen.insert(ext).second) work.push_back(std::move(ext));
    }
  }
  return std::vector<std::vector<std::size_t>>(seen.begin(), seen.end());
}

struct CentralQuotient {
  const std::vector<std::size_t>& n_members;
  const GroupTable& q;
  const std::vector<std::size_t>& projection;
  const CharacterTable& table;
  const std::vector<RueVerdict>& verdicts;
};

// Streams every quotient of the group by a nontrivial subgroup of its center,
// with the quotient's table and verdicts; returns how many were visited.
template <typename Fn>
std::size_t for_each_central_quotient(Analysis& a, Fn&& fn) {
  const GroupTable& g = *a.g;
  const auto lattice = abelian_subgroup_lattice(g, a.classification->center.members());
  std::size_t swept = 0;
  for (const auto& n : lattice) {
    if (n.size() <= 1) continue;
    QuotientResult qr = quotient(g, n);
    CharacterTable qt = character_table(qr.group);
    std::vector<RueVerdict> qv = rue_verdicts(qt);
    ++swept;
    fn(CentralQuotient{n, qr.group, qr.projection, qt, qv});
  }
  return swept;
}

// ---------------------------------------------------------------------------
// Check families
// ---------------------------------------------------------------------------

void family_orthogonality(Analysis& a, std::vector<CheckResult>& out) {
  const CharacterTable& t = *a.table;
  const std::string& s = a.spec;
  const std::size_t k = t.irreducible_count();
  const long long order = static_cast<long long>(a.g->order());
  const long e = t.conductor();

  std::vector<long long> csize(k);
  for (std::size_t c = 0; c < k; ++c) {
    csize[c] = static_cast<long long>(t.classes().cls(c).members.size());
  }

  long long dsum = 0;
  for (std::size_t r = 0; r < k; ++r) dsum += t.degree(r) * t.degree(r);
  emit(out, "degree-square-sum", s, dsum == order,
       "sum of squared degrees " + std::to_string(dsum) + " vs order " + std::to_string(order));

  std::vector<std::vector<Cyclotomic>> conj(k);
  for (std::size_t r = 0; r < k; ++r) {
    conj[r].reserve(k);
    for (std::size_t c = 0; c < k; ++c) conj[r].push_back(t.value(r, c).conjugate());
  }
  std::vector<Cyclotomic> weight;
  weight.reserve(k);
  for (std::size_t c = 0; c < k; ++c) weight.push_back(Cyclotomic::integer(e, csize[c]));
  std::vector<std::vector<Cyclotomic>> wconj(k);
  for (std::size_t r = 0; r < k; ++r) {
    wconj[r].reserve(k);
    for (std::size_t c = 0; c < k; ++c) wconj[r].push_back(conj[r][c] * weight[c]);
  }

  bool rows_ok = true;
  std::string rw;
  for (std::size_t i = 0; i < k && rows_ok; ++i) {
    for (std::size_t j = i; j < k && rows_ok; ++j) {
      Cyclotomic acc(e);
      for (std::size_t c = 0; c < k; ++c) acc += t.value(i, c) * wconj[j][c];
      const bool good = (i == j) ? (acc == static_cast<long>(order)) : acc.is_zero();
      if (!good) {
        rows_ok = false;
        rw = "rows " + std::to_string(i) + "," + std::to_string(j) + ": weighted inner product " +
             acc.to_string();
      }
    }
  }
  emit(out, "row-orthogonality", s, rows_ok,
       rows_ok ? std::to_string(k) + " rows pairwise orthogonal" : rw);

  bool cols_ok = true;
  std::string cw;
  for (std::size_t c = 0; c < k && cols_ok; ++c) {
    for (std::size_t d = c; d < k && cols_ok; ++d) {
      Cyclotomic acc(e);
      for (std::size_t r = 0; r < k; ++r) acc += t.value(r, c) * conj[r][d];
      const bool good =
          (c == d) ? (acc == static_cast<long>(order / csize[c])) : acc.is_zero();
      if (!good) {
        cols_ok = false;
        cw = "classes " + std::to_string(c) + "," + std::to_string(d) + ": inner product " +
             acc.to_string();
      }
    }
  }
  emit(out, "column-orthogonality", s, cols_ok,
       cols_ok ? std::to_string(k) + " columns give centralizer orders" : cw);
}

void family_lemma21(Analysis& a, std::vector<CheckResult>& out) {
  const CharacterTable& t = *a.table;
  const std::string& s = a.spec;
  const std::size_t k = t.irreducible_count();

  const auto violations = check_divisibility(t);
  std::string dv;
  if (violations.empty()) {
    dv = "every unit-modulus value has degree dividing the class size";
  } else {
    for (std::size_t i = 0; i < violations.size() && i < 6; ++i) {
      if (i) dv += ' ';
      dv += "(" + std::to_string(violations[i].row) + "," + std::to_string(violations[i].cls) + ")";
    }
  }
  emit(out, "unit-value-degree-divides-class-size", s, violations.empty(), dv);

  bool exact = true;
  std::string iw = "all scaled column values divide exactly by the degree";
  for (std::size_t r = 0; r < k && exact; ++r) {
    for (std::size_t c = 0; c < k && exact; ++c) {
      try {
        (void)omega(t, r, c);
      } catch (const InexactDivision&) {
        exact = false;
        iw = "row " + std::to_string(r) + " class " + std::to_string(c) +
             ": central value is not an algebraic integer";
      }
    }
  }
  emit(out, "central-character-integrality", s, exact, iw);

  if (k <= 20) {
    const auto acon = class_multiplication_constants(*a.g, t.classes());
    std::vector<std::vector<Cyclotomic>> om(k);
    for (std::size_t r = 0; r < k; ++r) {
      om[r].reserve(k);
      for (std::size_t c = 0; c < k; ++c) om[r].push_back(omega(t, r, c));
    }
    const long e = t.conductor();
    bool rel = true;
    std::string rw = "central values satisfy the class-constant product rule";
    for (std::size_t r = 0; r < k && rel; ++r) {
      for (std::size_t i = 0; i < k && rel; ++i) {
        for (std::size_t j = 0; j < k && rel; ++j) {
          Cyclotomic rhs(e);
          for (std::size_t c = 0; c < k; ++c) {
            if (acon[i][j][c] != 0) rhs += om[r][c] * Cyclotomic::integer(e, acon[i][j][c]);
          }
          if (!(om[r][i] * om[r][j] - rhs).is_zero()) {
            rel = false;
            rw = "row " + std::to_string(r) + " classes " + std::to_string(i) + "," +
                 std::to_string(j) + ": product rule fails";
          }
        }
      }
    }
    emit(out, "central-character-product-relation", s, rel, rw);
  } else {
    emit_skip(out, "central-character-product-relation", s,
              "class count " + std::to_string(k) + " above the product-relation gate (20)");
  }
}

void family_lemma22(Analysis& a, std::vector<CheckResult>& out) {
  if (a.rue_class_reps.empty()) return;
  const GroupTable& g = *a.g;
  const CharacterTable& t = *a.table;
  const std::string& s = a.spec;
  const long long k = static_cast<long long>(t.irreducible_count());
  const long long order = static_cast<long long>(g.order());

  bool cent_ok = true;
  std::string cw = "all " + std::to_string(a.rue_class_reps.size()) +
                   " unit classes have centralizer order equal to the class count";
  for (std::size_t x : a.rue_class_reps) {
    const long long cs =
        static_cast<long long>(t.classes().cls(t.classes().class_of(x)).members.size());
    if (order / cs != k) {
      cent_ok = false;
      cw = "element " + std::to_string(x) + ": centralizer " + std::to_string(order / cs) +
           " vs class count " + std::to_string(k);
      break;
    }
  }
  emit(out, "class-count-equals-centralizer", s, cent_ok, cw);

  const std::vector<std::size_t>& der = a.derived->members();
  bool der_ok = true;
  std::string dw = "derived subgroup (order " + std::to_string(der.size()) +
                   ") lies inside every unit class closure";
  for (std::size_t x : a.rue_class_reps) {
    const Subgroup ncl = normal_closure(g, std::vector<std::size_t>{x});
    if (!std::includes(ncl.members().begin(), ncl.members().end(), der.begin(), der.end())) {
      der_ok = false;
      dw = "element " + std::to_string(x) + ": class closure of order " +
           std::to_string(ncl.order()) + " misses part of the derived subgroup";
      break;
    }
  }
  emit(out, "derived-inside-class-closure", s, der_ok, dw);

  const std::vector<std::size_t>& zmem = a.classification->center.members();
  bool tr_ok = true;
  std::string tw = "all central translates of unit elements stay unit";
  for (std::size_t x : a.rue_class_reps) {
    for (std::size_t z : zmem) {
      if (!a.verdicts[g.mul(x, z)].is_rue) {
        tr_ok = false;
        tw = "element " + std::to_string(x) + " times central element " + std::to_string(z) +
             " is not unit";
        break;
      }
    }
    if (!tr_ok) break;
  }
  emit(out, "central-translate-stays-unit", s, tr_ok, tw);

  bool q_ok = true;
  std::string qw;
  const std::size_t swept = for_each_central_quotient(a, [&](const CentralQuotient& cq) {
    for (std::size_t x : a.rue_class_reps) {
      if (!cq.verdicts[cq.projection[x]].is_rue && q_ok) {
        q_ok = false;
        qw = "quotient by a central subgroup of order " + std::to_string(cq.n_members.size()) +
             " loses element " + std::to_string(x);
      }
    }
  });
  emit(out, "central-quotient-keeps-unit-image", s, q_ok,
       q_ok ? std::to_string(swept) + " central subgroups swept" : qw);
}

void family_lemma23(Analysis& a, std::vector<CheckResult>& out) {
  const GroupTable& g = *a.g;
  const CharacterTable& t = *a.table;
  const std::string& s = a.spec;
  const std::size_t k = t.irreducible_count();

  const auto records = nonvanishing_bound_check(t);
  bool floor_ok = true;
  std::string fw = "every nonvanishing element has centralizer order >= class count";
  bool iff_ok = true;
  std::string iw = "centralizer order equals class count exactly at unit elements";
  for (const BoundRecord& r : records) {
    if (!r.nonvanishing) continue;
    if (r.centralizer_order < k && floor_ok) {
      floor_ok = false;
      fw = "element " + std::to_string(r.element) + ": centralizer " +
           std::to_string(r.centralizer_order) + " below class count " + std::to_string(k);
    }
    if (((r.centralizer_order == k) != r.rue) && iff_ok) {
      iff_ok = false;
      iw = "element " + std::to_string(r.element) + ": equality " +
           std::to_string(r.centralizer_order == k) + " but unit verdict " +
           std::to_string(r.rue);
    }
  }
  emit(out, "nonvanishing-centralizer-floor", s, floor_ok, fw);
  emit(out, "nonvanishing-equality-exactly-unit", s, iff_ok, iw);

  const long e = t.conductor();
  const std::vector<long> units = unit_exponents(e);
  std::map<std::vector<BigInt>, std::size_t> row_keys;
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<BigInt> key;
    for (std::size_t c = 0; c < k; ++c) {
      const auto& co = t.value(r, c).coeffs();
      key.insert(key.end(), co.begin(), co.end());
    }
    row_keys.emplace(std::move(key), r);
  }
  bool gal_ok = true;
  std::string gw = std::to_string(units.size()) + " automorphisms permute the rows";
  for (long u : units) {
    if (u == 1 || !gal_ok) continue;
    for (std::size_t r = 0; r < k && gal_ok; ++r) {
      std::vector<BigInt> key;
      for (std::size_t c = 0; c < k; ++c) {
        const auto co = t.value(r, c).galois(u).coeffs();
        key.insert(key.end(), co.begin(), co.end());
      }
      if (!row_keys.count(key)) {
        gal_ok = false;
        gw = "automorphism exponent " + std::to_string(u) + " maps row " + std::to_string(r) +
             " outside the table";
      }
    }
  }
  emit(out, "galois-orbit-permutes-rows", s, gal_ok, gw);

  if (!a.rue_class_reps.empty()) {
    const Fraction cp = commuting_probability(t);
    bool cp_ok = true;
    std::string cw = "commuting probability " + cp.to_string() +
                     " equals the reciprocal class size of every unit element";
    for (std::size_t x : a.rue_class_reps) {
      const long long cs =
          static_cast<long long>(t.classes().cls(t.classes().class_of(x)).members.size());
      if (Fraction(1, cs) != cp) {
        cp_ok = false;
        cw = "element " + std::to_string(x) + ": class size " + std::to_string(cs) +
             " vs commuting probability " + cp.to_string();
        break;
      }
    }
    emit(out, "commuting-probability-reciprocal", s, cp_ok, cw);
  }

  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t rep = t.classes().cls(c).representative;
    const std::size_t cent = g.order() / t.classes().cls(c).members.size();
    if (cent != k || a.verdicts[rep].is_rue) continue;
    const RueVerdict& v = a.verdicts[rep];
    const bool resolved = !v.is_nonvanishing;
    std::string d = "class " + std::to_string(c) + " (element order " +
                    std::to_string(g.element_order(rep)) + "): centralizer order " +
                    std::to_string(cent) + " equals the class count yet the element is not unit";
    if (resolved) {
      d += "; resolved because the element vanishes at row " + std::to_string(v.witness_row) +
           ", so the nonvanishing hypothesis of the centralizer bound does not apply";
      for (std::size_t r = 0; r < k; ++r) {
        const Cyclotomic ns = t.value(r, c).norm_square();
        if (!(ns == 1) && !t.value(r, c).is_zero()) {
          d += "; row " + std::to_string(r) + " (degree " + std::to_string(t.degree(r)) +
               ") has squared modulus " + ns.to_string();
          break;
        }
      }
    } else {
      d += "; yet the element is nonvanishing, violating the equality clause";
    }
    emit(out, "centralizer-tie-resolved-by-vanishing", s, resolved, d);
  }
}

void family_theoremA(Analysis& a, std::vector<CheckResult>& out) {
  if (a.rue_elements.empty()) return;
  const std::string& s = a.spec;

  emit(out, "unit-group-solvable", s, a.flags.solvable,
       a.flags.solvable ? "derived series reaches the identity" : "group is not solvable");
  emit(out, "unit-group-abelian-or-metabelian", s, a.flags.abelian || a.flags.metabelian,
       a.flags.abelian ? "abelian" : (a.flags.metabelian ? "metabelian" : "derived subgroup is not abelian"));

  const std::vector<std::size_t>& fm = a.fitting->members();
  bool in_ok = true;
  std::string iw = "all " + std::to_string(a.rue_elements.size()) +
                   " unit elements lie in the fitting subgroup (order " +
                   std::to_string(fm.size()) + ")";
  for (std::size_t x : a.rue_elements) {
    if (!std::binary_search(fm.begin(), fm.end(), x)) {
      in_ok = false;
      iw = "unit element " + std::to_string(x) + " outside the fitting subgroup";
      break;
    }
  }
  emit(out, "unit-elements-inside-fitting", s, in_ok, iw);

  emit(out, "fitting-abelian", s, a.fitting->is_abelian(),
       "fitting subgroup order " + std::to_string(fm.size()));

  QuotientResult qr = quotient(*a.g, fm);
  const bool qab = whole_group(qr.group).is_abelian();
  emit(out, "fitting-quotient-abelian", s, qab,
       "quotient order " + std::to_string(qr.group.order()));
}

void family_lemma32(Analysis& a, std::vector<CheckResult>& out) {
  const auto& mns = minimal_normals(a);
  if (mns.size() != 1) return;
  const Subgroup& n = mns[0];
  if (n.is_abelian()) return;
  QuotientResult qr = quotient(*a.g, n.members());
  if (!structural_flags(qr.group).solvable) return;
  bool ok = false;
  std::string d;
  try {
    ok = verify_vanishing_outside(*a.table, n);
    d = "unique nonabelian minimal normal subgroup of order " + std::to_string(n.order()) +
        "; every class outside it hits a zero";
  } catch (const Error& ex) {
    d = ex.what();
  }
  emit(out, "vanishing-outside-minimal-normal", a.spec, ok, d);
}

void family_lemma33(std::vector<CheckResult>& out) {
  for (long n = 6; n <= 13; ++n) {
    bool ok = true;
    std::string w;
    long checked = 0;
    for (const Partition& alpha : partitions_of(n)) {
      if (!is_even_cycle_type(alpha)) continue;
      ++checked;
      try {
        const Partition lam = lemma33_witness(alpha);
        const long long v = mn_value(lam, alpha);
        if (is_self_conjugate(lam) || v == 1 || v == -1 || lam.n() != n) {
          ok = false;
          w = "type " + alpha.to_string() + ": witness " + lam.to_string() + " has value " +
              std::to_string(v);
          break;
        }
      } catch (const Error& ex) {
        ok = false;
        w = "type " + alpha.to_string() + ": " + ex.what();
        break;
      }
    }
    emit(out, "even-type-witness", "n=" + std::to_string(n), ok,
         ok ? std::to_string(checked) + " even cycle types all have witnesses" : w);
  }

  bool pins = true;
  std::string pw = "9 pinned zero values reproduced";
  {
    const long long v = mn_value(Partition({5, 2}), Partition({4, 3}));
    if (v != 0) {
      pins = false;
      pw = "shape 5,2 at type 4,3 gives " + std::to_string(v);
    }
  }
  for (long n = 6; n <= 13 && pins; ++n) {
    const long long v = mn_value(Partition({n - 2, 2}), Partition({n}));
    if (v != 0) {
      pins = false;
      pw = "shape " + std::to_string(n - 2) + ",2 at the full cycle gives " + std::to_string(v);
    }
  }
  emit(out, "pinned-zero-values", "shapes", pins, pw);
}

void family_lemma41(Analysis& a, std::vector<CheckResult>& out) {
  if (a.rue_class_reps.empty() || a.flags.abelian) return;
  const GroupTable& g = *a.g;
  const std::string& s = a.spec;
  const std::vector<std::size_t>& fm = a.fitting->members();
  const long long k = static_cast<long long>(a.table->irreducible_count());

  bool fc_ok = true;
  std::string fw = "fitting subgroup (order " + std::to_string(fm.size()) +
                   ") is the centralizer of every unit element";
  for (std::size_t x : a.rue_class_reps) {
    if (centralizer(g, x).members() != fm) {
      fc_ok = false;
      fw = "element " + std::to_string(x) + ": centralizer differs from the fitting subgroup";
      break;
    }
  }
  emit(out, "fitting-equals-centralizer", s, fc_ok, fw);

  emit(out, "class-count-equals-fitting-order", s, k == static_cast<long long>(fm.size()),
       "class count " + std::to_string(k) + " vs fitting order " + std::to_string(fm.size()));

  const Subgroup hc = hypercenter(g);
  QuotientResult qr = quotient(g, hc.members());
  const auto rec = recognize_gamma_product(qr.group);
  bool h_ok = rec.has_value();
  std::string hd;
  if (!h_ok) {
    hd = "hypercenter quotient not an affine product: " +
         recognize_gamma_product_report(qr.group).failed_condition;
  } else {
    std::vector<long> qs;
    for (const GammaFactor& f : rec->factors) qs.push_back(f.q);
    hd = "hypercenter quotient is the affine product with factor orders {" + long_list(qs) + "}";
    std::vector<std::size_t> un = a.derived->members();
    un.insert(un.end(), hc.members().begin(), hc.members().end());
    std::sort(un.begin(), un.end());
    un.erase(std::unique(un.begin(), un.end()), un.end());
    if (subgroup_closure(g, un) != fm) {
      h_ok = false;
      hd = "derived subgroup times hypercenter differs from the fitting subgroup";
    } else {
      const auto pf = image_sorted(fm, qr.projection);
      if (fitting_subgroup(qr.group).members() != pf) {
        h_ok = false;
        hd = "fitting subgroup of the hypercenter quotient is not the fitting image";
      } else {
        for (std::size_t x : a.rue_class_reps) {
          if (centralizer(qr.group, qr.projection[x]).members() != pf) {
            h_ok = false;
            hd = "image of element " + std::to_string(x) +
                 " has centralizer differing from the fitting image";
            break;
          }
        }
      }
    }
  }
  emit(out, "hypercenter-quotient-affine-product", s, h_ok, hd);

  bool asc_ok = true;
  std::string aw;
  std::set<std::vector<std::size_t>> seen_n;
  const auto check_quotient = [&](const std::vector<std::size_t>& nmem, const GroupTable& q,
                                  const std::vector<std::size_t>& proj, long long qk) {
    if (!asc_ok) return;
    const long long expect = static_cast<long long>(fm.size() / nmem.size());
    if (qk != expect) {
      asc_ok = false;
      aw = "quotient by central subgroup of order " + std::to_string(nmem.size()) + " has " +
           std::to_string(qk) + " classes; fitting index predicts " + std::to_string(expect);
      return;
    }
    const auto pfq = image_sorted(fm, proj);
    if (fitting_subgroup(q).members() != pfq) {
      asc_ok = false;
      aw = "quotient fitting subgroup differs from the fitting image";
      return;
    }
    for (std::size_t x : a.rue_class_reps) {
      if (centralizer(q, proj[x]).members() != pfq) {
        asc_ok = false;
        aw = "image of element " + std::to_string(x) + " has the wrong centralizer";
        return;
      }
    }
  };
  std::size_t swept = for_each_central_quotient(a, [&](const CentralQuotient& cq) {
    seen_n.insert(cq.n_members);
    check_quotient(cq.n_members, cq.q, cq.projection,
                   static_cast<long long>(cq.table.irreducible_count()));
  });
  for (const Subgroup& zi : upper_central_series(g)) {
    if (zi.is_trivial() || seen_n.count(zi.members())) continue;
    QuotientResult zq = quotient(g, zi.members());
    const CharacterTable zt = character_table(zq.group);
    check_quotient(zi.members(), zq.group, zq.projection,
                   static_cast<long long>(zt.irreducible_count()));
    ++swept;
  }
  emit(out, "ascending-quotient-counts", s, asc_ok,
       asc_ok ? std::to_string(swept) + " central quotients match the fitting index" : aw);
}

void family_prop42(Analysis& a, std::vector<CheckResult>& out) {
  if (a.rue_elements.empty()) return;
  const GroupTable& g = *a.g;
  bool ok = true;
  std::string primes;
  std::string w;
  for (std::size_t p : prime_divisors(g.order())) {
    if (!primes.empty()) primes += ',';
    primes += std::to_string(p);
    if (!sylow_subgroup(g, p).is_abelian()) {
      ok = false;
      w = "Sylow subgroup at prime " + std::to_string(p) + " is not abelian";
      break;
    }
  }
  emit(out, "sylow-subgroups-abelian", a.spec, ok,
       ok ? "abelian Sylow subgroups at primes {" + primes + "}" : w);
}

void family_cor43(Analysis& a, std::vector<CheckResult>& out) {
  if (a.rue_elements.empty()) return;
  const std::string& s = a.spec;
  const Subgroup hc = hypercenter(*a.g);
  const std::vector<std::size_t>& zmem = a.classification->center.members();
  emit(out, "hypercenter-equals-center", s, hc.members() == zmem,
       "hypercenter order " + std::to_string(hc.order()) + " vs center order " +
           std::to_string(zmem.size()));

  const std::vector<std::size_t>& der = a.derived->members();
  std::vector<std::size_t> inter;
  std::set_intersection(der.begin(), der.end(), zmem.begin(), zmem.end(),
                        std::back_inserter(inter));
  emit(out, "derived-meets-center-trivially", s, inter.size() == 1,
       "intersection order " + std::to_string(inter.size()));
}

const std::vector<long>& candidate_factor_orders() {
  static const std::vector<long> qs = {3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};
  return qs;
}

// Multisets {q_i} of prime powers > 2 with product of q_i(q_i-1) equal to n.
std::vector<std::vector<long>> affine_order_factorizations(long long n) {
  const auto& qs = candidate_factor_orders();
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long long, std::size_t)> rec = [&](long long rem, std::size_t start) {
    if (rem == 1) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < qs.size(); ++i) {
      const long long m = static_cast<long long>(qs[i]) * (qs[i] - 1);
      if (m > rem) break;
      if (rem % m) continue;
      cur.push_back(qs[i]);
      rec(rem / m, i);
      cur.pop_back();
    }
  };
  rec(n, 0);
  return out;
}

std::string affine_product_spec(const std::vector<long>& qs) {
  std::string s;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) s += '*';
    s += "gamma:" + std::to_string(qs[i]);
  }
  return s;
}

void family_theoremB(Analysis& a, std::vector<CheckResult>& out) {
  const std::string& s = a.spec;
  const ClassificationResult& cl = *a.classification;
  const bool has_rue = !a.rue_elements.empty();
  const bool admits = cl.verdict != TheoremBVerdict::NoRueElement;
  std::string ad = "table certifies " + std::to_string(a.rue_elements.size()) +
                   " unit elements; structural verdict " + a.record.verdict;
  if (!admits && !cl.failed_condition.empty()) ad += " (" + cl.failed_condition + ")";
  emit(out, "two-sided-agreement", s, has_rue == admits, ad);

  if (admits) {
    const bool sub = std::includes(a.rue_elements.begin(), a.rue_elements.end(),
                                   a.predicted.begin(), a.predicted.end());
    emit(out, "predicted-subset-of-certified", s, sub,
         "predicted " + std::to_string(a.predicted.size()) + " of " +
             std::to_string(a.rue_elements.size()) + " certified elements");
    const bool equal = a.predicted == a.rue_elements;
    out.push_back({"predicted-equality-informational", s, "pass",
                   equal ? "predicted set equals the certified set (" +
                               std::to_string(a.predicted.size()) + " elements)"
                         : "proper subset: predicted {" + index_list(a.predicted) +
                               "} vs certified {" + index_list(a.rue_elements) + "}"});
  }

  if (a.g->order() <= kIsomorphismOracleBound) {
    const auto rec = recognize_gamma_product(*a.g);
    const auto cands = affine_order_factorizations(static_cast<long long>(a.g->order()));
    std::optional<std::vector<long>> match;
    for (const auto& cand : cands) {
      const GroupTable prod = build_group(affine_product_spec(cand));
      if (brute_force_isomorphic(*a.g, prod)) {
        match = cand;
        break;
      }
    }
    bool ok = true;
    std::string d;
    if (rec.has_value() != match.has_value()) {
      ok = false;
      d = rec ? "recognition succeeded but no candidate product is isomorphic"
              : "isomorphic to the product with factor orders {" + long_list(*match) +
                    "} but recognition failed: " +
                    recognize_gamma_product_report(*a.g).failed_condition;
    } else if (rec) {
      std::vector<long> got;
      for (const GammaFactor& f : rec->factors) got.push_back(f.q);
      std::vector<long> want = *match;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      ok = got == want;
      d = ok ? "recognized factor orders {" + long_list(got) + "} confirmed by explicit isomorphism"
             : "recognized {" + long_list(got) + "} but the isomorphic product has {" +
                   long_list(want) + "}";
    } else {
      d = std::to_string(cands.size()) +
          " candidate factorizations, none isomorphic; recognition agrees (" +
          recognize_gamma_product_report(*a.g).failed_condition + ")";
    }
    emit(out, "recognition-matches-isomorphism-oracle", s, ok, d);
  } else {
    emit_skip(out, "recognition-matches-isomorphism-oracle", s,
              "order above the isomorphism oracle bound");
  }

  if (has_rue && !a.flags.abelian && cl.center.is_trivial()) {
    const GroupTable& g = *a.g;
    const std::vector<std::size_t>& fm = a.fitting->members();
    std::vector<std::size_t> un;
    for (const Subgroup& m : minimal_normals(a)) {
      un.insert(un.end(), m.members().begin(), m.members().end());
    }
    std::sort(un.begin(), un.end());
    un.erase(std::unique(un.begin(), un.end()), un.end());
    const std::vector<std::size_t> socle = subgroup_closure(g, un);
    bool ok = true;
    std::string d = "fitting = socle = derived = unit class closures, and centralizers match";
    if (socle != fm) {
      ok = false;
      d = "socle differs from the fitting subgroup";
    } else if (a.derived->members() != fm) {
      ok = false;
      d = "derived subgroup differs from the fitting subgroup";
    } else {
      for (std::size_t x : a.rue_class_reps) {
        if (normal_closure(g, std::vector<std::size_t>{x}).members() != fm) {
          ok = false;
          d = "class closure of element " + std::to_string(x) + " differs from the fitting subgroup";
          break;
        }
        if (centralizer(g, x).members() != fm) {
          ok = false;
          d = "centralizer of element " + std::to_string(x) + " differs from the fitting subgroup";
          break;
        }
      }
    }
    emit(out, "centerless-unit-group-structure", s, ok, d);
  }

  {
    std::vector<long> expected;
    bool pure = !s.empty();
    std::size_t pos = 0;
    while (pure && pos <= s.size()) {
      const std::size_t star = s.find('*', pos);
      const std::string term = s.substr(pos, star == std::string::npos ? star : star - pos);
      if (term.rfind("gamma:", 0) == 0) {
        try {
          expected.push_back(std::stol(term.substr(6)));
        } catch (...) {
          pure = false;
        }
      } else {
        pure = false;
      }
      if (star == std::string::npos) break;
      pos = star + 1;
    }
    if (pure) {
      const auto rec = recognize_gamma_product(*a.g);
      std::vector<long> got;
      if (rec) {
        for (const GammaFactor& f : rec->factors) got.push_back(f.q);
        std::sort(got.begin(), got.end());
      }
      std::sort(expected.begin(), expected.end());
      const bool ok = rec.has_value() && got == expected;
      emit(out, "constructed-factor-roundtrip", s, ok,
           ok ? "factor orders {" + long_list(expected) + "} recovered"
              : "expected {" + long_list(expected) + "} but recognition returned {" +
                    long_list(got) + "}");
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "orthogonality", "lemma21", "lemma22", "lemma23", "theoremA", "lemma32",
      "lemma33",       "lemma41", "prop42",  "cor43",   "theoremB", "all"};
  return names;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& suite_manifest() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> manifest = [] {
    std::vector<std::pair<std::string, std::vector<std::string>>> m = {
        {"orthogonality", {"degree-square-sum", "row-orthogonality", "column-orthogonality"}},
        {"lemma21",
         {"unit-value-degree-divides-class-size", "central-character-integrality",
          "central-character-product-relation"}},
        {"lemma22",
         {"class-count-equals-centralizer", "derived-inside-class-closure",
          "central-translate-stays-unit", "central-quotient-keeps-unit-image"}},
        {"lemma23",
         {"nonvanishing-centralizer-floor", "nonvanishing-equality-exactly-unit",
          "galois-orbit-permutes-rows", "commuting-probability-reciprocal",
          "centralizer-tie-resolved-by-vanishing"}},
        {"theoremA",
         {"unit-group-solvable", "unit-group-abelian-or-metabelian",
          "unit-elements-inside-fitting", "fitting-abelian", "fitting-quotient-abelian"}},
        {"lemma32", {"vanishing-outside-minimal-normal"}},
        {"lemma33", {"even-type-witness", "pinned-zero-values"}},
        {"lemma41",
         {"fitting-equals-centralizer", "class-count-equals-fitting-order",
          "hypercenter-quotient-affine-product", "ascending-quotient-counts"}},
        {"prop42", {"sylow-subgroups-abelian"}},
        {"cor43", {"hypercenter-equals-center", "derived-meets-center-trivially"}},
        {"theoremB",
         {"two-sided-agreement", "predicted-subset-of-certified",
          "predicted-equality-informational", "recognition-matches-isomorphism-oracle",
          "centerless-unit-group-structure", "constructed-factor-roundtrip"}},
    };
    std::vector<std::string> all;
    for (const auto& [name, checks] : m) {
      for (const auto& c : checks) all.push_back(c);
    }
    m.emplace_back("all", std::move(all));
    return m;
  }();
  return manifest;
}

VerificationReport run_suite(const std::string& suite, const std::vector<CatalogEntry>& catalog,
                             long long max_order) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw UnknownSuite("unknown suite '" + suite + "'");
  }
  VerificationReport rep;
  rep.suite = suite;
  rep.max_order = max_order;
  const bool all = suite == "all";
  const auto want = [&](const char* s) { return all || suite == s; };

  if (all || suite != "lemma33") {
    for (const CatalogEntry& entry : catalog) {
      Analysis a = analyze(entry);
      rep.groups.push_back(a.record);
      if (!a.record.agreement) rep.disagreements.push_back(a.spec);
      if (want("orthogonality")) family_orthogonality(a, rep.checks);
      if (want("lemma21")) family_lemma21(a, rep.checks);
      if (want("lemma22")) family_lemma22(a, rep.checks);
      if (want("lemma23")) family_lemma23(a, rep.checks);
      if (want("theoremA")) family_theoremA(a, rep.checks);
      if (want("lemma32")) family_lemma32(a, rep.checks);
      if (want("lemma41")) family_lemma41(a, rep.checks);
      if (want("prop42")) family_prop42(a, rep.checks);
      if (want("cor43")) family_cor43(a, rep.checks);
      if (want("theoremB")) family_theoremB(a, rep.checks);
    }
  }
  if (want("lemma33")) family_lemma33(rep.checks);

  for (const CheckResult& c : rep.checks) {
    if (c.status == "pass") ++rep.passed;
    else if (c.status == "fail") ++rep.failed;
    else ++rep.skipped;
  }
  return rep;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["max_order"] = max_order;
  j["group_count"] = groups.size();
  nlohmann::ordered_json man = nlohmann::ordered_json::object();
  for (const auto& [name, checks_] : suite_manifest()) man[name] = checks_;
  j["manifest"] = std::move(man);
  j["groups"] = nlohmann::ordered_json::array();
  for (const GroupRecord& g : groups) {
    nlohmann::ordered_json o;
    o["name"] = g.spec;
    o["order"] = g.order;
    o["class_count"] = g.class_count;
    o["commuting_probability"] = g.commuting_probability.to_string();
    o["unit_elements"] = g.rue_elements;
    o["verdict"] = g.verdict;
    o["gamma_orders"] = g.gamma_orders;
    o["center_order"] = g.center_order;
    o["predicted_elements"] = g.predicted_elements;
    o["agreement"] = g.agreement;
    j["groups"].push_back(std::move(o));
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json o;
    o["check"] = c.check;
    o["subject"] = c.subject;
    o["status"] = c.status;
    o["detail"] = c.detail;
    j["checks"].push_back(std::move(o));
  }
  j["disagreements"] = disagreements;
  j["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"ok", ok()}};
  return j.dump(2) + "\n";
}

}  // namespace rue
