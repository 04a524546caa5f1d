#include "rue/gamma.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rue/errors.hpp"
#include "rue/fq.hpp"

namespace rue {

GroupTable gamma_q(long q, std::size_t bound) {
  if (q <= 2) throw QTooSmall("affine group requires q > 2, got " + std::to_string(q));
  FqField f(q);  // NotPrimePower propagates
  std::vector<Permutation> gens;
  for (long i = 0; i < f.k(); ++i) {
    std::vector<Permutation::Point> img(static_cast<std::size_t>(q));
    long b = f.monomial(i);
    for (long x = 0; x < q; ++x) img[static_cast<std::size_t>(x)] =
        static_cast<Permutation::Point>(f.add(x, b));
    gens.emplace_back(std::move(img));
  }
  {
    std::vector<Permutation::Point> img(static_cast<std::size_t>(q));
    long g = f.generator();
    for (long x = 0; x < q; ++x) img[static_cast<std::size_t>(x)] =
        static_cast<Permutation::Point>(f.mul(g, x));
    gens.emplace_back(std::move(img));
  }
  GroupTable table = GroupTable::from_generators(static_cast<std::size_t>(q), gens, bound);
  if (table.order() != static_cast<std::size_t>(q) * static_cast<std::size_t>(q - 1)) {
    throw Error("affine group has wrong order (internal defect)");
  }
  for (std::size_t i = 1; i < table.order(); ++i) {
    std::size_t fixed = 0;
    const Permutation& p = table.element(i);
    for (long x = 0; x < q; ++x) fixed += (p[static_cast<std::size_t>(x)] == x);
    if (fixed >= 2) throw Error("affine group is not Frobenius (internal defect)");
  }
  return table;
}

namespace {

// True when every nonidentity member has order p for a single prime p and the
// subgroup order is a power of that p.
bool is_elementary_abelian(const Subgroup& s) {
  if (!s.is_abelian()) return false;
  if (s.order() == 1) return false;
  std::optional<PrimePower> pp = prime_power_decomposition(static_cast<long>(s.order()));
  if (!pp) return false;
  const GroupTable& g = s.parent();
  for (std::size_t m : s.members()) {
    if (m != 0 && g.element_order(m) != static_cast<std::size_t>(pp->p)) return false;
  }
  return true;
}

}  // namespace

GammaRecognition recognize_gamma_product_report(const GroupTable& h) {
  GammaRecognition out;
  if (h.order() == 1) {
    out.failed_condition = "R1: trivial group";
    return out;
  }
  if (center(h).order() != 1) {
    out.failed_condition = "R1: center is nontrivial";
    return out;
  }

  Subgroup f = fitting_subgroup(h);
  if (!f.is_abelian()) {
    out.failed_condition = "R2: fitting subgroup is nonabelian";
    return out;
  }
  std::vector<Subgroup> kernels = minimal_normal_subgroups(h);
  long long kernel_product_order = 1;
  for (const Subgroup& v : kernels) {
    if (!is_elementary_abelian(v)) {
      out.failed_condition = "R2: a minimal normal subgroup is not elementary abelian";
      return out;
    }
    kernel_product_order *= static_cast<long long>(v.order());
  }
  std::set<std::size_t> union_members;
  for (const Subgroup& v : kernels) union_members.insert(v.members().begin(), v.members().end());
  std::vector<std::size_t> closure = subgroup_closure(
      h, std::vector<std::size_t>(union_members.begin(), union_members.end()));
  if (closure != f.members() || kernel_product_order != static_cast<long long>(f.order())) {
    out.failed_condition =
        "R2: fitting subgroup is not the direct product of the minimal normal subgroups";
    return out;
  }

  long long complement_order = 1;
  for (const Subgroup& v : kernels) complement_order *= static_cast<long long>(v.order()) - 1;
  QuotientResult q = quotient(h, f.members());
  if (static_cast<long long>(q.group.order()) != complement_order) {
    out.failed_condition = "R3: complement quotient has the wrong order";
    return out;
  }
  if (!whole_group(q.group).is_abelian()) {
    out.failed_condition = "R3: complement quotient is nonabelian";
    return out;
  }

  for (const Subgroup& v : kernels) {
    // Conjugation permutations of the nonidentity kernel members, induced by
    // the ambient generators.
    std::vector<std::size_t> pts(v.members().begin() + 1, v.members().end());
    std::vector<Permutation> induced;
    for (std::size_t gi : h.generator_indices()) {
      std::vector<Permutation::Point> img(pts.size());
      for (std::size_t a = 0; a < pts.size(); ++a) {
        std::size_t conj = h.mul(h.mul(h.inv(gi), pts[a]), gi);
        std::size_t b = std::lower_bound(pts.begin(), pts.end(), conj) - pts.begin();
        if (b == pts.size() || pts[b] != conj) throw NotNormal("kernel not closed under conjugation");
        img[a] = static_cast<Permutation::Point>(b);
      }
      induced.emplace_back(std::move(img));
    }
    GroupTable action = GroupTable::from_generators(pts.size(), induced);
    std::set<Permutation::Point> orbit;
    for (std::size_t i = 0; i < action.order(); ++i) orbit.insert(action.element(i)[0]);
    if (orbit.size() != pts.size()) {
      out.failed_condition = "R4: conjugation on a kernel is not transitive";
      return out;
    }
    if (action.order() != pts.size()) {
      out.failed_condition = "R4: conjugation on a kernel is larger than regular";
      return out;
    }
  }

  GammaDecomposition dec{{}, complement_order, f};
  for (Subgroup& v : kernels) {
    long qi = static_cast<long>(v.order());
    dec.factors.push_back(GammaFactor{std::move(v), qi});
  }
  std::sort(dec.factors.begin(), dec.factors.end(), [](const GammaFactor& a, const GammaFactor& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.kernel.members() < b.kernel.members();
  });
  out.decomposition = std::move(dec);
  return out;
}

std::optional<GammaDecomposition> recognize_gamma_product(const GroupTable& h) {
  return recognize_gamma_product_report(h).decomposition;
}

const char* verdict_name(TheoremBVerdict v) {
  switch (v) {
    case TheoremBVerdict::Abelian: return "Abelian";
    case TheoremBVerdict::RueByTheoremB: return "RueByTheoremB";
    case TheoremBVerdict::NoRueElement: return "NoRueElement";
  }
  return "?";
}

ClassificationResult theorem_b_classify(const GroupTable& g) {
  if (whole_group(g).is_abelian()) {
    return ClassificationResult{TheoremBVerdict::Abelian, whole_group(g), nullptr, {}, std::nullopt, ""};
  }
  Subgroup z = center(g);
  Subgroup d = derived_subgroup(g);
  Subgroup f = fitting_subgroup(g);

  std::vector<std::size_t> dz_seed = d.members();
  dz_seed.insert(dz_seed.end(), z.members().begin(), z.members().end());
  std::vector<std::size_t> dz = subgroup_closure(g, dz_seed);
  if (dz != f.members()) {
    return ClassificationResult{TheoremBVerdict::NoRueElement, std::move(z), nullptr, {}, std::nullopt,
                                "fitting subgroup differs from derived times center"};
  }
  std::vector<std::size_t> meet;
  std::set_intersection(d.members().begin(), d.members().end(), z.members().begin(),
                        z.members().end(), std::back_inserter(meet));
  if (meet.size() != 1) {
    return ClassificationResult{TheoremBVerdict::NoRueElement, std::move(z), nullptr, {}, std::nullopt,
                                "derived subgroup meets the center"};
  }
  if (!f.is_abelian()) {
    return ClassificationResult{TheoremBVerdict::NoRueElement, std::move(z), nullptr, {}, std::nullopt,
                                "fitting subgroup is nonabelian"};
  }

  QuotientResult q = quotient(g, z.members());
  auto quotient_table = std::make_shared<GroupTable>(std::move(q.group));
  GammaRecognition rec = recognize_gamma_product_report(*quotient_table);
  if (!rec.decomposition) {
    return ClassificationResult{TheoremBVerdict::NoRueElement, std::move(z), nullptr, {}, std::nullopt,
                                rec.failed_condition};
  }
  return ClassificationResult{TheoremBVerdict::RueByTheoremB, std::move(z), std::move(quotient_table),
                              std::move(q.projection), std::move(rec.decomposition), ""};
}

std::vector<std::size_t> predicted_rue_set(const ClassificationResult& r) {
  const GroupTable& g = r.center.parent();
  if (r.verdict == TheoremBVerdict::Abelian) {
    std::vector<std::size_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }
  if (r.verdict != TheoremBVerdict::RueByTheoremB) {
    throw WrongVerdict("no predicted element set under this verdict");
  }
  const GroupTable& h = *r.central_quotient;
  const GammaDecomposition& dec = *r.decomposition;

  // Fitting elements of the quotient with every kernel coordinate nontrivial:
  // members of the kernel product lying outside every proper sub-product.
  std::vector<char> keep(h.order(), 0);
  for (std::size_t m : dec.kernel_product.members()) keep[m] = 1;
  for (std::size_t skip = 0; skip < dec.factors.size(); ++skip) {
    std::vector<std::size_t> seed = {0};
    for (std::size_t j = 0; j < dec.factors.size(); ++j) {
      if (j == skip) continue;
      const std::vector<std::size_t>& mem = dec.factors[j].kernel.members();
      seed.insert(seed.end(), mem.begin(), mem.end());
    }
    for (std::size_t m : subgroup_closure(h, seed)) keep[m] = 0;
  }

  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (keep[r.projection[x]]) out.push_back(x);
  }
  return out;
}

}  // namespace rue
