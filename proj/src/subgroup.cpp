#include "rue/subgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rue/errors.hpp"

namespace rue {

Subgroup::Subgroup(const GroupTable& parent, std::vector<std::size_t> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Subgroup::Subgroup(const Subgroup& other) : parent_(other.parent_), members_(other.members_) {
  normal_.store(other.normal_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  abelian_.store(other.abelian_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  nilpotent_.store(other.nilpotent_.load(std::memory_order_relaxed), std::memory_order_relaxed);
}

Subgroup& Subgroup::operator=(const Subgroup& other) {
  parent_ = other.parent_;
  members_ = other.members_;
  normal_.store(other.normal_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  abelian_.store(other.abelian_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  nilpotent_.store(other.nilpotent_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  return *this;
}

bool Subgroup::contains(std::size_t element) const {
  return std::binary_search(members_.begin(), members_.end(), element);
}

bool Subgroup::is_normal() const {
  signed char cached = normal_.load(std::memory_order_relaxed);
  if (cached >= 0) return cached != 0;
  bool result = true;
  for (std::size_t gi : parent_->generator_indices()) {
    for (std::size_t m : members_) {
      if (!contains(parent_->mul(parent_->mul(parent_->inv(gi), m), gi))) {
        result = false;
        break;
      }
    }
    if (!result) break;
  }
  normal_.store(result ? 1 : 0, std::memory_order_relaxed);
  return result;
}

bool Subgroup::is_abelian() const {
  signed char cached = abelian_.load(std::memory_order_relaxed);
  if (cached >= 0) return cached != 0;
  bool result = true;
  for (std::size_t a : members_) {
    for (std::size_t b : members_) {
      if (b >= a) break;
      if (parent_->mul(a, b) != parent_->mul(b, a)) {
        result = false;
        break;
      }
    }
    if (!result) break;
  }
  abelian_.store(result ? 1 : 0, std::memory_order_relaxed);
  return result;
}

bool Subgroup::is_nilpotent() const {
  signed char cached = nilpotent_.load(std::memory_order_relaxed);
  if (cached >= 0) return cached != 0;
  // Lower central series inside the parent: gamma_{i+1} = [gamma_i, S],
  // nilpotent iff it reaches the identity.
  bool result = false;
  std::vector<std::size_t> gamma = members_;
  while (true) {
    std::vector<std::size_t> comm_gens;
    for (std::size_t a : gamma) {
      for (std::size_t b : members_) {
        // [a, b] = a^-1 b^-1 a b
        std::size_t c = parent_->mul(parent_->mul(parent_->mul(parent_->inv(a), parent_->inv(b)), a), b);
        if (c != 0) comm_gens.push_back(c);
      }
    }
    std::vector<std::size_t> next = subgroup_closure(*parent_, comm_gens);
    if (next.size() == 1) {
      result = true;
      break;
    }
    if (next.size() == gamma.size()) {
      result = false;  // stabilized above the identity
      break;
    }
    gamma = std::move(next);
  }
  nilpotent_.store(result ? 1 : 0, std::memory_order_relaxed);
  return result;
}

std::vector<std::size_t> subgroup_closure(const GroupTable& g,
                                          const std::vector<std::size_t>& generators) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<std::size_t> members = {0};
  std::vector<std::size_t> gens;
  for (std::size_t x : generators) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      gens.push_back(x);
    }
  }
  std::vector<std::size_t> todo = members;
  while (!todo.empty()) {
    std::size_t x = todo.back();
    todo.pop_back();
    for (std::size_t gi : gens) {
      std::size_t y = g.mul(x, gi);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
        todo.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup trivial_subgroup(const GroupTable& g) { return Subgroup(g, {0}); }

Subgroup whole_group(const GroupTable& g) {
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup centralizer(const GroupTable& g, std::size_t element) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.mul(i, element) == g.mul(element, i)) members.push_back(i);
  }
  return Subgroup(g, std::move(members));
}

Subgroup center(const GroupTable& g) {
  std::vector<std::size_t> members;
  const std::vector<std::size_t>& gens = g.generator_indices();
  for (std::size_t i = 0; i < g.order(); ++i) {
    bool central = true;
    for (std::size_t gi : gens) {
      if (g.mul(i, gi) != g.mul(gi, i)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(i);
  }
  return Subgroup(g, std::move(members));
}

Subgroup derived_subgroup(const GroupTable& g) {
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, derived_of(g, all));
}

std::vector<std::size_t> derived_of(const GroupTable& g, const std::vector<std::size_t>& members) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> comm_gens;
  for (std::size_t a : members) {
    for (std::size_t b : members) {
      std::size_t c = g.mul(g.mul(g.mul(g.inv(a), g.inv(b)), a), b);
      if (c != 0 && !seen[c]) {
        seen[c] = true;
        comm_gens.push_back(c);
      }
    }
  }
  return subgroup_closure(g, comm_gens);
}

Subgroup normal_closure(const GroupTable& g, const std::vector<std::size_t>& seed) {
  // Conjugates of the seed under the generators, iterated to a fixed point,
  // then closed under multiplication.
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> conj_gens;
  std::vector<std::size_t> todo;
  for (std::size_t s : seed) {
    if (s != 0 && !seen[s]) {
      seen[s] = true;
      conj_gens.push_back(s);
      todo.push_back(s);
    }
  }
  const std::vector<std::size_t>& gens = g.generator_indices();
  while (!todo.empty()) {
    std::size_t x = todo.back();
    todo.pop_back();
    for (std::size_t gi : gens) {
      std::size_t y = g.mul(g.mul(g.inv(gi), x), gi);
      if (!seen[y]) {
        seen[y] = true;
        conj_gens.push_back(y);
        todo.push_back(y);
      }
    }
  }
  return Subgroup(g, subgroup_closure(g, conj_gens));
}

namespace {

std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

}  // namespace

Subgroup normalizer(const GroupTable& g, const std::vector<std::size_t>& members) {
  std::vector<bool> in(g.order(), false);
  for (std::size_t m : members) in[m] = true;
  std::vector<std::size_t> result;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (std::size_t m : members) {
      if (!in[g.mul(g.mul(g.inv(x), m), x)]) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(x);
  }
  return Subgroup(g, std::move(result));
}

Subgroup sylow_subgroup(const GroupTable& g, std::size_t p) {
  std::size_t target = p_part(g.order(), p);
  if (target == 1) return trivial_subgroup(g);

  // Seed with a cyclic subgroup of order p.
  std::size_t seed = 0;
  for (std::size_t i = 1; i < g.order(); ++i) {
    std::size_t o = g.element_order(i);
    if (o % p == 0) {
      seed = g.power(i, static_cast<long long>(o / p));
      break;
    }
  }
  std::vector<std::size_t> current = subgroup_closure(g, {seed});

  // Grow inside the normalizer: pick a p-element of N(P)/P and adjoin a
  // preimage; each step multiplies |P| by p.
  while (current.size() < target) {
    Subgroup norm = normalizer(g, current);
    std::vector<bool> in_p(g.order(), false);
    for (std::size_t m : current) in_p[m] = true;

    std::size_t adjoin = g.order();
    for (std::size_t x : norm.members()) {
      if (in_p[x]) continue;
      // Pass to the p-element part z of x; whenever p divides [N(P):P] some x
      // has z outside P, and repeated p-th powers of z land in P eventually,
      // giving an element of order exactly p modulo P.
      std::size_t o = g.element_order(x);
      std::size_t pk = p_part(o, p);
      if (pk == 1) continue;
      std::size_t z = g.power(x, static_cast<long long>(o / pk));
      if (in_p[z]) continue;
      while (!in_p[g.power(z, static_cast<long long>(p))]) z = g.power(z, static_cast<long long>(p));
      adjoin = z;
      break;
    }
    if (adjoin == g.order()) {
      throw Error("sylow growth stalled below the full p-part (internal defect)");
    }
    std::vector<std::size_t> next_gens = current;
    next_gens.push_back(adjoin);
    current = subgroup_closure(g, next_gens);
  }
  return Subgroup(g, std::move(current));
}

Subgroup p_core(const GroupTable& g, std::size_t p) {
  Subgroup syl = sylow_subgroup(g, p);
  std::vector<std::size_t> core = syl.members();
  for (std::size_t x = 0; x < g.order() && core.size() > 1; ++x) {
    std::vector<bool> in_conj(g.order(), false);
    for (std::size_t m : syl.members()) in_conj[g.mul(g.mul(g.inv(x), m), x)] = true;
    std::vector<std::size_t> kept;
    for (std::size_t m : core) {
      if (in_conj[m]) kept.push_back(m);
    }
    core = std::move(kept);
  }
  return Subgroup(g, std::move(core));
}

Subgroup fitting_subgroup(const GroupTable& g) {
  std::vector<std::size_t> gens;
  for (std::size_t p : prime_divisors(g.order())) {
    Subgroup op = p_core(g, p);
    gens.insert(gens.end(), op.members().begin(), op.members().end());
  }
  return Subgroup(g, subgroup_closure(g, gens));
}

std::vector<Subgroup> upper_central_series(const GroupTable& g) {
  std::vector<Subgroup> series;
  series.push_back(center(g));
  while (true) {
    const Subgroup& zi = series.back();
    if (zi.is_whole_group()) break;
    QuotientResult q = quotient(g, zi.members());
    Subgroup zq = center(q.group);
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (zq.contains(q.projection[i])) next.push_back(i);
    }
    if (next.size() == zi.order()) break;
    series.emplace_back(g, std::move(next));
  }
  return series;
}

Subgroup hypercenter(const GroupTable& g) { return upper_central_series(g).back(); }

std::vector<Subgroup> minimal_normal_subgroups(const GroupTable& g) {
  // The normal closure of x equals that of any conjugate, so one closure per
  // nonidentity conjugacy class representative covers all candidates.
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  std::vector<std::vector<std::size_t>> closures;
  const std::vector<std::size_t>& gens = g.generator_indices();
  for (std::size_t i = 1; i < g.order(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit = {i};
    seen[i] = true;
    std::size_t head = 0;
    while (head < orbit.size()) {
      std::size_t x = orbit[head++];
      for (std::size_t gi : gens) {
        std::size_t y = g.mul(g.mul(g.inv(gi), x), gi);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    closures.push_back(normal_closure(g, {i}).members());
  }
  std::sort(closures.begin(), closures.end(),
            [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  closures.erase(std::unique(closures.begin(), closures.end()), closures.end());

  std::vector<Subgroup> minimal;
  for (const std::vector<std::size_t>& c : closures) {
    bool has_smaller = false;
    for (const Subgroup& m : minimal) {
      if (std::includes(c.begin(), c.end(), m.members().begin(), m.members().end())) {
        has_smaller = true;
        break;
      }
    }
    if (!has_smaller) minimal.emplace_back(g, c);
  }
  return minimal;
}

StructuralFlags structural_flags(const GroupTable& g) {
  StructuralFlags f;
  Subgroup whole = whole_group(g);
  f.abelian = whole.is_abelian();
  f.nilpotent = f.abelian || whole.is_nilpotent();
  Subgroup derived = derived_subgroup(g);
  f.metabelian = derived.is_abelian();
  // Derived series for solvability.
  std::vector<std::size_t> d = derived.members();
  while (true) {
    if (d.size() == 1) {
      f.solvable = true;
      break;
    }
    std::vector<std::size_t> next = derived_of(g, d);
    if (next.size() == d.size()) {
      f.solvable = false;
      break;
    }
    d = std::move(next);
  }
  return f;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace rue
