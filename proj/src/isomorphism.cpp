#include "rue/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "rue/conjugacy.hpp"
#include "rue/errors.hpp"
#include "rue/subgroup.hpp"

namespace rue {

namespace {

std::map<std::size_t, std::size_t> order_histogram(const GroupTable& g) {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t i = 0; i < g.order(); ++i) ++h[g.element_order(i)];
  return h;
}

std::vector<std::size_t> class_size_multiset(const GroupTable& g) {
  std::vector<std::size_t> sizes;
  ConjClassSet classes = conjugacy_classes(g);
  for (const ConjClass& c : classes.all()) sizes.push_back(c.members.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Greedy generating sequence: scan elements in index order, keeping those not
// yet inside the closure of the earlier picks.
std::vector<std::size_t> generating_sequence(const GroupTable& g) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> closure = {0};
  for (std::size_t i = 1; i < g.order() && closure.size() < g.order(); ++i) {
    if (std::binary_search(closure.begin(), closure.end(), i)) continue;
    gens.push_back(i);
    closure = subgroup_closure(g, gens);
  }
  return gens;
}

struct Matcher {
  const GroupTable& g;
  const GroupTable& h;
  std::vector<std::size_t> gens;           // generating sequence of g
  std::vector<std::size_t> phi;            // g index -> h index, or kUndef
  std::vector<char> used;                  // h indices already taken
  std::vector<std::size_t> mapped;         // g indices with phi defined, in BFS order
  static constexpr std::size_t kUndef = static_cast<std::size_t>(-1);

  // Re-closes `mapped` under the first `depth` generators, defining phi along
  // the way and checking every product edge phi(x*s) = phi(x)*phi(s). Returns
  // false on any inconsistency or collision; `added` records assignments for
  // rollback.
  bool close(std::size_t depth, std::vector<std::size_t>& added) {
    for (std::size_t i = 0; i < mapped.size(); ++i) {
      std::size_t x = mapped[i];
      for (std::size_t t = 0; t < depth; ++t) {
        std::size_t s = gens[t];
        std::size_t y = g.mul(x, s);
        std::size_t img = h.mul(phi[x], phi[s]);
        if (phi[y] == kUndef) {
          if (used[img]) return false;
          phi[y] = img;
          used[img] = 1;
          mapped.push_back(y);
          added.push_back(y);
        } else if (phi[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == gens.size()) return mapped.size() == g.order();
    std::size_t target = gens[depth];
    std::size_t want_order = g.element_order(target);
    for (std::size_t cand = 0; cand < h.order(); ++cand) {
      if (used[cand] || h.element_order(cand) != want_order) continue;
      std::vector<std::size_t> added;
      phi[target] = cand;
      used[cand] = 1;
      mapped.push_back(target);
      added.push_back(target);
      bool ok = close(depth + 1, added);
      if (ok && extend(depth + 1)) return true;
      for (std::size_t y : added) {
        used[phi[y]] = 0;
        phi[y] = kUndef;
      }
      mapped.resize(mapped.size() - added.size());
    }
    return false;
  }
};

}  // namespace

bool brute_force_isomorphic(const GroupTable& g, const GroupTable& h) {
  if (g.order() != h.order()) {
    throw OrderMismatch("isomorphism oracle requires equal orders, got " +
                        std::to_string(g.order()) + " and " + std::to_string(h.order()));
  }
  if (g.order() > kIsomorphismOracleBound) {
    throw OracleBoundExceeded("isomorphism oracle bounded at " +
                              std::to_string(kIsomorphismOracleBound) + " elements, got " +
                              std::to_string(g.order()));
  }
  if (order_histogram(g) != order_histogram(h)) return false;
  if (class_size_multiset(g) != class_size_multiset(h)) return false;

  Matcher m{g, h, generating_sequence(g), {}, {}, {}};
  m.phi.assign(g.order(), Matcher::kUndef);
  m.used.assign(h.order(), 0);
  m.phi[0] = 0;
  m.used[0] = 1;
  m.mapped = {0};
  return m.extend(0);
}

}  // namespace rue
