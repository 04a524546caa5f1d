#include "rue/conjugacy.hpp"

#include <algorithm>

namespace rue {

ConjClassSet::ConjClassSet(const GroupTable& g, std::vector<ConjClass> classes)
    : group_(&g), classes_(std::move(classes)), class_of_(g.order()) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (std::size_t m : classes_[c].members) class_of_[m] = c;
  }
}

std::size_t ConjClassSet::power_class(std::size_t c, long long k) const {
  return class_of_[group_->power(classes_[c].representative, k)];
}

ConjClassSet conjugacy_classes(const GroupTable& g) {
  std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<ConjClass> classes;

  // Orbits under conjugation by the generators (which generate the whole
  // conjugation action). Trivial generator set means every class is a singleton.
  const std::vector<std::size_t>& gens = g.generator_indices();
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ConjClass cc;
    std::vector<std::size_t> todo = {start};
    seen[start] = true;
    while (!todo.empty()) {
      std::size_t x = todo.back();
      todo.pop_back();
      cc.members.push_back(x);
      for (std::size_t gi : gens) {
        std::size_t y = g.mul(g.mul(g.inv(gi), x), gi);
        if (!seen[y]) {
          seen[y] = true;
          todo.push_back(y);
        }
      }
    }
    std::sort(cc.members.begin(), cc.members.end());
    cc.representative = cc.members.front();
    classes.push_back(std::move(cc));
  }

  std::sort(classes.begin(), classes.end(), [&](const ConjClass& a, const ConjClass& b) {
    std::size_t oa = g.element_order(a.representative);
    std::size_t ob = g.element_order(b.representative);
    if (oa != ob) return oa < ob;
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.representative < b.representative;
  });
  return ConjClassSet(g, std::move(classes));
}

}  // namespace rue
