#include "rue/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rue/errors.hpp"

namespace rue {

GroupTable GroupTable::from_generators(std::size_t degree, std::vector<Permutation> gens,
                                       std::size_t bound) {
  if (degree == 0) throw InvalidPermutation("degree must be at least 1");
  for (const Permutation& p : gens) {
    if (p.degree() != degree) {
      throw InvalidPermutation("generator degree " + std::to_string(p.degree()) +
                               " does not match group degree " + std::to_string(degree));
    }
  }

  GroupTable table;
  table.degree_ = degree;

  Permutation id = Permutation::identity(degree);
  table.elements_.push_back(id);
  table.index_.emplace(id, 0);

  // Breadth-first closure under right multiplication by the generators; each
  // new level is appended in lexicographic order of image sequences.
  std::vector<std::size_t> frontier = {0};
  while (!frontier.empty()) {
    std::set<Permutation> fresh;
    for (std::size_t idx : frontier) {
      for (const Permutation& g : gens) {
        Permutation next = table.elements_[idx] * g;
        if (table.index_.find(next) == table.index_.end() && !fresh.count(next)) {
          fresh.insert(next);
        }
      }
    }
    frontier.clear();
    for (const Permutation& p : fresh) {
      if (table.elements_.size() >= bound) {
        throw EnumerationBoundExceeded("group closure exceeds bound of " + std::to_string(bound) +
                                       " elements");
      }
      std::size_t idx = table.elements_.size();
      table.elements_.push_back(p);
      table.index_.emplace(p, idx);
      frontier.push_back(idx);
    }
  }

  std::size_t n = table.elements_.size();
  table.inverse_.resize(n);
  table.orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    table.inverse_[i] = table.index_.at(table.elements_[i].inverse());
    table.orders_[i] = table.elements_[i].order();
  }
  for (const Permutation& g : gens) {
    std::size_t idx = table.index_.at(g);
    if (idx != 0 &&
        std::find(table.generators_.begin(), table.generators_.end(), idx) == table.generators_.end()) {
      table.generators_.push_back(idx);
    }
  }
  return table;
}

std::size_t GroupTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? order() : it->second;
}

std::size_t GroupTable::mul(std::size_t i, std::size_t j) const {
  return index_.at(elements_[i] * elements_[j]);
}

std::size_t GroupTable::power(std::size_t i, long long k) const {
  return index_.at(elements_[i].power(k));
}

std::size_t GroupTable::exponent() const {
  std::size_t e = 1;
  for (std::size_t o : orders_) e = std::lcm(e, o);
  return e;
}

QuotientResult quotient(const GroupTable& g, const std::vector<std::size_t>& normal_members) {
  std::size_t n = g.order();
  std::vector<bool> in_n(n, false);
  for (std::size_t m : normal_members) in_n[m] = true;
  if (normal_members.empty() || !in_n[0])
    throw NotNormal("subgroup must contain the identity");

  // Normality: closure under conjugation by the parent's generators suffices.
  for (std::size_t gen : g.generator_indices()) {
    for (std::size_t m : normal_members) {
      std::size_t conj = g.mul(g.mul(g.inv(gen), m), gen);
      if (!in_n[conj]) {
        throw NotNormal("subgroup is not normal: conjugate of element " + std::to_string(m) +
                        " escapes");
      }
    }
  }

  // Right cosets Nh, numbered in order of first appearance over the element
  // list; the identity's coset (N itself) is point 0.
  std::vector<std::size_t> coset_of(n, n);
  std::size_t num_cosets = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (coset_of[i] != n) continue;
    std::size_t c = num_cosets++;
    for (std::size_t m : normal_members) coset_of[g.mul(m, i)] = c;
  }

  // Coset representatives: the minimal element index in each coset.
  std::vector<std::size_t> rep(num_cosets, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rep[coset_of[i]] == n) rep[coset_of[i]] = i;
  }

  auto action = [&](std::size_t gi) {
    std::vector<Permutation::Point> im(num_cosets);
    for (std::size_t c = 0; c < num_cosets; ++c) {
      im[c] = static_cast<Permutation::Point>(coset_of[g.mul(rep[c], gi)]);
    }
    return Permutation(std::move(im));
  };

  std::vector<Permutation> images;
  for (std::size_t gen : g.generator_indices()) images.push_back(action(gen));
  GroupTable q = GroupTable::from_generators(num_cosets == 0 ? 1 : num_cosets, images,
                                             std::max<std::size_t>(num_cosets + 1, 2));

  QuotientResult out{std::move(q), std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.projection[i] = out.group.index_of(action(i));
  }
  return out;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h, std::size_t bound) {
  std::size_t dg = g.degree(), dh = h.degree();
  auto embed_left = [&](const Permutation& p) {
    std::vector<Permutation::Point> im(dg + dh);
    for (std::size_t i = 0; i < dg; ++i) im[i] = p.apply(static_cast<Permutation::Point>(i));
    for (std::size_t i = 0; i < dh; ++i) im[dg + i] = static_cast<Permutation::Point>(dg + i);
    return Permutation(std::move(im));
  };
  auto embed_right = [&](const Permutation& p) {
    std::vector<Permutation::Point> im(dg + dh);
    for (std::size_t i = 0; i < dg; ++i) im[i] = static_cast<Permutation::Point>(i);
    for (std::size_t i = 0; i < dh; ++i)
      im[dg + i] = static_cast<Permutation::Point>(dg + p.apply(static_cast<Permutation::Point>(i)));
    return Permutation(std::move(im));
  };

  std::vector<Permutation> gens;
  for (std::size_t gi : g.generator_indices()) gens.push_back(embed_left(g.element(gi)));
  for (std::size_t hi : h.generator_indices()) gens.push_back(embed_right(h.element(hi)));
  return GroupTable::from_generators(dg + dh, gens, bound);
}

}  // namespace rue
