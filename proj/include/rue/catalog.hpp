#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rue/group.hpp"

namespace rue {

// One catalog row: a construction string (the same grammar build_group
// accepts) and the order the construction formula predicts.
struct CatalogEntry {
  std::string spec;
  std::size_t order = 0;
};

// The enumeration bound: RUE_MAX_ELEMENTS from the environment when set to a
// positive integer, else the library default.
std::size_t enumeration_bound();

// Builds the group named by a construction string:
//   cyclic:N          the cyclic group of order N (N >= 1)
//   dihedral:N        the dihedral group of order N = 2m, m >= 3
//   dicyclic:N        the dicyclic group of order N = 4m, m >= 2
//   symmetric:N       Sym_N, N >= 1
//   alternating:N     Alt_N, N >= 3
//   gamma:Q           AGL(1,Q), Q > 2 a prime power
//   elementary:P^K    (C_P)^K, P prime, K >= 1
//   a*b               direct product of constructions a and b
//   @path             generators from a group file
// Throws ParseError for malformed specs.
GroupTable build_group(const std::string& spec, std::size_t bound = enumeration_bound());

// The deterministic verification catalog, bounded by group order: cyclic,
// dihedral, and dicyclic families; Sym_n and Alt_n that fit; the affine
// groups AGL(1,q) for prime powers 2 < q <= 32; elementary abelian p-groups;
// affine x affine and affine x cyclic products; and a fixed list of mixed
// abelian products. Entries are unique by spec and listed family by family
// in ascending order.
std::vector<CatalogEntry> build_catalog(std::size_t max_order);

}  // namespace rue
