#pragma once

#include "rue/group.hpp"

namespace rue {

inline constexpr std::size_t kIsomorphismOracleBound = 500;

// Brute-force isomorphism test by backtracking over generator images, pruned
// by element orders and by incremental homomorphism consistency. Intended as a
// ground-truth oracle for small groups only.
//
// Throws OrderMismatch when |G| != |H| and OracleBoundExceeded above 500.
bool brute_force_isomorphic(const GroupTable& g, const GroupTable& h);

}  // namespace rue
