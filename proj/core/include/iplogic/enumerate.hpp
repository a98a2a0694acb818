#pragma once

#include <cstddef>
#include <vector>

#include "iplogic/formula.hpp"
#include "iplogic/stream.hpp"

namespace iplogic {

// All distinct formulas over the given atoms with connective-nesting depth at
// most max_depth (depth 0 = atoms and constants), each exactly once:
//
//   count(0) = |atoms| + 2
//   count(d) = count(0) + count(d-1) + 5 * count(d-1)^2
//
// Order: atoms as given, true, false; then negations of every depth-(d-1)
// formula; then, per connective in the order & v <-> -> <-, all pairs of
// depth-(d-1) formulas with the left operand varying slowest.  The stream is
// lazy; only the depth-(d-1) layer is materialized.
Stream<Formula> enumerate_formulas(AtomSet atoms, std::size_t max_depth);

// Same sequence, fully materialized.  Intended for small depths.
std::vector<Formula> enumerate_to_vector(const AtomSet& atoms, std::size_t max_depth);

}  // namespace iplogic
