#pragma once

#include <map>
#include <ostream>
#include <string>

#include "iplogic/formula.hpp"

namespace iplogic {

// Assignment of truth values to atom names.
using Valuation = std::map<std::string, bool>;

// Classical truth value of f under v.  Throws std::invalid_argument if an
// atom of f is missing from v.
bool eval(const Formula& f, const Valuation& v);

// Checks all 2^n valuations of the atoms of f.  Throws std::invalid_argument
// when f has more than kMaxTableAtoms atoms.
inline constexpr std::size_t kMaxTableAtoms = 24;
bool is_classical_tautology(const Formula& f);

// Writes one row per valuation as "[v1,...,vn]-->b", atoms sorted ascending,
// valuations in binary counting order (the last atom flips fastest).
void print_truth_table(const Formula& f, std::ostream& os);

}  // namespace iplogic
