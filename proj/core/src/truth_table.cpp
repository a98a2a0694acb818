#include "iplogic/truth_table.hpp"

#include <stdexcept>

namespace iplogic {

bool eval(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Top: return true;
    case Formula::Kind::Bottom: return false;
    case Formula::Kind::Atom: {
      auto it = v.find(f.name());
      if (it == v.end())
        throw std::invalid_argument("valuation does not assign atom '" + f.name() + "'");
      return it->second;
    }
    case Formula::Kind::Not: return !eval(f.child(), v);
    case Formula::Kind::And: return eval(f.left(), v) && eval(f.right(), v);
    case Formula::Kind::Or: return eval(f.left(), v) || eval(f.right(), v);
    case Formula::Kind::Iff: return eval(f.left(), v) == eval(f.right(), v);
    case Formula::Kind::Imp: return !eval(f.left(), v) || eval(f.right(), v);
    case Formula::Kind::RevImp: return eval(f.left(), v) || !eval(f.right(), v);
  }
  return false;  // unreachable
}

namespace {

void check_atom_bound(const AtomSet& atoms) {
  if (atoms.size() > kMaxTableAtoms)
    throw std::invalid_argument("formula has " + std::to_string(atoms.size()) +
                                " atoms; truth tables support at most " +
                                std::to_string(kMaxTableAtoms));
}

// Visits valuations in binary counting order: the first atom is the most
// significant digit, the last flips fastest.
template <typename Visit>
void for_each_valuation(const AtomSet& atoms, Visit visit) {
  const std::size_t n = atoms.size();
  Valuation v;
  for (const auto& a : atoms) v[a] = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i)
      v[atoms[i]] = ((mask >> (n - 1 - i)) & 1) != 0;
    if (!visit(v)) return;
  }
}

}  // namespace

bool is_classical_tautology(const Formula& f) {
  const AtomSet atoms = atoms_of(f);
  check_atom_bound(atoms);
  bool tautology = true;
  for_each_valuation(atoms, [&](const Valuation& v) {
    tautology = eval(f, v);
    return tautology;  // stop at the first falsifying row
  });
  return tautology;
}

void print_truth_table(const Formula& f, std::ostream& os) {
  const AtomSet atoms = atoms_of(f);
  check_atom_bound(atoms);
  for_each_valuation(atoms, [&](const Valuation& v) {
    os << '[';
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (i) os << ',';
      os << (v.at(atoms[i]) ? '1' : '0');
    }
    os << "]-->" << (eval(f, v) ? '1' : '0') << '\n';
    return true;
  });
}

}  // namespace iplogic
