#include "iplogic/enumerate.hpp"

#include <array>
#include <memory>
#include <utility>

namespace iplogic {

namespace {

using Builder = Formula (*)(Formula, Formula);

constexpr std::array<Builder, 5> kBinaryBuilders = {
    Formula::conjunction, Formula::disjunction, Formula::equivalence,
    Formula::implication, Formula::rev_implication,
};

std::vector<Formula> leaves(const AtomSet& atoms) {
  std::vector<Formula> out;
  out.reserve(atoms.size() + 2);
  for (const auto& name : atoms) out.push_back(Formula::atom(name));
  out.push_back(Formula::top());
  out.push_back(Formula::bottom());
  return out;
}

}  // namespace

std::vector<Formula> enumerate_to_vector(const AtomSet& atoms, std::size_t max_depth) {
  std::vector<Formula> out = leaves(atoms);
  if (max_depth == 0) return out;
  const std::vector<Formula> prev = enumerate_to_vector(atoms, max_depth - 1);
  out.reserve(out.size() + prev.size() + kBinaryBuilders.size() * prev.size() * prev.size());
  for (const auto& f : prev) out.push_back(Formula::negation(f));
  for (Builder build : kBinaryBuilders)
    for (const auto& l : prev)
      for (const auto& r : prev) out.push_back(build(l, r));
  return out;
}

Stream<Formula> enumerate_formulas(AtomSet atoms, std::size_t max_depth) {
  struct State {
    std::vector<Formula> base;   // leaves
    std::vector<Formula> prev;   // full enumeration one depth shallower
    std::size_t phase = 0;       // 0 = leaves, 1 = negations, 2 = binary
    std::size_t op = 0, i = 0, j = 0;
  };
  auto state = std::make_shared<State>();
  state->base = leaves(atoms);
  if (max_depth > 0) state->prev = enumerate_to_vector(atoms, max_depth - 1);

  return Stream<Formula>([state]() -> std::optional<Formula> {
    State& s = *state;
    if (s.phase == 0) {
      if (s.i < s.base.size()) return s.base[s.i++];
      s.phase = 1;
      s.i = 0;
    }
    if (s.phase == 1) {
      if (s.i < s.prev.size()) return Formula::negation(s.prev[s.i++]);
      s.phase = 2;
      s.i = s.j = 0;
    }
    while (s.op < kBinaryBuilders.size()) {
      if (s.i < s.prev.size()) {
        Formula out = kBinaryBuilders[s.op](s.prev[s.i], s.prev[s.j]);
        if (++s.j == s.prev.size()) {
          s.j = 0;
          ++s.i;
        }
        return out;
      }
      ++s.op;
      s.i = s.j = 0;
    }
    return std::nullopt;
  });
}

}  // namespace iplogic
