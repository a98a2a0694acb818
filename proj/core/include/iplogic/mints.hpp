#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iplogic/formula.hpp"
#include "iplogic/prover.hpp"
#include "iplogic/stream.hpp"
#include "iplogic/synth.hpp"

namespace iplogic {

// The canonical implicational shapes (after Mints): every propositional
// formula is equiprovable with a conjunction of instances of these.  The
// declaration order is the order shapes are tried when segmenting a slot
// sequence.
enum class MintsShape {
  Var,          // p
  NegVar,       // ~p
  Imp,          // p -> q
  ImpImp,       // (p -> q) -> r
  ImpChain,     // p -> (q -> r)
  ImpOr,        // p -> (q v r)
  ImpNeg,       // p -> ~q
  NegImp,       // ~p -> q
};

inline constexpr std::array<MintsShape, 8> kMintsShapes = {
    MintsShape::Var,      MintsShape::NegVar,  MintsShape::Imp,    MintsShape::ImpImp,
    MintsShape::ImpChain, MintsShape::ImpOr,   MintsShape::ImpNeg, MintsShape::NegImp,
};

// Number of atom slots the shape consumes.
constexpr std::size_t arity(MintsShape shape) {
  switch (shape) {
    case MintsShape::Var:
    case MintsShape::NegVar:
      return 1;
    case MintsShape::Imp:
    case MintsShape::ImpNeg:
    case MintsShape::NegImp:
      return 2;
    default:
      return 3;
  }
}

// Instantiates shape with exactly arity(shape) atom names.
Formula instantiate(MintsShape shape, std::span<const std::string> slots);

// Atom names assigned to consecutive slots.
using SlotAssignment = std::vector<std::string>;

// All assignments of `length` slots onto all of `classes` (every class used
// at least once) where classes first appear in their given order.  Order:
// the first slot takes the first class; each later slot either joins the
// current class or defers to the remaining classes, with the earliest
// undecided slot flipping fastest and deferred slots labeled recursively.
// Empty when length < |classes|.
Stream<SlotAssignment> surjective_labelings(std::size_t length, AtomSet classes);

// All ways to segment slots into consecutive shape instances, trying shapes
// in kMintsShapes order at each position; each emitted conjunct sequence is
// sorted canonically with duplicates removed.
Stream<std::vector<Formula>> mints_conjuncts(SlotAssignment slots);

// Premises in canonical form that are consistent and prove f: conjunctions
// (right-chained under &) of shape instances over subsets of the abducibles,
// enumerated subset-by-subset, then by slot length 0..budget (default: the
// number of abducibles), and deduplicated across the whole stream.
CandidateStream any_mints_premise(ProverKind kind, std::optional<AtomSet> abducibles,
                                  const Formula& f,
                                  std::optional<std::size_t> budget = std::nullopt);

// weakest_among over every premise any_mints_premise emits.
std::vector<Formula> weakest_mints_premise(ProverKind kind, std::optional<AtomSet> abducibles,
                                           const Formula& f,
                                           std::optional<std::size_t> budget = std::nullopt);

}  // namespace iplogic
