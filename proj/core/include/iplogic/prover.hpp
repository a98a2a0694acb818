#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "iplogic/formula.hpp"

namespace iplogic {

enum class ProverKind { Intuitionistic, Classical };

// Assumptions available to a proof, ordered; duplicates are allowed and the
// order is significant only for the deterministic reduction scan (it never
// changes provability).
using Context = std::vector<Formula>;

// Raised when a proof search exceeds its step budget.  The search always
// terminates, so with the default budget this indicates either an extremely
// large input or a defect.
class SearchLimitError : public std::runtime_error {
public:
  explicit SearchLimitError(std::uint64_t limit);
};

inline constexpr std::uint64_t kDefaultStepLimit = 10'000'000;

// Decision procedure for propositional provability, built on a terminating,
// contraction-free sequent search (Dyckhoff's G4ip).  Classical provability
// goes through Glivenko's theorem: f is a classical theorem iff ~~f is an
// intuitionistic one.
//
// A Prover instance counts sequents visited across all calls made through it;
// exceeding the step limit raises SearchLimitError.  Instances are cheap;
// use one per top-level query for a per-query budget (as proves() does).
class Prover {
public:
  explicit Prover(std::uint64_t step_limit = kDefaultStepLimit) : step_limit_(step_limit) {}

  // True iff f is a theorem of the selected logic.
  bool prove_theorem(ProverKind kind, const Formula& f);

  // True iff ctx entails goal intuitionistically.  The search tries, in
  // order: trivial goals (true, a goal present in ctx, false in ctx);
  // invertible right rules on the goal; a left-to-right reduction scan over
  // ctx committing to the first reducible assumption; and finally the two
  // disjunct subgoals when the goal is a disjunction.
  bool prove_in(const Formula& goal, const Context& ctx);

  // One reduction step for the assumption red, with rest the remaining
  // context: returns the replacement context, or nullopt if red does not
  // reduce.  Breaking down an implication delegates to reduce_impl.
  std::optional<Context> reduce(const Formula& red, const Formula& goal, const Context& rest);

  // Reduction of the assumption antecedent -> consequent by the shape of the
  // antecedent.  Atomic antecedents require the atom to occur in rest;
  // negated and implicational antecedents require an auxiliary subproof.
  std::optional<Context> reduce_impl(const Formula& antecedent, const Formula& consequent,
                                     const Context& rest);

  // Sequents visited so far through this instance.
  std::uint64_t steps() const { return steps_; }

private:
  std::uint64_t step_limit_;
  std::uint64_t steps_ = 0;
};

// One-shot provability check with a fresh default-budget Prover.
bool proves(ProverKind kind, const Formula& f);

}  // namespace iplogic
