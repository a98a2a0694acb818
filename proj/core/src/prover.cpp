#include "iplogic/prover.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace iplogic {

namespace {

using Kind = Formula::Kind;

bool contains(const Context& ctx, const Formula& f) {
  return std::find(ctx.begin(), ctx.end(), f) != ctx.end();
}

// [a | ctx]
Context push(const Context& ctx, const Formula& a) {
  Context out;
  out.reserve(ctx.size() + 1);
  out.push_back(a);
  out.insert(out.end(), ctx.begin(), ctx.end());
  return out;
}

// [a, b | ctx]
Context push2(const Context& ctx, const Formula& a, const Formula& b) {
  Context out;
  out.reserve(ctx.size() + 2);
  out.push_back(a);
  out.push_back(b);
  out.insert(out.end(), ctx.begin(), ctx.end());
  return out;
}

// ctx without the element at index i, order preserved.
Context erase_at(const Context& ctx, std::size_t i) {
  Context out;
  out.reserve(ctx.size() - 1);
  out.insert(out.end(), ctx.begin(), ctx.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), ctx.begin() + static_cast<std::ptrdiff_t>(i) + 1, ctx.end());
  return out;
}

}  // namespace

SearchLimitError::SearchLimitError(std::uint64_t limit)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "proof search exceeded " << limit << " steps";
        return os.str();
      }()) {}

bool Prover::prove_theorem(ProverKind kind, const Formula& f) {
  Formula goal = kind == ProverKind::Classical
                     ? Formula::negation(Formula::negation(f))
                     : f;
  return prove_in(goal, Context{});
}

bool Prover::prove_in(const Formula& goal, const Context& ctx) {
  if (++steps_ > step_limit_) throw SearchLimitError(step_limit_);

  if (goal.is(Kind::Top)) return true;
  if (contains(ctx, goal)) return true;
  if (contains(ctx, Formula::bottom())) return true;

  switch (goal.kind()) {
    case Kind::Not:
      return prove_in(Formula::bottom(), push(ctx, goal.child()));
    case Kind::Iff:
      return prove_in(goal.right(), push(ctx, goal.left())) &&
             prove_in(goal.left(), push(ctx, goal.right()));
    case Kind::Imp:
      return prove_in(goal.right(), push(ctx, goal.left()));
    case Kind::RevImp:  // head <- body proves like body -> head
      return prove_in(goal.left(), push(ctx, goal.right()));
    case Kind::And:
      return prove_in(goal.left(), ctx) && prove_in(goal.right(), ctx);
    default:
      break;  // atoms, false and disjunctions fall through to reduction
  }

  for (std::size_t i = 0; i < ctx.size(); ++i) {
    // A bare "true" assumption never reduces usefully (its reduction would
    // require "false" in the context, which is already a proof); skip it.
    if (ctx[i].is(Kind::Top)) continue;
    if (auto next = reduce(ctx[i], goal, erase_at(ctx, i)))
      return prove_in(goal, *next);  // committed: no backtracking over i
  }

  if (goal.is(Kind::Or))
    return prove_in(goal.left(), ctx) || prove_in(goal.right(), ctx);
  return false;
}

std::optional<Context> Prover::reduce(const Formula& red, const Formula& goal, const Context& rest) {
  switch (red.kind()) {
    case Kind::Top:
      return reduce_impl(Formula::bottom(), Formula::bottom(), rest);
    case Kind::Not:
      return reduce_impl(red.child(), Formula::bottom(), rest);
    case Kind::Imp:
      return reduce_impl(red.left(), red.right(), rest);
    case Kind::RevImp:
      return reduce_impl(red.right(), red.left(), rest);
    case Kind::And:
      return push2(rest, red.left(), red.right());
    case Kind::Iff:
      return push2(rest, Formula::implication(red.left(), red.right()),
                   Formula::implication(red.right(), red.left()));
    case Kind::Or:
      // Both branches must prove the goal; the left one is checked here and
      // the right one is kept for the continuing search.
      if (prove_in(goal, push(rest, red.left()))) return push(rest, red.right());
      return std::nullopt;
    default:
      return std::nullopt;  // atoms and false do not reduce
  }
}

std::optional<Context> Prover::reduce_impl(const Formula& antecedent, const Formula& consequent,
                                           const Context& rest) {
  switch (antecedent.kind()) {
    case Kind::Top:
      return push(rest, consequent);
    case Kind::Not:
      if (prove_in(Formula::implication(antecedent.child(), Formula::bottom()), rest))
        return push(rest, consequent);
      return std::nullopt;
    case Kind::Imp:
      if (prove_in(antecedent,
                   push(rest, Formula::implication(antecedent.right(), consequent))))
        return push(rest, consequent);
      return std::nullopt;
    case Kind::RevImp:
      if (prove_in(Formula::implication(antecedent.right(), antecedent.left()),
                   push(rest, Formula::implication(antecedent.left(), consequent))))
        return push(rest, consequent);
      return std::nullopt;
    case Kind::And:
      return push(rest, Formula::implication(
                            antecedent.left(),
                            Formula::implication(antecedent.right(), consequent)));
    case Kind::Or:
      return push2(rest, Formula::implication(antecedent.left(), consequent),
                   Formula::implication(antecedent.right(), consequent));
    case Kind::Iff:
      return push(rest,
                  Formula::implication(
                      Formula::implication(antecedent.left(), antecedent.right()),
                      Formula::implication(
                          Formula::implication(antecedent.right(), antecedent.left()),
                          consequent)));
    default:  // atom or false
      if (contains(rest, antecedent)) return push(rest, consequent);
      return std::nullopt;
  }
}

bool proves(ProverKind kind, const Formula& f) {
  return Prover().prove_theorem(kind, f);
}

}  // namespace iplogic
