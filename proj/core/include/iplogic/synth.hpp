#pragma once

#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iplogic/formula.hpp"
#include "iplogic/prover.hpp"
#include "iplogic/stream.hpp"

namespace iplogic {

// An atom or its negation, used as a candidate assumption.
struct Literal {
  std::string atom;
  bool negated = false;

  Formula to_formula() const {
    Formula a = Formula::atom(atom);
    return negated ? Formula::negation(std::move(a)) : a;
  }

  friend bool operator==(const Literal&, const Literal&) = default;
};

// Connective used to combine chosen literals into one candidate assumption.
enum class Aggregator { And, Or, Imp, RevImp, Iff };

// Lazily enumerated candidate assumptions; order is fully determined by the
// inputs, and every stream is finite.
using CandidateStream = Stream<Formula>;

struct SynthConfig {
  ProverKind prover = ProverKind::Intuitionistic;
  Aggregator aggregator = Aggregator::And;
  bool with_neg = true;
  // Atoms the candidates may mention, duplicate-free, in caller order.
  // Absent: use the atoms of the target formula.
  std::optional<AtomSet> abducibles;
};

// config.abducibles if present, else atoms_of(f).
AtomSet effective_abducibles(const SynthConfig& config, const Formula& f);

// Each atom as a positive literal, immediately followed by its negative
// literal when with_neg is set; atom order preserved.
std::vector<Literal> mark_hypos(bool with_neg, const AtomSet& atoms);

// All order-preserving subsequences of items, grouped by ascending size;
// within one size, choices are made leftmost-first (so for [x,y,z]:
// [], [x], [y], [z], [x,y], [x,z], [y,z], [x,y,z]).
template <typename T>
Stream<std::vector<T>> subsets(std::vector<T> items);

// parts right-folded under op: [] gives true, [x] gives x, and otherwise
// x1 op (x2 op (... op xn)).
Formula join_chain(Aggregator op, std::span<const Formula> parts);

// Candidate assumptions built from parts:
//   And, Or     one candidate, join_chain(op, parts);
//   Imp, RevImp one candidate per choice of head h (in part order): the
//               remaining parts in order, then h, chained under ->;
//   Iff         one candidate per permutation of parts, in lexicographic
//               order of the original positions, chained under <->.
CandidateStream join_with(Aggregator op, std::vector<Formula> parts);

// Candidate assumptions A over the abducibles such that A is consistent
// (A -> false is not provable) and A -> f is provable, in subsets-then-
// join_with order.
CandidateStream any_protasis(const SynthConfig& config, const Formula& f);

// Strictly weaker-than: q -> p is provable but p -> q is not.
bool weaker(ProverKind kind, const Formula& p, const Formula& q);

// The candidates with no strictly weaker rival, sorted canonically.  If true
// is among the candidates it is the unique weakest one.
std::vector<Formula> weakest_among(ProverKind kind, std::vector<Formula> candidates);

// weakest_among over every candidate any_protasis emits.
std::vector<Formula> weakest_protasis(const SynthConfig& config, const Formula& f);

// Abductive explanations: candidates E over the abducibles (conjunctions of
// literals, negations allowed) such that E & prog proves goal, E & prog
// proves the integrity constraint ic, and E & prog is consistent.
CandidateStream explain(ProverKind kind, const std::optional<AtomSet>& abducibles,
                        const Formula& prog, const Formula& ic, const Formula& goal);

// --- implementation of the template ---------------------------------------

namespace detail {

// Advances indices to the lexicographically next size-k combination of
// {0..n-1}; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

template <typename T>
Stream<std::vector<T>> subsets(std::vector<T> items) {
  struct State {
    std::vector<T> items;
    std::vector<std::size_t> pick;
    std::size_t size = 0;
    bool fresh = true, done = false;
  };
  auto state = std::make_shared<State>();
  state->items = std::move(items);

  return Stream<std::vector<T>>([state]() -> std::optional<std::vector<T>> {
    State& s = *state;
    if (s.done) return std::nullopt;
    const std::size_t n = s.items.size();
    auto materialize = [&s] {
      std::vector<T> out;
      out.reserve(s.pick.size());
      for (std::size_t i : s.pick) out.push_back(s.items[i]);
      return out;
    };
    if (s.fresh) {  // the empty subsequence
      s.fresh = false;
      return materialize();
    }
    if (!s.pick.empty() && detail::next_combination(s.pick, n)) return materialize();
    if (++s.size > n) {
      s.done = true;
      return std::nullopt;
    }
    s.pick.resize(s.size);
    std::iota(s.pick.begin(), s.pick.end(), std::size_t{0});
    return materialize();
  });
}

}  // namespace iplogic
