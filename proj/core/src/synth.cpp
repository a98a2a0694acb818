#include "iplogic/synth.hpp"

#include <algorithm>
#include <utility>

namespace iplogic {

AtomSet effective_abducibles(const SynthConfig& config, const Formula& f) {
  return config.abducibles ? *config.abducibles : atoms_of(f);
}

std::vector<Literal> mark_hypos(bool with_neg, const AtomSet& atoms) {
  std::vector<Literal> out;
  out.reserve(atoms.size() * (with_neg ? 2 : 1));
  for (const auto& name : atoms) {
    out.push_back({name, false});
    if (with_neg) out.push_back({name, true});
  }
  return out;
}

namespace {

Formula apply(Aggregator op, Formula lhs, Formula rhs) {
  switch (op) {
    case Aggregator::And: return Formula::conjunction(std::move(lhs), std::move(rhs));
    case Aggregator::Or: return Formula::disjunction(std::move(lhs), std::move(rhs));
    case Aggregator::Iff: return Formula::equivalence(std::move(lhs), std::move(rhs));
    case Aggregator::Imp: return Formula::implication(std::move(lhs), std::move(rhs));
    case Aggregator::RevImp: return Formula::rev_implication(std::move(lhs), std::move(rhs));
  }
  return lhs;  // unreachable
}

}  // namespace

Formula join_chain(Aggregator op, std::span<const Formula> parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = apply(op, parts[i], std::move(acc));
  return acc;
}

CandidateStream join_with(Aggregator op, std::vector<Formula> parts) {
  switch (op) {
    case Aggregator::And:
    case Aggregator::Or: {
      Formula joined = join_chain(op, parts);
      return CandidateStream(
          [joined = std::move(joined), spent = false]() mutable -> std::optional<Formula> {
            if (spent) return std::nullopt;
            spent = true;
            return joined;
          });
    }
    case Aggregator::Imp:
    case Aggregator::RevImp: {
      // Both implication flavors emit ->-chains: premises keep their order
      // and the chosen head goes last.  No parts means no candidates.
      struct State {
        std::vector<Formula> parts;
        std::size_t head = 0;
      };
      auto state = std::make_shared<State>();
      state->parts = std::move(parts);
      return CandidateStream([state]() -> std::optional<Formula> {
        State& s = *state;
        if (s.head >= s.parts.size()) return std::nullopt;
        std::vector<Formula> chain;
        chain.reserve(s.parts.size());
        for (std::size_t i = 0; i < s.parts.size(); ++i)
          if (i != s.head) chain.push_back(s.parts[i]);
        chain.push_back(s.parts[s.head]);
        ++s.head;
        return join_chain(Aggregator::Imp, chain);
      });
    }
    case Aggregator::Iff: {
      struct State {
        std::vector<Formula> parts;
        std::vector<std::size_t> perm;
        bool done = false;
      };
      auto state = std::make_shared<State>();
      state->parts = std::move(parts);
      state->perm.resize(state->parts.size());
      std::iota(state->perm.begin(), state->perm.end(), std::size_t{0});
      return CandidateStream([state]() -> std::optional<Formula> {
        State& s = *state;
        if (s.done) return std::nullopt;
        std::vector<Formula> ordered;
        ordered.reserve(s.parts.size());
        for (std::size_t i : s.perm) ordered.push_back(s.parts[i]);
        if (!std::next_permutation(s.perm.begin(), s.perm.end())) s.done = true;
        return join_chain(Aggregator::Iff, ordered);
      });
    }
  }
  return CandidateStream::empty();  // unreachable
}

namespace {

bool consistent(ProverKind kind, const Formula& assumption) {
  return !proves(kind, Formula::implication(assumption, Formula::bottom()));
}

}  // namespace

CandidateStream any_protasis(const SynthConfig& config, const Formula& f) {
  struct State {
    ProverKind kind;
    Aggregator aggregator;
    Formula target;
    Stream<std::vector<Literal>> choices;
    std::optional<CandidateStream> joined;
  };
  auto state = std::make_shared<State>(State{
      config.prover,
      config.aggregator,
      f,
      subsets(mark_hypos(config.with_neg, effective_abducibles(config, f))),
      std::nullopt,
  });

  return CandidateStream([state]() -> std::optional<Formula> {
    State& s = *state;
    while (true) {
      if (s.joined) {
        while (auto candidate = s.joined->next()) {
          if (consistent(s.kind, *candidate) &&
              proves(s.kind, Formula::implication(*candidate, s.target)))
            return candidate;
        }
        s.joined.reset();
      }
      auto chosen = s.choices.next();
      if (!chosen) return std::nullopt;
      std::vector<Formula> parts;
      parts.reserve(chosen->size());
      for (const auto& lit : *chosen) parts.push_back(lit.to_formula());
      s.joined.emplace(join_with(s.aggregator, std::move(parts)));
    }
  });
}

bool weaker(ProverKind kind, const Formula& p, const Formula& q) {
  return !proves(kind, Formula::implication(p, q)) &&
         proves(kind, Formula::implication(q, p));
}

std::vector<Formula> weakest_among(ProverKind kind, std::vector<Formula> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (std::find(candidates.begin(), candidates.end(), Formula::top()) != candidates.end())
    return {Formula::top()};
  std::vector<Formula> out;
  for (const auto& g : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](const Formula& c) {
      return !(c == g) && weaker(kind, c, g);
    });
    if (minimal) out.push_back(g);
  }
  return out;
}

std::vector<Formula> weakest_protasis(const SynthConfig& config, const Formula& f) {
  return weakest_among(config.prover, any_protasis(config, f).drain());
}

CandidateStream explain(ProverKind kind, const std::optional<AtomSet>& abducibles,
                        const Formula& prog, const Formula& ic, const Formula& goal) {
  SynthConfig config{kind, Aggregator::And, true, abducibles};
  struct State {
    ProverKind kind;
    Formula prog, ic, goal;
    CandidateStream inner;
  };
  auto state = std::make_shared<State>(State{
      kind, prog, ic, goal,
      any_protasis(config, Formula::implication(prog, goal)),
  });

  return CandidateStream([state]() -> std::optional<Formula> {
    State& s = *state;
    while (auto e = s.inner.next()) {
      Formula joint = Formula::conjunction(*e, s.prog);
      if (proves(s.kind, Formula::implication(joint, s.goal)) &&
          proves(s.kind, Formula::implication(joint, s.ic)) &&
          consistent(s.kind, joint))
        return e;
    }
    return std::nullopt;
  });
}

}  // namespace iplogic
