#include "iplogic/mints.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <set>
#include <stdexcept>
#include <utility>

namespace iplogic {

Formula instantiate(MintsShape shape, std::span<const std::string> slots) {
  if (slots.size() != arity(shape))
    throw std::invalid_argument("shape expects " + std::to_string(arity(shape)) +
                                " slots, got " + std::to_string(slots.size()));
  auto at = [&](std::size_t i) { return Formula::atom(slots[i]); };
  switch (shape) {
    case MintsShape::Var:
      return at(0);
    case MintsShape::NegVar:
      return Formula::negation(at(0));
    case MintsShape::Imp:
      return Formula::implication(at(0), at(1));
    case MintsShape::ImpImp:
      return Formula::implication(Formula::implication(at(0), at(1)), at(2));
    case MintsShape::ImpChain:
      return Formula::implication(at(0), Formula::implication(at(1), at(2)));
    case MintsShape::ImpOr:
      return Formula::implication(at(0), Formula::disjunction(at(1), at(2)));
    case MintsShape::ImpNeg:
      return Formula::implication(at(0), Formula::negation(at(1)));
    case MintsShape::NegImp:
      return Formula::implication(Formula::negation(at(0)), at(1));
  }
  throw std::invalid_argument("unknown shape");
}

namespace {

// Labels `length` slots with classes[from..], first slot pinned to
// classes[from].  For each pattern over the remaining slots (bit i set =
// slot i+1 deferred to later classes; patterns counted with slot 1 as the
// least significant bit), the deferred slots are labeled recursively and all
// resulting assignments are emitted before the next pattern.
void labelings_into(std::size_t length, const AtomSet& classes, std::size_t from,
                    std::vector<SlotAssignment>& out) {
  if (from == classes.size()) {
    if (length == 0) out.push_back({});
    return;
  }
  if (length == 0) return;
  const std::size_t rest = length - 1;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << rest); ++pattern) {
    const std::size_t deferred =
        static_cast<std::size_t>(std::popcount(pattern));
    std::vector<SlotAssignment> tails;
    labelings_into(deferred, classes, from + 1, tails);
    for (const auto& tail : tails) {
      SlotAssignment slots;
      slots.reserve(length);
      slots.push_back(classes[from]);
      std::size_t next_tail = 0;
      for (std::size_t i = 0; i < rest; ++i)
        slots.push_back(((pattern >> i) & 1) ? tail[next_tail++] : classes[from]);
      out.push_back(std::move(slots));
    }
  }
}

}  // namespace

Stream<SlotAssignment> surjective_labelings(std::size_t length, AtomSet classes) {
  if (length >= 64) throw std::invalid_argument("slot length too large");
  std::vector<SlotAssignment> all;
  labelings_into(length, classes, 0, all);
  return Stream<SlotAssignment>::of(std::move(all));
}

Stream<std::vector<Formula>> mints_conjuncts(SlotAssignment slots) {
  // Depth-first segmentation: frames record the shape chosen at each
  // position; backtracking advances the deepest frame to the next shape.
  struct Frame {
    std::size_t pos;
    std::size_t shape;  // index into kMintsShapes
  };
  struct State {
    SlotAssignment slots;
    std::vector<Frame> path;
    bool exhausted = false, started = false;
  };
  auto state = std::make_shared<State>();
  state->slots = std::move(slots);

  return Stream<std::vector<Formula>>([state]() -> std::optional<std::vector<Formula>> {
    State& s = *state;
    if (s.exhausted) return std::nullopt;
    const std::size_t total = s.slots.size();

    // Position after the current path, and a fresh shape index to try there.
    std::size_t pos = 0, shape = 0;
    if (!s.started) {
      s.started = true;
    } else {
      // Backtrack: advance the deepest frame.
      while (true) {
        if (s.path.empty()) {
          s.exhausted = true;
          return std::nullopt;
        }
        Frame frame = s.path.back();
        s.path.pop_back();
        pos = frame.pos;
        shape = frame.shape + 1;
        if (shape < kMintsShapes.size()) break;
      }
    }

    // Descend, trying shapes in declared order, until all slots are used.
    while (pos < total) {
      while (shape < kMintsShapes.size() && pos + arity(kMintsShapes[shape]) > total) ++shape;
      if (shape == kMintsShapes.size()) {
        // Dead end: backtrack within the loop.
        while (true) {
          if (s.path.empty()) {
            s.exhausted = true;
            return std::nullopt;
          }
          Frame frame = s.path.back();
          s.path.pop_back();
          pos = frame.pos;
          shape = frame.shape + 1;
          if (shape < kMintsShapes.size()) break;
        }
        continue;
      }
      s.path.push_back({pos, shape});
      pos += arity(kMintsShapes[shape]);
      shape = 0;
    }

    std::vector<Formula> conjuncts;
    conjuncts.reserve(s.path.size());
    for (const Frame& frame : s.path) {
      const MintsShape sh = kMintsShapes[frame.shape];
      conjuncts.push_back(instantiate(
          sh, std::span<const std::string>(s.slots).subspan(frame.pos, arity(sh))));
    }
    std::sort(conjuncts.begin(), conjuncts.end());
    conjuncts.erase(std::unique(conjuncts.begin(), conjuncts.end()), conjuncts.end());
    return conjuncts;
  });
}

CandidateStream any_mints_premise(ProverKind kind, std::optional<AtomSet> abducibles,
                                  const Formula& f, std::optional<std::size_t> budget) {
  struct State {
    ProverKind kind;
    Formula target;
    std::size_t budget;
    Stream<std::vector<std::string>> chosen_stream;
    // Innermost-first: conjunct stream, then labelings, then lengths.
    std::optional<AtomSet> chosen;
    std::size_t length = 0;
    std::optional<Stream<SlotAssignment>> labelings;
    std::optional<Stream<std::vector<Formula>>> conjuncts;
    std::set<Formula> emitted;
  };
  AtomSet all = abducibles ? *abducibles : atoms_of(f);
  const std::size_t effective_budget = budget.value_or(all.size());
  auto state = std::make_shared<State>(State{
      kind, f, effective_budget, subsets(std::move(all)),
      std::nullopt, 0, std::nullopt, std::nullopt, {},
  });

  return CandidateStream([state]() -> std::optional<Formula> {
    State& s = *state;
    while (true) {
      if (s.conjuncts) {
        while (auto seq = s.conjuncts->next()) {
          Formula premise = join_chain(Aggregator::And, *seq);
          if (s.emitted.count(premise)) continue;
          s.emitted.insert(premise);
          if (!proves(s.kind, Formula::implication(premise, Formula::bottom())) &&
              proves(s.kind, Formula::implication(premise, s.target)))
            return premise;
        }
        s.conjuncts.reset();
      }
      if (s.labelings) {
        if (auto slots = s.labelings->next()) {
          s.conjuncts.emplace(mints_conjuncts(std::move(*slots)));
          continue;
        }
        s.labelings.reset();
      }
      if (s.chosen && s.length <= s.budget) {
        s.labelings.emplace(surjective_labelings(s.length, *s.chosen));
        ++s.length;
        continue;
      }
      auto chosen = s.chosen_stream.next();
      if (!chosen) return std::nullopt;
      s.chosen = std::move(*chosen);
      s.length = 0;
    }
  });
}

std::vector<Formula> weakest_mints_premise(ProverKind kind, std::optional<AtomSet> abducibles,
                                           const Formula& f, std::optional<std::size_t> budget) {
  return weakest_among(kind, any_mints_premise(kind, std::move(abducibles), f, budget).drain());
}

}  // namespace iplogic
