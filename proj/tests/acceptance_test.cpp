// Acceptance gate for the workbench: seven checks, one verdict line each.
// Each criterion prints [PASS] or [FAIL]; failure details follow the verdict
// line indented.  The process exits nonzero if any criterion fails.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "iplogic/enumerate.hpp"
#include "iplogic/formula.hpp"
#include "iplogic/mints.hpp"
#include "iplogic/parser.hpp"
#include "iplogic/prover.hpp"
#include "iplogic/synth.hpp"
#include "iplogic/truth_table.hpp"
#include "test_util.hpp"

using namespace iplogic;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Checker {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool condition, const std::string& note) {
    if (!condition) {
      ok = false;
      notes.push_back(note);
    }
  }
};

bool report(int index, const std::string& title, const Checker& c) {
  std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << title << "\n";
  for (const auto& note : c.notes) std::cout << "        " << note << "\n";
  std::cout.flush();
  return c.ok;
}

std::string render(const std::vector<Formula>& fs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? ", " : "") << fs[i];
  os << "}";
  return os.str();
}

std::vector<Formula> parsed(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse(t));
  return out;
}

SynthConfig config(ProverKind kind, Aggregator agg, bool with_neg,
                   std::optional<AtomSet> abducibles = std::nullopt) {
  SynthConfig cfg;
  cfg.prover = kind;
  cfg.aggregator = agg;
  cfg.with_neg = with_neg;
  cfg.abducibles = std::move(abducibles);
  return cfg;
}

// Shared accounting for criteria 1-4: criterion 4 asserts that nothing in the
// first three ran out of its search budget and that direct proofs stayed far
// below the step ceiling.
struct Budget {
  bool limit_error = false;
  std::uint64_t max_steps = 0;

  void absorb(const Prover& p) { max_steps = std::max(max_steps, p.steps()); }
};

struct CorpusStats {
  std::uint64_t n = 0, mismatches = 0, unsound = 0;
  double ms = 0;
  std::string first_mismatch, first_unsound;
};

// Classical prover vs. truth table, plus the intuitionistic-implies-classical
// inclusion, over one formula; records into stats and budget.
void check_formula(const Formula& f, CorpusStats& stats, Budget& budget) {
  Prover classical_prover, intuitionistic_prover;
  bool cls = false, intu = false;
  try {
    cls = classical_prover.prove_theorem(ProverKind::Classical, f);
    intu = intuitionistic_prover.prove_theorem(ProverKind::Intuitionistic, f);
  } catch (const SearchLimitError&) {
    budget.limit_error = true;
    return;
  }
  budget.absorb(classical_prover);
  budget.absorb(intuitionistic_prover);
  if (cls != is_classical_tautology(f)) {
    if (stats.mismatches == 0) stats.first_mismatch = to_string(f);
    ++stats.mismatches;
  }
  if (intu && !cls) {
    if (stats.unsound == 0) stats.first_unsound = to_string(f);
    ++stats.unsound;
  }
  ++stats.n;
}

// The randomized synthesis case distribution shared by criteria 5 and 6:
// formulas over one to three atoms with nesting depth at most two, all five
// aggregators, both provers, negations and explicit abducible sets coin-
// flipped.  Equivalence-aggregated cases are capped at two atoms (chains of
// four literal equivalences stay cheap; see the step data in test_util.hpp),
// and targets keep at most one equivalence node for the same reason.
struct SynthCase {
  SynthConfig cfg;
  Formula f;
};

SynthCase random_synth_case(std::mt19937& rng) {
  static const AtomSet pool{"p", "q", "r"};
  std::uniform_int_distribution<std::size_t> npick(1, 3);
  AtomSet atoms(pool.begin(), pool.begin() + npick(rng));
  SynthConfig cfg;
  cfg.prover = (rng() & 1) ? ProverKind::Intuitionistic : ProverKind::Classical;
  std::uniform_int_distribution<int> agg(0, 4);
  cfg.aggregator = static_cast<Aggregator>(agg(rng));
  cfg.with_neg = (rng() & 1) != 0;
  if (cfg.aggregator == Aggregator::Iff && atoms.size() > 2) atoms.resize(2);
  if (rng() & 1) cfg.abducibles = atoms;
  Formula f = testutil::random_formula(rng, atoms, 2);
  while (testutil::count_iff(f) > 1) f = testutil::random_formula(rng, atoms, 2);
  return {std::move(cfg), std::move(f)};
}

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  Budget budget;
  bool all_ok = true;

  // ------------------------------------------------------------------ 1
  {
    Checker c;
    auto timed = [&](const char* label, auto&& body) {
      const auto t0 = Clock::now();
      try {
        body();
      } catch (const SearchLimitError&) {
        budget.limit_error = true;
        c.expect(false, std::string(label) + ": ran out of search budget");
      }
      const double ms = ms_since(t0);
      c.expect(ms < 1000.0, std::string(label) + ": took " + std::to_string(ms) + " ms");
    };

    timed("excluded middle", [&] {
      Prover pi, pc, qi, qc;
      c.expect(!pi.prove_theorem(ProverKind::Intuitionistic, parse("p v ~p")),
               "p v ~p must not be an intuitionistic theorem");
      c.expect(pc.prove_theorem(ProverKind::Classical, parse("p v ~p")),
               "p v ~p must be a classical theorem");
      c.expect(!qi.prove_theorem(ProverKind::Intuitionistic, parse("p & ~p")),
               "p & ~p must not be an intuitionistic theorem");
      c.expect(!qc.prove_theorem(ProverKind::Classical, parse("p & ~p")),
               "p & ~p must not be a classical theorem");
      for (const Prover* p : {&pi, &pc, &qi, &qc}) budget.absorb(*p);
    });

    timed("equivalence tautology", [&] {
      Prover p;
      c.expect(p.prove_theorem(ProverKind::Intuitionistic,
                               parse("(p & q) <-> (((p v q)<->q)<->p)")),
               "the conjunction/equivalence tautology must be intuitionistic");
      budget.absorb(p);
    });

    timed("weakest assumption for the non-theorem", [&] {
      const Formula peirce = parse("((p->q)->p)->p");
      const auto intu = weakest_protasis(
          config(ProverKind::Intuitionistic, Aggregator::Or, true, AtomSet{"p"}), peirce);
      c.expect(intu == parsed({"p v ~p"}),
               "weakest disjunctive assumption (intuitionistic) was " + render(intu));
      const auto cls = weakest_protasis(
          config(ProverKind::Classical, Aggregator::Or, true, AtomSet{"p"}), peirce);
      c.expect(cls == parsed({"true"}),
               "weakest disjunctive assumption (classical) was " + render(cls));
    });

    timed("weakest implicational assumption", [&] {
      const auto got = weakest_protasis(
          config(ProverKind::Intuitionistic, Aggregator::Imp, true, AtomSet{"c", "d"}),
          parse("a<-((a<-(b<-d))&(b<-c))"));
      c.expect(got == parsed({"d->c"}), "weakest implicational assumption was " + render(got));
    });

    timed("no assumption rescues a contradiction", [&] {
      for (auto kind : {ProverKind::Intuitionistic, ProverKind::Classical}) {
        auto stream = any_protasis(config(kind, Aggregator::And, true), parse("p & ~p"));
        c.expect(!stream.next().has_value(),
                 "the contradiction accepted a candidate assumption");
      }
    });

    timed("axiom separating the intermediate logic", [&] {
      const Formula f = parse("f v (f->g) v ~g");
      const auto intu =
          weakest_protasis(config(ProverKind::Intuitionistic, Aggregator::Or, true), f);
      c.expect(intu == parsed({"f v ~f v g v ~g"}),
               "intuitionistic disjunctive synthesis was " + render(intu));
      const auto cls =
          weakest_protasis(config(ProverKind::Classical, Aggregator::Or, true), f);
      c.expect(cls == parsed({"true"}), "classical disjunctive synthesis was " + render(cls));
    });

    timed("abduction with an integrity constraint", [&] {
      auto stream = explain(ProverKind::Intuitionistic, AtomSet{"sprinkler", "rained"},
                            parse("sunny & (rained v sprinkler -> wet)"),
                            parse("~(rained & sunny)"), parse("wet"));
      const auto drained = stream.drain();
      bool found = false;
      for (const auto& e : drained)
        if (e == parse("sprinkler & ~rained")) found = true;
      c.expect(found, "explanations " + render(drained) + " lack sprinkler & ~rained");
    });

    timed("canonical-form premises", [&] {
      const Formula f = parse("f v (f->g) v ~g");
      const auto cls = weakest_mints_premise(ProverKind::Classical, std::nullopt, f);
      c.expect(cls == parsed({"true"}), "classical canonical premises were " + render(cls));
      const auto intu = weakest_mints_premise(ProverKind::Intuitionistic, std::nullopt, f);
      c.expect(intu == parsed({"f", "~g", "f->g", "g->~g"}),
               "intuitionistic canonical premises were " + render(intu));
      Prover p;
      c.expect(p.prove_theorem(ProverKind::Intuitionistic, parse("(g -> ~g) <-> ~g")),
               "(g -> ~g) <-> ~g must be an intuitionistic theorem");
      budget.absorb(p);
    });

    timed("slot labelings", [&] {
      const std::vector<SlotAssignment> expected = {
          {"a", "b", "a", "a"}, {"a", "a", "b", "a"}, {"a", "b", "b", "a"},
          {"a", "a", "a", "b"}, {"a", "b", "a", "b"}, {"a", "a", "b", "b"},
          {"a", "b", "b", "b"}};
      const auto got = surjective_labelings(4, {"a", "b"}).drain();
      c.expect(got == expected, "length-4 two-class labelings were not the pinned seven");
    });

    all_ok &= report(1, "pinned example suite", c);
  }

  // ---------------------------------------------------------------- 2+3
  CorpusStats exhaustive, randomized;
  {
    const auto t0 = Clock::now();
    auto stream = enumerate_formulas({"p", "q"}, 2);
    while (auto f = stream.next()) check_formula(*f, exhaustive, budget);
    exhaustive.ms = ms_since(t0);

    const auto t1 = Clock::now();
    std::mt19937 rng(20260825);
    const AtomSet atoms{"p", "q", "r"};
    for (int i = 0; i < 10000; ++i) {
      Formula f = testutil::random_formula(rng, atoms, 4);
      while (testutil::count_iff(f) > 1) f = testutil::random_formula(rng, atoms, 4);
      check_formula(f, randomized, budget);
    }
    randomized.ms = ms_since(t1);
  }

  {
    Checker c;
    c.expect(exhaustive.n == 38812,
             "exhaustive corpus held " + std::to_string(exhaustive.n) + " formulas, not 38812");
    c.expect(exhaustive.mismatches == 0,
             "exhaustive: " + std::to_string(exhaustive.mismatches) +
                 " prover/table mismatches, first on " + exhaustive.first_mismatch);
    c.expect(exhaustive.ms < 60000.0,
             "exhaustive corpus took " + std::to_string(exhaustive.ms) + " ms");
    c.expect(randomized.n == 10000, "random corpus was cut short");
    c.expect(randomized.mismatches == 0,
             "randomized: " + std::to_string(randomized.mismatches) +
                 " prover/table mismatches, first on " + randomized.first_mismatch);
    all_ok &= report(2, "classical prover equals the truth-table oracle "
                        "(exhaustive two-atom corpus + 10,000 random formulas)", c);
  }

  {
    Checker c;
    c.expect(exhaustive.unsound == 0,
             "exhaustive: " + std::to_string(exhaustive.unsound) +
                 " intuitionistic theorems rejected classically, first on " +
                 exhaustive.first_unsound);
    c.expect(randomized.unsound == 0,
             "randomized: " + std::to_string(randomized.unsound) +
                 " intuitionistic theorems rejected classically, first on " +
                 randomized.first_unsound);
    all_ok &= report(3, "intuitionistic provability implies classical provability", c);
  }

  // ------------------------------------------------------------------ 4
  {
    Checker c;
    c.expect(!budget.limit_error, "a proof search ran out of its step budget");
    c.expect(budget.max_steps <= kDefaultStepLimit,
             "a proof took " + std::to_string(budget.max_steps) + " steps");
    const double elapsed = ms_since(suite_start);
    c.expect(elapsed < 300000.0,
             "criteria 1-3 took " + std::to_string(elapsed) + " ms");
    all_ok &= report(4, "every search terminated within budget (worst: " +
                            std::to_string(budget.max_steps) + " steps)", c);
  }

  // ------------------------------------------------------------------ 5
  {
    Checker c;
    std::mt19937 rng(20260830);
    std::uint64_t nonempty = 0;
    try {
      for (int i = 0; i < 1000; ++i) {
        const SynthCase sc = random_synth_case(rng);
        const auto collected = any_protasis(sc.cfg, sc.f).drain();
        const auto weakest = weakest_protasis(sc.cfg, sc.f);
        if (!weakest.empty()) ++nonempty;
        for (const auto& w : weakest) {
          bool member = false;
          for (const auto& cand : collected) {
            if (cand == w) member = true;
            if (weaker(sc.cfg.prover, cand, w)) {
              c.expect(false, "candidate " + to_string(cand) + " is weaker than selected " +
                                  to_string(w) + " for " + to_string(sc.f));
            }
          }
          c.expect(member, "selected " + to_string(w) + " was never emitted for " +
                               to_string(sc.f));
        }
      }
    } catch (const SearchLimitError&) {
      c.expect(false, "a synthesis search ran out of budget");
    }
    c.expect(nonempty >= 500, "only " + std::to_string(nonempty) +
                                  " of 1000 cases synthesized anything");
    all_ok &= report(5, "selected assumptions are minimal among all candidates "
                        "(1,000 randomized cases)", c);
  }

  // ------------------------------------------------------------------ 6
  {
    Checker c;
    std::mt19937 rng(20260831);
    std::uint64_t verified = 0;
    try {
      for (int i = 0; i < 300; ++i) {
        const SynthCase sc = random_synth_case(rng);
        for (const auto& p : any_protasis(sc.cfg, sc.f).take(40)) {
          Prover implies_goal, consistent;
          c.expect(implies_goal.prove_theorem(sc.cfg.prover, Formula::implication(p, sc.f)),
                   "emitted " + to_string(p) + " does not prove " + to_string(sc.f));
          c.expect(!consistent.prove_theorem(sc.cfg.prover,
                                             Formula::implication(p, Formula::bottom())),
                   "emitted " + to_string(p) + " is inconsistent");
          ++verified;
        }
      }
      for (int i = 0; i < 100; ++i) {
        const SynthCase sc = random_synth_case(rng);
        auto premises =
            any_mints_premise(sc.cfg.prover, sc.cfg.abducibles, sc.f).take(40);
        for (const auto& p : premises) {
          Prover implies_goal, consistent;
          c.expect(implies_goal.prove_theorem(sc.cfg.prover, Formula::implication(p, sc.f)),
                   "emitted premise " + to_string(p) + " does not prove " + to_string(sc.f));
          c.expect(!consistent.prove_theorem(sc.cfg.prover,
                                             Formula::implication(p, Formula::bottom())),
                   "emitted premise " + to_string(p) + " is inconsistent");
          ++verified;
        }
      }
    } catch (const SearchLimitError&) {
      c.expect(false, "an emission re-check ran out of budget");
    }
    c.expect(verified >= 500,
             "only " + std::to_string(verified) + " emissions were re-checked");
    all_ok &= report(6, "every emission re-proves its goal and stays consistent "
                        "(randomized, " + std::to_string(verified) + " emissions)", c);
  }

  // ------------------------------------------------------------------ 7
  {
    Checker c;
    std::mt19937 rng(20260832);
    const AtomSet atoms{"p", "q", "r"};
    for (int i = 0; i < 10000; ++i) {
      const Formula f = testutil::random_formula(rng, atoms, 4);
      const std::string printed = to_string(f);
      try {
        if (!(parse(printed) == f)) c.expect(false, "round-trip changed " + printed);
      } catch (const ParseError& e) {
        c.expect(false, "printed form failed to parse: " + printed + " (" + e.what() + ")");
      }
    }
    const std::vector<std::pair<const char*, const char*>> pinned = {
        {"p v ~p", "p v ~p"},
        {"true", "true"},
        {"d->c", "d->c"},
        {"f v ~f v g v ~g", "f v ~f v g v ~g"},
        {"sprinkler & ~rained", "sprinkler & ~rained"},
        {"p & ~p", "p & ~p"},
        {"f v (f->g) v ~g", "f v (f->g) v ~g"},
        {"g->~g", "g->~g"},
        {"a<-((a<-(b<-d))&(b<-c))", "a<-(a<-(b<-d)) & (b<-c)"},
        {"(p & q) <-> (((p v q)<->q)<->p)", "p & q <-> ((p v q <-> q) <-> p)"},
    };
    for (const auto& [source, expected_print] : pinned) {
      const Formula f = parse(source);
      c.expect(to_string(f) == expected_print,
               std::string("pinned print of ") + source + " was " + to_string(f));
      c.expect(parse(to_string(f)) == f, std::string("pinned reprint of ") + source +
                                             " did not round-trip");
    }
    all_ok &= report(7, "printed formulas re-parse to the same tree "
                        "(10,000 randomized + pinned)", c);
  }

  std::cout << (all_ok ? "acceptance: all 7 criteria passed\n"
                       : "acceptance: FAILURES above\n");
  return all_ok ? 0 : 1;
}
