#include <benchmark/benchmark.h>

#include <string>

#include "iplogic/formula.hpp"
#include "iplogic/mints.hpp"
#include "iplogic/parser.hpp"
#include "iplogic/prover.hpp"
#include "iplogic/synth.hpp"
#include "iplogic/truth_table.hpp"

namespace {

using namespace iplogic;

void BM_ProveClassicalPeirce(benchmark::State& state) {
  const Formula f = parse("((p->q)->p)->p");
  for (auto _ : state) {
    Prover p;
    benchmark::DoNotOptimize(p.prove_theorem(ProverKind::Classical, f));
  }
}
BENCHMARK(BM_ProveClassicalPeirce);

void BM_ProveEquivalenceTautology(benchmark::State& state) {
  const Formula f = parse("(p & q) <-> (((p v q)<->q)<->p)");
  for (auto _ : state) {
    Prover p;
    benchmark::DoNotOptimize(p.prove_theorem(ProverKind::Intuitionistic, f));
  }
}
BENCHMARK(BM_ProveEquivalenceTautology);

void BM_ProveDeepImplicationChain(benchmark::State& state) {
  // a1 -> a2 -> ... -> a64 -> a1, unprovable; exercises the left-rule scan.
  Formula f = parse("a1");
  for (int i = 64; i >= 1; --i)
    f = Formula::implication(Formula::atom("a" + std::to_string(i)), f);
  for (auto _ : state) {
    Prover p;
    benchmark::DoNotOptimize(p.prove_theorem(ProverKind::Intuitionistic, f));
  }
}
BENCHMARK(BM_ProveDeepImplicationChain);

void BM_WeakestDisjunctiveAssumption(benchmark::State& state) {
  const Formula f = parse("f v (f->g) v ~g");
  SynthConfig cfg;
  cfg.prover = ProverKind::Intuitionistic;
  cfg.aggregator = Aggregator::Or;
  for (auto _ : state) benchmark::DoNotOptimize(weakest_protasis(cfg, f));
}
BENCHMARK(BM_WeakestDisjunctiveAssumption);

void BM_WeakestCanonicalPremise(benchmark::State& state) {
  const Formula f = parse("f v (f->g) v ~g");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        weakest_mints_premise(ProverKind::Intuitionistic, std::nullopt, f));
}
BENCHMARK(BM_WeakestCanonicalPremise);

void BM_TruthTable16Atoms(benchmark::State& state) {
  Formula f = Formula::top();
  for (int i = 1; i <= 16; ++i) {
    const Formula a = Formula::atom("a" + std::to_string(i));
    f = Formula::conjunction(Formula::disjunction(a, Formula::negation(a)), f);
  }
  for (auto _ : state) benchmark::DoNotOptimize(is_classical_tautology(f));
}
BENCHMARK(BM_TruthTable16Atoms);

void BM_ParsePrintRoundTrip(benchmark::State& state) {
  const std::string text = "a<-(a<-(b<-d)) & (b<-c) v ~(p <-> q & r) -> s v ~~t";
  for (auto _ : state) benchmark::DoNotOptimize(to_string(parse(text)));
}
BENCHMARK(BM_ParsePrintRoundTrip);

}  // namespace

BENCHMARK_MAIN();
