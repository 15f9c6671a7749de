#include <benchmark/benchmark.h>

#include "golod/corpus.hpp"
#include "golod/ideal_calculus.hpp"
#include "golod/koszul.hpp"
#include "golod/monomial_ideal.hpp"
#include "golod/poincare.hpp"
#include "golod/resolution.hpp"

using namespace golod;

namespace {

// Each iteration rebuilds the ideal so the cached basis is not reused.
void BM_GroebnerBasis(benchmark::State& state) {
  auto e = corpus_builders(kCorpusSeed)[state.range(0)];
  for (auto _ : state) {
    Ideal I(e.ideal.ring(), e.ideal.generators());
    benchmark::DoNotOptimize(I.groebner_basis().size());
  }
  state.SetLabel(e.name);
}

void BM_GroebnerPower(benchmark::State& state) {
  auto I = corpus_entry("random-square-4").ideal;
  for (auto _ : state) benchmark::DoNotOptimize(power(I, int(state.range(0))).generators().size());
}

void BM_StronglyGolod(benchmark::State& state) {
  auto e = corpus_builders(kCorpusSeed)[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(strongly_golod(e.ideal).verdict);
  state.SetLabel(e.name);
}

void BM_StronglyGolodMonomial(benchmark::State& state) {
  auto I = vertex_cover_ideal(Graph::cycle(std::size_t(state.range(0))));
  auto P = power(I, 2);
  for (auto _ : state) benchmark::DoNotOptimize(strongly_golod_monomial(P).verdict);
}

void BM_KoszulHomology(benchmark::State& state) {
  auto e = corpus_builders(kCorpusSeed)[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(koszul_homology(e.ideal).total(1));
  state.SetLabel(e.name);
}

void BM_MinimalResolution(benchmark::State& state) {
  auto e = corpus_builders(kCorpusSeed)[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(minimal_free_resolution(e.ideal)).total(1));
  state.SetLabel(e.name);
}

void BM_GolodVerdict(benchmark::State& state) {
  auto I = Ideal::parse(corpus_ring(2), "x^2, x*y, y^2");
  for (auto _ : state) benchmark::DoNotOptimize(golod_verdict(I, {std::size_t(state.range(0)), 2 * state.range(0)}).status);
}

void corpus_args(benchmark::internal::Benchmark* b) {
  for (std::size_t i = 0; i < corpus_builders(kCorpusSeed).size(); i += 4) b->Arg(long(i));
}

}  // namespace

BENCHMARK(BM_GroebnerBasis)->Apply(corpus_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GroebnerPower)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StronglyGolod)->Apply(corpus_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StronglyGolodMonomial)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KoszulHomology)->Apply(corpus_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalResolution)->Apply(corpus_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GolodVerdict)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
