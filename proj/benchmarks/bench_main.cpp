#include <liefan/branching.hpp>

#include <benchmark/benchmark.h>

using namespace liefan;

namespace {

void BM_DenominatorExpansion(benchmark::State& state) {
    AlgebraSpec a21 = AlgebraSpec::affine(Series::A, 2, 1);
    const Rat cutoff = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a21.expand_denominator(cutoff));
    }
}
BENCHMARK(BM_DenominatorExpansion)->Arg(2)->Arg(4)->Arg(6);

void BM_SingularWeights(benchmark::State& state) {
    AlgebraSpec a21 = AlgebraSpec::affine(Series::A, 2, 1);
    Weight omega0 = a21.fundamental_weight(0);
    const Rat cutoff = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a21.singular_weights(omega0, cutoff));
    }
}
BENCHMARK(BM_SingularWeights)->Arg(10)->Arg(20);

void BM_TwistedBranching(benchmark::State& state) {
    InjectionSpec inj = InjectionSpec::preset("A2_2-in-A2_1");
    Weight omega0 = inj.ambient().fundamental_weight(0);
    const Rat cutoff = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(branch(inj, omega0, cutoff));
    }
}
BENCHMARK(BM_TwistedBranching)->Arg(5)->Arg(10)->Arg(15);

void BM_WeightDiagramG2(benchmark::State& state) {
    AlgebraSpec g2 = AlgebraSpec::finite(Series::G, 2);
    Weight mu = g2.weight_from_fw({Rat(1), Rat(1)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(weight_multiplicities(g2, mu, 0));
    }
}
BENCHMARK(BM_WeightDiagramG2);

} // namespace

BENCHMARK_MAIN();
