#include <benchmark/benchmark.h>

#include "parthom/composition.hpp"
#include "parthom/frobenius.hpp"
#include "parthom/homology.hpp"
#include "parthom/partitions.hpp"
#include "parthom/synthesis.hpp"

using namespace parthom;

static void BM_BetaStarAll(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Integer total = 0;
        for (const auto& c : all_compositions(n)) total += beta_star(c);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_BetaStarAll)->Arg(8)->Arg(10)->Arg(12);

static void BM_QStarBetti(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CompositionComplex delta = full_complex(n);
    for (auto _ : state) {
        BettiVector betti = reduced_betti(q_star_chain_complex(delta));
        benchmark::DoNotOptimize(betti);
    }
}
BENCHMARK(BM_QStarBetti)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_OracleBoundarySimplex(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CompositionComplex delta = boundary_of_simplex(Composition(std::vector<int>(n, 1)));
    for (auto _ : state) {
        BettiVector betti = oracle_betti(delta, kHardOracleBound);
        benchmark::DoNotOptimize(betti);
    }
}
BENCHMARK(BM_OracleBoundarySimplex)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_MainBettiFrobenius(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ApSpec spec(3, 2);
    CompositionComplex delta = frobenius_filter(spec.semigroup(n), n);
    for (auto _ : state) {
        BettiVector betti = main_betti(delta);
        benchmark::DoNotOptimize(betti);
    }
}
BENCHMARK(BM_MainBettiFrobenius)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_LefschetzAllTypes(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CompositionComplex delta = frobenius_filter(Semigroup({2, 3}, n), n);
    for (auto _ : state) {
        auto pairs = lefschetz_check_all(delta);
        benchmark::DoNotOptimize(pairs);
    }
}
BENCHMARK(BM_LefschetzAllTypes)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
