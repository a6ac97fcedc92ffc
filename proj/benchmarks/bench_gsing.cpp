#include <benchmark/benchmark.h>

#include <string>

#include "blocksing/generate.hpp"
#include "blocksing/oracle.hpp"
#include "blocksing/reduction.hpp"

namespace {

using namespace blocksing;

const ReductionOptions kNoTrace{std::nullopt, false};

void run_family(benchmark::State& state, const std::string& family) {
    const Graph g = generate(sized_spec(family, static_cast<std::size_t>(state.range(0))));
    std::size_t bits = 0;
    for (auto _ : state) {
        const Verdict v = is_singular(g, {}, kNoTrace);
        bits = v.max_rational_bits;
        benchmark::DoNotOptimize(v.singular);
    }
    state.SetComplexityN(state.range(0));
    state.counters["max_rational_bits"] = static_cast<double>(bits);
}

void BM_GsingPath(benchmark::State& state) { run_family(state, "path"); }
void BM_GsingStarK3(benchmark::State& state) { run_family(state, "star_k3"); }
void BM_GsingStar(benchmark::State& state) { run_family(state, "star"); }
void BM_GsingRandomBlock(benchmark::State& state) { run_family(state, "random_block"); }

void BM_BlockDecomposition(benchmark::State& state) {
    const Graph g = generate(sized_spec("random_block", static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(biconnected_components(g).blocks.size());
    }
    state.SetComplexityN(state.range(0));
}

void BM_OracleRank(benchmark::State& state) {
    const Graph g = generate(sized_spec("random_block", static_cast<std::size_t>(state.range(0))));
    const RationalMatrix m = adjacency_matrix(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_rank_nullity(m).rank);
    }
    state.SetComplexityN(state.range(0));
}

void BM_GsingSmallRandomBlock(benchmark::State& state) { run_family(state, "random_block"); }

}  // namespace

BENCHMARK(BM_GsingPath)->RangeMultiplier(2)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK(BM_GsingStarK3)->RangeMultiplier(2)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK(BM_GsingStar)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK(BM_GsingRandomBlock)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK(BM_BlockDecomposition)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK(BM_OracleRank)->DenseRange(25, 200, 25)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_GsingSmallRandomBlock)->DenseRange(25, 200, 25)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
