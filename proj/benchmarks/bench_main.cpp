#include <benchmark/benchmark.h>

#include "depthlab/census.hpp"
#include "depthlab/elimination.hpp"
#include "depthlab/exact.hpp"
#include "depthlab/graph.hpp"
#include "depthlab/random.hpp"
#include "depthlab/separators.hpp"

using namespace depthlab;

namespace {

void BM_TreedepthExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = sample_gnp(n, 0.5, RandomSeed{17, static_cast<std::uint64_t>(n)});
    for (auto _ : state) {
        auto result = treedepth_exact(g, n);
        benchmark::DoNotOptimize(result.value);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_TreedepthExact)->DenseRange(10, 20, 2)->Unit(benchmark::kMillisecond);

void BM_TreewidthExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = sample_gnp(n, 0.5, RandomSeed{18, static_cast<std::uint64_t>(n)});
    for (auto _ : state) {
        auto result = treewidth_exact(g, n);
        benchmark::DoNotOptimize(result.value);
    }
}
BENCHMARK(BM_TreewidthExact)->DenseRange(10, 18, 2)->Unit(benchmark::kMillisecond);

void BM_SampleGnpSparse(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t trial = 0;
    for (auto _ : state) {
        Graph g = sample_gnp(n, 1.0 / n, RandomSeed{19, trial++});
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(BM_SampleGnpSparse)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ComponentCensus(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = sample_gnp(n, 1.0 / n, RandomSeed{20, 0});
    for (auto _ : state) {
        auto census = classify(g);
        benchmark::DoNotOptimize(census.largest_order);
    }
}
BENCHMARK(BM_ComponentCensus)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_CheegerExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = sample_regular(n, 3, RandomSeed{21, 1});
    for (auto _ : state) {
        auto phi = cheeger_exact(g, n);
        benchmark::DoNotOptimize(phi.num);
    }
}
BENCHMARK(BM_CheegerExact)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CentroidBuild(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    Graph tree = sample_labeled_tree(k, RandomSeed{22, 0});
    for (auto _ : state) {
        auto forest = build_tree_centroid(tree);
        benchmark::DoNotOptimize(forest.parent.data());
    }
}
BENCHMARK(BM_CentroidBuild)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_GreedyHeuristic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = sample_gnp(n, 1.0 / n, RandomSeed{23, 0});
    for (auto _ : state) {
        auto forest = greedy_heuristic(g);
        benchmark::DoNotOptimize(forest.parent.data());
    }
}
BENCHMARK(BM_GreedyHeuristic)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
