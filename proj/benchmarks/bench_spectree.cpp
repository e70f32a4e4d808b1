#include <benchmark/benchmark.h>

#include <vector>

#include "spectree/degree_sequence.hpp"
#include "spectree/enumeration.hpp"
#include "spectree/greedy.hpp"
#include "spectree/random.hpp"
#include "spectree/spectral.hpp"
#include "spectree/tree.hpp"

using namespace spectree;

namespace {

LabeledTree sample_tree(int n) {
    Rng rng(static_cast<std::uint64_t>(n) * 7919);
    return random_tree(n, rng);
}

void BM_BuildGreedy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DegreeSequence pi = degree_sequence_of(sample_tree(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_greedy_tree(pi));
    }
}
BENCHMARK(BM_BuildGreedy)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Moments(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LabeledTree tree = sample_tree(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral_moments(tree));
    }
}
BENCHMARK(BM_Moments)->Arg(16)->Arg(64)->Arg(128);

void BM_MomentsFixedK(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LabeledTree tree = sample_tree(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_walk_moments(tree, 8));
    }
}
BENCHMARK(BM_MomentsFixedK)->Arg(100)->Arg(1000)->Arg(3000);

void BM_CanonicalForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LabeledTree tree = sample_tree(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(tree));
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(100)->Arg(1000)->Arg(10000);

void BM_SOrderCompare(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LabeledTree a = sample_tree(n);
    Rng rng(1234);
    const LabeledTree b = random_tree_with_degrees(degree_sequence_of(a), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(s_order_compare(a, b));
    }
}
BENCHMARK(BM_SOrderCompare)->Arg(16)->Arg(32)->Arg(64);

void BM_EnumerateClasses(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    // The balanced spider sequence keeps the permutation count moderate.
    const DegreeSequence pi = degree_sequence_of(
        build_greedy_tree(degree_sequence_of(sample_tree(n))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_trees_with_degrees(pi));
    }
}
BENCHMARK(BM_EnumerateClasses)->Arg(7)->Arg(8)->Arg(9);

void BM_SubgraphCounts(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const LabeledTree tree = sample_tree(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(subgraph_counts_formula(tree));
    }
}
BENCHMARK(BM_SubgraphCounts)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
