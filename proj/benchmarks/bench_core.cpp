#include <benchmark/benchmark.h>

#include "specgraph/certificates.hpp"
#include "specgraph/connectivity.hpp"
#include "specgraph/constructions.hpp"
#include "specgraph/ktree.hpp"
#include "specgraph/spectrum.hpp"
#include "specgraph/toughness.hpp"

namespace {

using namespace specgraph;

void BM_spectrum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_regular(n, 4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(adjacency_spectrum(g));
}
BENCHMARK(BM_spectrum)->Arg(16)->Arg(32)->Arg(64);

void BM_edge_connectivity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_regular(n, 4, 11);
    for (auto _ : state) benchmark::DoNotOptimize(edge_connectivity(g));
}
BENCHMARK(BM_edge_connectivity)->Arg(16)->Arg(32)->Arg(64);

void BM_vertex_connectivity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_regular(n, 4, 13);
    for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_vertex_connectivity)->Arg(16)->Arg(32);

void BM_toughness_exact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_regular(n, 3, 17);
    for (auto _ : state) benchmark::DoNotOptimize(toughness_exact(g));
}
BENCHMARK(BM_toughness_exact)->Arg(10)->Arg(12)->Arg(14);

void BM_ktree_search(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_regular(n, 3, 19);
    for (auto _ : state) benchmark::DoNotOptimize(has_spanning_k_tree(g, 3));
}
BENCHMARK(BM_ktree_search)->Arg(12)->Arg(16)->Arg(20);

void BM_certify_all(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_regular(n, 4, 23);
    for (auto _ : state) {
        CertificationInputs in = CertificationInputs::compute(g);
        benchmark::DoNotOptimize(certify_toughness_one(in));
        benchmark::DoNotOptimize(certify_l_connectivity(in, 2, 3));
        benchmark::DoNotOptimize(certify_spanning_k_tree(in, 3));
    }
}
BENCHMARK(BM_certify_all)->Arg(16)->Arg(32)->Arg(64);

void BM_enumerate_cubic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_connected_regular(n, 3));
}
BENCHMARK(BM_enumerate_cubic)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
