// Microbenchmarks for the hot paths: synthesis on dense graphs, the
// isomorphism search, the bounded equation solver and the embedding search.
#include "sunit/analyze.hpp"
#include "sunit/diophantine.hpp"
#include "sunit/graphcore.hpp"
#include "sunit/synthesis.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_represent_any_k5(benchmark::State& state) {
    sunit::Graph g = sunit::complete_graph(5);
    for (auto _ : state) {
        auto rep = sunit::represent_any(g);
        benchmark::DoNotOptimize(rep.points.size());
    }
}
BENCHMARK(BM_represent_any_k5);

void BM_represent_any_random6(benchmark::State& state) {
    sunit::Graph g = sunit::random_graph(6, 0.5, 12345);
    for (auto _ : state) {
        auto rep = sunit::represent_any(g);
        benchmark::DoNotOptimize(rep.points.size());
    }
}
BENCHMARK(BM_represent_any_random6);

void BM_is_isomorphic_petersen_like(benchmark::State& state) {
    sunit::Graph g = sunit::random_graph(9, 0.4, 7);
    sunit::Graph h = sunit::random_graph(9, 0.4, 7);
    for (auto _ : state) {
        auto iso = sunit::is_isomorphic(g, h);
        benchmark::DoNotOptimize(iso.has_value());
    }
}
BENCHMARK(BM_is_isomorphic_petersen_like);

void BM_solve_bounded_pair(benchmark::State& state) {
    sunit::UnitEquation eq;
    eq.coefficients = {sunit::BigRat(1), sunit::BigRat(1)};
    eq.s = sunit::PrimeSet{{2, 3}};
    eq.exponent_bound = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto sols = sunit::solve_bounded(eq);
        benchmark::DoNotOptimize(sols.size());
    }
}
BENCHMARK(BM_solve_bounded_pair)->Arg(6)->Arg(10);

void BM_hypercube_embed_c8(benchmark::State& state) {
    sunit::Graph g = sunit::cycle_graph(8);
    for (auto _ : state) {
        auto emb = sunit::hypercube_embed(g, 10);
        benchmark::DoNotOptimize(emb.has_value());
    }
}
BENCHMARK(BM_hypercube_embed_c8);

void BM_brute_force_c4(benchmark::State& state) {
    sunit::Graph g = sunit::cycle_graph(4);
    sunit::PrimeSet s{{2}};
    for (auto _ : state) {
        auto rep = sunit::brute_force_search(g, s, 32);
        benchmark::DoNotOptimize(rep.has_value());
    }
}
BENCHMARK(BM_brute_force_c4);

} // namespace

BENCHMARK_MAIN();
