#include <benchmark/benchmark.h>

#include "visconn/connectivity.hpp"
#include "visconn/generators.hpp"
#include "visconn/visibility.hpp"

namespace {

using namespace visconn;

PointSet seeded_set(int n) {
    GenConfig cfg{static_cast<std::uint64_t>(n), n, 4 * n, {}};
    return random_point_set(cfg);
}

void BM_visibility_graph(benchmark::State& state) {
    PointSet ps = seeded_set(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Graph g = visibility_graph(ps);
        benchmark::DoNotOptimize(g.edge_count());
    }
}
BENCHMARK(BM_visibility_graph)->Arg(10)->Arg(20)->Arg(40);

void BM_vertex_connectivity(benchmark::State& state) {
    PointSet ps = seeded_set(static_cast<int>(state.range(0)));
    Graph g = visibility_graph(ps);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vertex_connectivity(g));
    }
}
BENCHMARK(BM_vertex_connectivity)->Arg(10)->Arg(20);

void BM_bivisibility_graph(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    PointSet all = seeded_set(2 * n);
    std::vector<Point> av(all.begin(), all.begin() + n), bv(all.begin() + n, all.end());
    PointSet a(av), b(bv);
    for (auto _ : state) {
        GeomGraph g = bivisibility_graph(a, b);
        benchmark::DoNotOptimize(g.edges.size());
    }
}
BENCHMARK(BM_bivisibility_graph)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
