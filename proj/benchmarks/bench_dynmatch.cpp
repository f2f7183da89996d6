#include <benchmark/benchmark.h>

#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/harness/generators.hpp"
#include "dynmatch/harness/reference.hpp"
#include "dynmatch/harness/runner.hpp"
#include "dynmatch/harness/stream.hpp"
#include "dynmatch/path_engine.hpp"
#include "dynmatch/random.hpp"

using namespace dynmatch;

namespace {

harness::UpdateStream bench_stream(std::size_t n, std::size_t ops) {
    return harness::gen_mixed_stream(n, ops, 4 * n, 42);
}

void BM_GraphChurn(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto stream = bench_stream(n, 20000);
    for (auto _ : state) {
        DynamicGraph g(n);
        for (const auto& op : stream.ops) {
            if (op.kind == harness::OpKind::insert) {
                g.insert_edge(op.u, op.v, op.w);
            } else {
                g.delete_edge(op.u, op.v);
            }
        }
        benchmark::DoNotOptimize(g.edge_count());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(stream.ops.size()));
}
BENCHMARK(BM_GraphChurn)->Arg(1000)->Arg(100000);

void BM_MwmOnPath(benchmark::State& state) {
    Rng rng(1);
    std::vector<PathEdge> edges;
    for (VertexId i = 0; i < static_cast<VertexId>(state.range(0)); ++i) {
        edges.push_back({i, i + 1, static_cast<Weight>(rng.between(1, 100)), false});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(mwm_on_path(edges).weight);
    }
}
BENCHMARK(BM_MwmOnPath)->Arg(5)->Arg(203)->Arg(2003);

void replay_bench(benchmark::State& state, const harness::AlgoSpec& spec) {
    const auto stream = bench_stream(1000, static_cast<std::size_t>(state.range(0)));
    harness::ReplayOptions options;
    options.compute_opt = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(harness::replay(stream, spec, 7, options).final_weight);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(stream.ops.size()));
}

void BM_ReplayRandom(benchmark::State& state) {
    harness::AlgoSpec spec;
    spec.random.num_walks = static_cast<std::size_t>(state.range(1));
    replay_bench(state, spec);
}
BENCHMARK(BM_ReplayRandom)->Args({10000, 1})->Args({10000, 10})->Unit(benchmark::kMillisecond);

void BM_ReplayLevel(benchmark::State& state) {
    harness::AlgoSpec spec;
    spec.kind = state.range(1) == 0 ? harness::AlgoKind::level_walk : harness::AlgoKind::level_bfs;
    replay_bench(state, spec);
}
BENCHMARK(BM_ReplayLevel)->Args({10000, 0})->Args({10000, 1})->Unit(benchmark::kMillisecond);

void BM_StaticBlossom(benchmark::State& state) {
    Rng rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto data = harness::gnm_graph(n, 4 * n, rng);
    DynamicGraph g(n);
    for (const auto& e : data.edges) {
        g.insert_edge(e.u, e.v, harness::random_weight(rng));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(harness::blossom_mwm(g).weight);
    }
}
BENCHMARK(BM_StaticBlossom)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
