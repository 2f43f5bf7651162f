#include <benchmark/benchmark.h>

#include "quiso/decision.hpp"
#include "quiso/reduction.hpp"

using namespace quiso;

namespace {

Quiver example_quiver() {
    return Quiver(3, {{"alpha", 2, 1},
                      {"beta", 3, 1},
                      {"gamma", 2, 2},
                      {"delta", 2, 3},
                      {"epsilon", 2, 3},
                      {"zeta", 3, 3}});
}

void bm_enumerate_cycles(benchmark::State& state) {
    const Quiver dq = DoubledQuiver(example_quiver()).quiver();
    const int max_len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_cycles(dq, max_len));
    }
}
BENCHMARK(bm_enumerate_cycles)->Arg(3)->Arg(5)->Arg(7);

void bm_compute_signature(benchmark::State& state) {
    const Quiver q = example_quiver();
    const auto rep = random_representation(q, {2, 2, 2}, 1);
    const int max_len = static_cast<int>(state.range(0));
    const auto cycles =
        enumerate_cycles(DoubledQuiver(q).quiver(), max_len);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_signature(
            rep, StarMode::ConjugateTranspose, max_len, cycles));
    }
    state.counters["cycles"] = static_cast<double>(cycles.size());
}
BENCHMARK(bm_compute_signature)->Arg(4)->Arg(6)->Arg(8);

void bm_decide_isometry(benchmark::State& state) {
    const Quiver q = example_quiver();
    const auto a = random_representation(q, {2, 2, 2}, 2);
    const auto b = transform(
        a, random_isometry_family({2, 2, 2}, 3, StarMode::ConjugateTranspose));
    DecideOptions opts;
    opts.max_len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide_isometry(a, b, opts));
    }
}
BENCHMARK(bm_decide_isometry)->Arg(4)->Arg(6);

void bm_build_MQ(benchmark::State& state) {
    const auto rep = random_representation(example_quiver(), {4, 4, 4}, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_MQ(rep));
    }
}
BENCHMARK(bm_build_MQ);

} // namespace

BENCHMARK_MAIN();
