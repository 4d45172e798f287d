#include <benchmark/benchmark.h>

#include "tms/generators.hpp"
#include "tms/null_distance.hpp"

namespace {

void BM_NullDistanceZigzag(benchmark::State& state) {
    auto z = tms::gen::zigzag(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto nd = tms::null_distance(z);
        benchmark::DoNotOptimize(nd.dhat(0, z.size() - 1));
    }
}
BENCHMARK(BM_NullDistanceZigzag)->RangeMultiplier(2)->Range(4, 32);

void BM_CausallyNullRandom(benchmark::State& state) {
    auto s = tms::gen::random_lipschitz(static_cast<int>(state.range(0)), 2, 8, 7);
    for (auto _ : state) {
        auto check = tms::is_causally_null(s);
        benchmark::DoNotOptimize(check.causally_null);
    }
}
BENCHMARK(BM_CausallyNullRandom)->DenseRange(4, 16, 4);

}  // namespace
