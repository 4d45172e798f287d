#include <benchmark/benchmark.h>

#include "tms/bounds.hpp"
#include "tms/generators.hpp"

namespace {

tms::TimedMetricSpace space_of(int n, std::uint64_t seed) {
    return tms::gen::random_box(n, 2, 8, seed);
}

void BM_LowerBoundExhaustive(benchmark::State& state) {
    auto x = space_of(static_cast<int>(state.range(0)), 1);
    auto y = space_of(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        auto lb = tms::tgh_lower_bound(x, y, tms::LowerBoundMode::Exhaustive);
        benchmark::DoNotOptimize(lb.value);
    }
}
BENCHMARK(BM_LowerBoundExhaustive)->DenseRange(2, 5, 1);

void BM_LowerBoundLocalSearch(benchmark::State& state) {
    auto x = space_of(static_cast<int>(state.range(0)), 1);
    auto y = space_of(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        auto lb = tms::tgh_lower_bound(x, y, tms::LowerBoundMode::LocalSearch);
        benchmark::DoNotOptimize(lb.value);
    }
}
BENCHMARK(BM_LowerBoundLocalSearch)->DenseRange(4, 12, 4);

void BM_UpperBoundFromCorrespondence(benchmark::State& state) {
    auto x = space_of(static_cast<int>(state.range(0)), 1);
    auto y = space_of(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        auto ub = tms::tgh_upper_bound(x, y, tms::UpperBoundMode::FromCorrespondence);
        benchmark::DoNotOptimize(ub.value);
    }
}
BENCHMARK(BM_UpperBoundFromCorrespondence)->DenseRange(2, 5, 1);

}  // namespace
