#include <benchmark/benchmark.h>

#include "tms/generators.hpp"
#include "tms/nets.hpp"

namespace {

void BM_BuildHierarchy(benchmark::State& state) {
    std::vector<tms::TimedMetricSpace> spaces;
    for (int s = 0; s < static_cast<int>(state.range(0)); ++s)
        spaces.push_back(tms::gen::random_box(6, 2, 8, static_cast<std::uint64_t>(s)));
    std::vector<const tms::TimedMetricSpace*> ptrs;
    for (const auto& s : spaces) ptrs.push_back(&s);
    auto params = tms::default_hierarchy_params(ptrs);
    for (auto _ : state) {
        auto h = tms::build_hierarchy(ptrs, params);
        benchmark::DoNotOptimize(h.depth());
    }
}
BENCHMARK(BM_BuildHierarchy)->DenseRange(2, 10, 4);

void BM_ZigzagConvergenceReport(benchmark::State& state) {
    std::vector<tms::TimedMetricSpace> seq;
    for (int j = 1; j <= static_cast<int>(state.range(0)); j *= 2)
        seq.push_back(tms::gen::zigzag(j));
    tms::TimedMetricSpace limit =
        tms::gen::zigzag(static_cast<int>(state.range(0)), true);
    std::vector<const tms::TimedMetricSpace*> ptrs;
    for (const auto& s : seq) ptrs.push_back(&s);
    for (auto _ : state) {
        auto run = tms::run_convergence(ptrs, limit);
        benchmark::DoNotOptimize(run.report.rows.size());
    }
}
BENCHMARK(BM_ZigzagConvergenceReport)->RangeMultiplier(2)->Range(4, 16);

}  // namespace

BENCHMARK_MAIN();
