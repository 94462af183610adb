#include <gridcolor/encode.hpp>
#include <gridcolor/proofs.hpp>
#include <gridcolor/refutation.hpp>

#include <benchmark/benchmark.h>

using namespace gridcolor;

namespace {

void BM_ExportRefutation(benchmark::State &state)
{
    const auto g = build_cnf(3, 7, 2);
    RefutationOptions opts;
    opts.order = column_major_order(g.vars);
    std::size_t lines = 0;
    for (auto _ : state) {
        auto ref = export_refutation(g.cnf, opts);
        lines = ref->proof.size();
        benchmark::DoNotOptimize(ref);
    }
    state.counters["lines"] = static_cast<double>(lines);
}
BENCHMARK(BM_ExportRefutation)->Unit(benchmark::kMillisecond);

void BM_CheckRefutation(benchmark::State &state)
{
    const auto g = build_cnf(3, 7, 2);
    RefutationOptions opts;
    opts.order = column_major_order(g.vars);
    const auto ref = export_refutation(g.cnf, opts);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_resolution(g.cnf, ref->proof));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(ref->proof.size()));
}
BENCHMARK(BM_CheckRefutation)->Unit(benchmark::kMillisecond);

void BM_BuildCnf(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_cnf(n, n, 4));
}
BENCHMARK(BM_BuildCnf)->RangeMultiplier(2)->Range(4, 32);

} // namespace

BENCHMARK_MAIN();
