#include <gridcolor/solver.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace gridcolor;

namespace {

// Blank n x m grid with roughly `keep` of the cells taken from a valid coloring.
PartialColoring seeded_instance(int n, int m, int c, double keep, std::uint64_t seed)
{
    PartialColoring blank(GridDims(n, m), c);
    auto full = decide_gce_fpt(blank);
    PartialColoring pc(GridDims(n, m), c);
    if (! full.yes())
        return pc;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution take(keep);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            if (take(rng))
                pc.set(Cell{i, j}, full.witness->at(i, j));
    return pc;
}

void BM_SubsetDp(benchmark::State &state)
{
    const int blanks = static_cast<int>(state.range(0));
    PartialColoring pc(GridDims(4, 4), 3);
    auto full = decide_gce_fpt(PartialColoring(GridDims(4, 4), 3));
    for (int i = 0; i < 16 - blanks; ++i)
        pc.set(pc.dims().cell_at(static_cast<std::size_t>(i)), full.witness->raw()[static_cast<std::size_t>(i)]);
    for (auto _ : state)
        benchmark::DoNotOptimize(extend_subset_dp(pc, ShapeFamily::rectangle()));
}
BENCHMARK(BM_SubsetDp)->DenseRange(4, 12, 2);

void BM_Backtrack(benchmark::State &state)
{
    const int m = static_cast<int>(state.range(0));
    auto pc = seeded_instance(5, m, 3, 0.3, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(extend_backtrack(pc, ShapeFamily::rectangle()));
}
BENCHMARK(BM_Backtrack)->DenseRange(4, 8, 2);

void BM_BacktrackUnsat(benchmark::State &state)
{
    PartialColoring pc(GridDims(3, 7), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(extend_backtrack(pc, ShapeFamily::rectangle()));
}
BENCHMARK(BM_BacktrackUnsat);

void BM_ValidateRectangles(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> color(1, 8);
    PartialColoring pc(GridDims(n, n), 8);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            pc.set(Cell{i, j}, color(rng));
    for (auto _ : state)
        benchmark::DoNotOptimize(validate_rectangles(pc));
}
BENCHMARK(BM_ValidateRectangles)->RangeMultiplier(2)->Range(16, 256);

} // namespace

BENCHMARK_MAIN();
