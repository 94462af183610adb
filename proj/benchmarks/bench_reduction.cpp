#include <gridcolor/reduction.hpp>
#include <gridcolor/solver.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace gridcolor;

namespace {

ThreeCnf random_formula(int vars, int clauses, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> var(1, vars);
    std::bernoulli_distribution neg(0.5);
    ThreeCnf phi{vars, {}};
    for (int k = 0; k < clauses; ++k)
        phi.clauses.push_back({var(rng) * (neg(rng) ? -1 : 1), var(rng) * (neg(rng) ? -1 : 1), var(rng) * (neg(rng) ? -1 : 1)});
    return phi;
}

void BM_Reduce(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const auto phi = random_formula(n, n, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(reduce(phi));
}
// The instance side grows with the number of D cells, so memory is quadratic in it.
BENCHMARK(BM_Reduce)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ReduceAndDecide(benchmark::State &state)
{
    const ThreeCnf phi{4, {{1, 2, -3}, {-2, 3, 4}, {-1, -3, -4}}};
    for (auto _ : state) {
        auto red = reduce(phi);
        benchmark::DoNotOptimize(extend_backtrack(red.instance, ShapeFamily::rectangle()));
    }
}
BENCHMARK(BM_ReduceAndDecide)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
