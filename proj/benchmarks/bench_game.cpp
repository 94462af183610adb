#include <gridcolor/game.hpp>

#include <benchmark/benchmark.h>

using namespace gridcolor;

namespace {

void BM_PlayGames(benchmark::State &state)
{
    GameConfig cfg;
    cfg.rows = 3;
    cfg.cols = 7;
    cfg.colors = 2;
    cfg.prover = state.range(0) == 0 ? ProverKind::Random : ProverKind::CellFocus;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = ++seed;
        benchmark::DoNotOptimize(play(cfg));
    }
    state.SetLabel(to_string(cfg.prover));
}
BENCHMARK(BM_PlayGames)->Arg(0)->Arg(1);

void BM_PointsDecimal(benchmark::State &state)
{
    GameTranscript t;
    t.prover_false = 40;
    t.prover_true = 25;
    const DelayerParams params;
    const int digits = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(points_decimal(t, params, digits));
}
BENCHMARK(BM_PointsDecimal)->Arg(40)->Arg(200)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
