#include "gridcolor/cli.hpp"

#include <gridcolor/game.hpp>
#include <gridcolor/grid_io.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <iostream>
#include <map>

namespace gridcolor::cli {

namespace {

struct ParamArgs
{
    std::string a = DelayerParams{}.a;
    double r = DelayerParams{}.r;
    double coefficient = DelayerParams{}.coefficient;

    DelayerParams params() const
    {
        DelayerParams p;
        p.a = a;
        p.r = r;
        p.coefficient = coefficient;
        return p;
    }
};

void add_param_options(CLI::App *sub, ParamArgs &p)
{
    sub->add_option("--a", p.a, "Delayer scoring base a (b = a/(a-1))")->capture_default_str();
    sub->add_option("--r", p.r, "Panic fraction r")->capture_default_str();
}

struct GameArgs
{
    int rows = 0, cols = 0, colors = 0;
    std::string prover = "cellfocus", shape, out;
    std::size_t seeds = 1;
    int precision = 0;
    bool value = false;
    ParamArgs params;
};

void run_game(const GameArgs &a, Globals &g)
{
    GameConfig config;
    config.rows = a.rows;
    config.cols = a.cols;
    config.colors = a.colors;
    if (! a.shape.empty())
        config.family = load_shape_file(a.shape);
    config.params = a.params.params();
    const auto prover = parse_prover(a.prover);
    if (! prover)
        throw CLI::ValidationError("--prover", "expected random, cellfocus or minimax");
    config.prover = *prover;
    config.seed = g.seed;
    check_config(config);
    const int digits = a.precision > 0 ? a.precision : default_precision();

    const auto games = play_many(config, a.seeds, g.jobs);

    std::map<std::string, std::size_t> ends;
    double lo = 0, hi = 0, sum = 0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < games.size(); ++i) {
        const double p = points(games[i], config.params);
        ++ends[to_string(games[i].end)];
        if (i == 0 || p < lo) {
            lo = p;
            best = i;
        }
        hi = i == 0 ? p : std::max(hi, p);
        sum += p;
    }
    const double mean = games.empty() ? 0 : sum / static_cast<double>(games.size());

    if (! a.out.empty()) {
        Output out(a.out);
        for (const auto &t : games)
            out.stream() << transcript_json(t, config, digits) << '\n';
    }

    std::optional<double> game_value;
    if (a.value)
        game_value = minimax_value(config);

    if (g.json) {
        nlohmann::json j{{"games", games.size()},
                         {"prover", to_string(config.prover)},
                         {"min_points", games.empty() ? "0" : points_decimal(games[best], config.params, digits)},
                         {"mean_points", mean},
                         {"max_points", hi},
                         {"ends", ends},
                         {"implied_bound", report_tree_res_bound(lo)}};
        if (game_value)
            j["game_value"] = *game_value;
        if (a.out.empty()) {
            nlohmann::json ts = nlohmann::json::array();
            for (const auto &t : games)
                ts.push_back(nlohmann::json::parse(transcript_json(t, config, digits)));
            j["transcripts"] = std::move(ts);
        }
        print_json(j);
        return;
    }
    if (a.out.empty() && games.size() == 1)
        std::cout << transcript_json(games.front(), config, digits) << '\n';
    std::cout << std::fixed << std::setprecision(6);
    std::cout << "games   " << games.size() << " (" << to_string(config.prover) << " prover, seeds " << g.seed << ".."
              << g.seed + (games.empty() ? 0 : games.size() - 1) << ")\n";
    std::cout << "points  min " << lo << "  mean " << mean << "  max " << hi << '\n';
    std::cout << "ends   ";
    for (const auto &[kind, count] : ends)
        std::cout << ' ' << kind << '=' << count;
    std::cout << '\n';
    std::cout << "bound   " << report_tree_res_bound(lo) << '\n';
    if (game_value)
        std::cout << "value   " << *game_value << '\n';
}

struct PointBoundArgs
{
    int c = 0;
    ParamArgs params;
};

void run_point_bound(const PointBoundArgs &a, Globals &g)
{
    auto params = a.params.params();
    const auto r = bound_report(a.c, params);
    if (g.json) {
        print_json({{"c", r.c},
                    {"q_c_lg_a", r.term_fraction_a},
                    {"s_c_lg_b", r.term_fraction_b},
                    {"quadratic", r.term_quadratic},
                    {"bound", r.bound},
                    {"target", r.target},
                    {"meets_target", r.meets_target},
                    {"derived_coefficient", r.derived_coefficient},
                    {"bound_derived", r.bound_derived},
                    {"meets_target_derived", r.meets_target_derived},
                    {"claim", report_tree_res_bound_symbolic(params.D)}});
        return;
    }
    std::cout << std::setprecision(10);
    std::cout << "c                 " << r.c << '\n';
    std::cout << "q*c*lg a          " << r.term_fraction_a << '\n';
    std::cout << "s*c*lg(a/(a-1))   " << r.term_fraction_b << '\n';
    std::ostringstream quad;
    quad << params.coefficient << "*c^2";
    std::cout << std::left << std::setw(18) << quad.str() << r.term_quadratic << '\n';
    std::cout << "bound (min)       " << r.bound << '\n';
    std::cout << "target D*c        " << r.target << (r.meets_target ? "  met" : "  NOT met (strict comparison)") << '\n';
    std::cout << "derived coef      " << r.derived_coefficient << " -> bound " << r.bound_derived
              << (r.meets_target_derived ? "  met" : "  NOT met") << '\n';
    std::cout << "tree resolution   " << report_tree_res_bound(r.bound) << '\n';
}

} // namespace

void add_game_commands(CLI::App &app, Globals &g)
{
    {
        auto args = std::make_shared<GameArgs>();
        auto *sub = app.add_subcommand("game", "Play the Prover-Delayer game on the grid coloring formula");
        sub->add_option("n", args->rows)->required()->check(CLI::PositiveNumber);
        sub->add_option("m", args->cols)->required()->check(CLI::PositiveNumber);
        sub->add_option("c", args->colors)->required()->check(CLI::PositiveNumber);
        sub->add_option("--prover", args->prover, "random, cellfocus or minimax")
            ->capture_default_str()
            ->check(CLI::IsMember({"random", "cellfocus", "minimax"}));
        sub->add_option("--seeds", args->seeds, "Number of games; game i uses seed --seed + i")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--shape", args->shape)->check(CLI::ExistingFile);
        sub->add_option("--precision", args->precision, "Decimal digits for point values (default GRIDCOLOR_PRECISION or 40)");
        sub->add_option("-o,--output", args->out, "Write one JSON transcript per line");
        sub->add_flag("--value", args->value, "Also compute the exact game value against the Delayer (small formulas)");
        add_param_options(sub, args->params);
        sub->callback([args, &g] { run_game(*args, g); });
    }
    {
        auto args = std::make_shared<PointBoundArgs>();
        auto *sub = app.add_subcommand("point-bound", "Analytic Delayer point bound for c colors");
        sub->add_option("c", args->c)->required()->check(CLI::PositiveNumber);
        add_param_options(sub, args->params);
        sub->add_option("--coefficient", args->params.coefficient, "Quadratic-term coefficient")->capture_default_str();
        sub->callback([args, &g] { run_point_bound(*args, g); });
    }
}

} // namespace gridcolor::cli
