#include "gridcolor/cli.hpp"

#include <gridcolor/commcomp.hpp>
#include <gridcolor/dimacs.hpp>
#include <gridcolor/grid_io.hpp>

#include <iomanip>
#include <iostream>
#include <random>
#include <thread>

namespace gridcolor::cli {

namespace {

struct VerifyArgs
{
    int max_n = 7;
};

void run_verify(const VerifyArgs &a, Globals &g)
{
    std::vector<int> sizes;
    for (int n = 3; n <= a.max_n; n += 2)
        sizes.push_back(n);
    std::vector<ChainCheck> checks(sizes.size());
    {
        const std::size_t jobs = std::max<std::size_t>(1, std::min(g.jobs, sizes.size()));
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < sizes.size(); i += jobs)
                    checks[i] = verify_chain(sizes[i]);
            });
        for (auto &t : pool)
            t.join();
    }
    bool ok = ! checks.empty();
    for (const auto &c : checks)
        ok = ok && c.all_ok();
    g.exit_code = ok ? kOk : kNo;

    if (g.json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &c : checks)
            rows.push_back({{"n", c.n},
                            {"instances", c.instances},
                            {"prmeet_promise", c.prmeet_promise_ok},
                            {"phpset_promise", c.phpset_promise_ok},
                            {"phpstr_promise", c.phpstr_promise_ok},
                            {"answers_agree", c.answers_agree},
                            {"pass", c.all_ok()}});
        print_json({{"chain", "PrUM>PrMeet>PHPset>PHPstr"}, {"sizes", rows}, {"pass", ok}});
        return;
    }
    std::cout << std::left << std::setw(4) << "n" << std::setw(11) << "instances" << std::setw(10) << "PrMeet" << std::setw(10)
              << "PHPset" << std::setw(10) << "PHPstr" << std::setw(9) << "answers" << "result\n";
    for (const auto &c : checks)
        std::cout << std::setw(4) << c.n << std::setw(11) << c.instances << std::setw(10) << c.prmeet_promise_ok << std::setw(10)
                  << c.phpset_promise_ok << std::setw(10) << c.phpstr_promise_ok << std::setw(9) << c.answers_agree
                  << (c.all_ok() ? "PASS" : "FAIL") << '\n';
}

struct FiArgs
{
    std::string instance, assignment;
    std::vector<int> split;
};

void run_fi(const FiArgs &a, Globals &g)
{
    auto in = open_in(a.instance);
    const auto ilp = read_ilp(in);
    auto ain = open_in(a.assignment);
    const auto model = parse_dimacs_model(ain, ilp.var_count());
    std::vector<int> values(static_cast<std::size_t>(ilp.var_count()) + 1, 0);
    for (int v = 1; v <= ilp.var_count(); ++v)
        values[static_cast<std::size_t>(v)] = model.value(v) ? 1 : 0;

    std::optional<Partition> partition;
    if (a.split.size() == 3)
        partition = column_split(GridVariables(a.split[0], a.split[1], a.split[2]), ilp);

    std::size_t row = 0;
    try {
        row = fi_find_violation(ilp, values);
    }
    catch (const NoViolation &) {
        g.exit_code = kNo;
        if (g.json)
            print_json({{"violated", nullptr}});
        else
            std::cout << "no violated row\n";
        return;
    }
    const auto &r = ilp.rows[row - 1];
    std::string owners;
    if (partition) {
        bool alice = false, bob = false;
        for (auto [v, coef] : r.terms)
            (partition->owner[static_cast<std::size_t>(v)] == 0 ? alice : bob) = true;
        owners = alice && bob ? "shared" : alice ? "alice" : bob ? "bob" : "none";
    }
    if (g.json) {
        nlohmann::json j{{"violated", row}, {"row", format_row(ilp, r)}};
        if (partition)
            j["owners"] = owners;
        print_json(j);
        return;
    }
    std::cout << "row " << row << ": " << format_row(ilp, r) << '\n';
    if (partition)
        std::cout << "variables held by " << owners << '\n';
}

struct SampleArgs
{
    int colors = 0, cols = 0;
};

void run_sample(const SampleArgs &a, Globals &g)
{
    std::mt19937_64 rng(g.seed);
    const int cols = a.cols > 0 ? a.cols : 1 + a.colors * static_cast<int>(a.colors * (a.colors - 1) / 2);
    const auto pc = sample_column_restricted(a.colors, cols, rng);
    const bool covered = gcc_parity_covered(a.colors);
    if (g.json) {
        nlohmann::json symbols = nlohmann::json::array();
        for (int j = 1; j <= cols; ++j) {
            const auto s = column_symbol(pc, j);
            symbols.push_back({s.color, s.row1, s.row2});
        }
        print_json({{"c", a.colors}, {"cols", cols}, {"grid", format_grid(pc)}, {"symbols", symbols}, {"parity_covered", covered}});
        return;
    }
    write_grid(std::cout, pc);
    if (! covered)
        std::cout << "note: c = " << a.colors << " is not 3 mod 4; the column-split argument only covers that parity\n";
}

} // namespace

void add_commcomp_commands(CLI::App &app, Globals &g)
{
    auto *cc = app.add_subcommand("commcomp", "Promise problem reductions and the violated-inequality search");
    cc->require_subcommand(1);
    {
        auto args = std::make_shared<VerifyArgs>();
        auto *sub = cc->add_subcommand("verify", "Exhaustively check the PrUM to PHPstr chain for odd n up to --max-n");
        sub->add_option("--max-n", args->max_n)->capture_default_str()->check(CLI::Range(3, 15));
        sub->callback([args, &g] { run_verify(*args, g); });
    }
    {
        auto args = std::make_shared<FiArgs>();
        auto *sub = cc->add_subcommand("fi", "Least row of an ILP violated by a 0-1 assignment");
        sub->add_option("instance", args->instance, "ILP file")->required()->check(CLI::ExistingFile);
        sub->add_option("assignment", args->assignment, "Signed literals over 1..2V, unmentioned are 0")->required()->check(CLI::ExistingFile);
        sub->add_option("--split", args->split, "n m c of the grid, to report which party holds the row")->expected(3);
        sub->callback([args, &g] { run_fi(*args, g); });
    }
    {
        auto args = std::make_shared<SampleArgs>();
        auto *sub = cc->add_subcommand("sample", "Random (c+1)-row coloring with one repeated color per column");
        sub->add_option("c", args->colors)->required()->check(CLI::Range(2, 64));
        sub->add_option("--cols", args->cols, "Columns (default c*C(c,2)+1)");
        sub->callback([args, &g] { run_sample(*args, g); });
    }
}

} // namespace gridcolor::cli
