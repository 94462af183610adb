#include "gridcolor/cli.hpp"

#include <gridcolor/bounds.hpp>
#include <gridcolor/dimacs.hpp>
#include <gridcolor/encode.hpp>
#include <gridcolor/grid_io.hpp>
#include <gridcolor/reduction.hpp>
#include <gridcolor/solver.hpp>

#include <iostream>
#include <sstream>

namespace gridcolor::cli {

namespace {

nlohmann::json grid_json(const PartialColoring &pc)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 1; r <= pc.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 1; c <= pc.cols(); ++c)
            row.push_back(pc.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

ShapeFamily family_from(const std::string &shape_path)
{
    return shape_path.empty() ? ShapeFamily::rectangle() : load_shape_file(shape_path);
}

struct BoundsArgs
{
    long long rows = 0, cols = 0, colors = 0;
    std::string grid;
};

void run_bounds(const BoundsArgs &a, Globals &g)
{
    RegionVerdict v;
    if (a.grid.empty())
        v = classify_blank(a.rows, a.cols, a.colors);
    else {
        auto pc = load_grid_file(a.grid);
        v = classify(a.rows, a.cols, a.colors, pc);
    }
    if (g.json) {
        nlohmann::json rules = nlohmann::json::array();
        for (auto r : v.rules)
            rules.push_back(to_string(r));
        nlohmann::json j{{"N", a.rows}, {"M", a.cols}, {"c", a.colors}, {"verdict", to_string(v.kind)}, {"rules", rules},
                         {"reason", v.reason}, {"search_region_limit", search_region_limit(a.colors)}};
        if (v.refinement != 0)
            j["refinement"] = v.refinement;
        print_json(j);
        return;
    }
    std::cout << to_string(v.kind);
    if (! v.rules.empty()) {
        std::cout << " (";
        for (std::size_t i = 0; i < v.rules.size(); ++i)
            std::cout << (i ? ", " : "") << to_string(v.rules[i]);
        std::cout << ')';
    }
    std::cout << '\n' << v.reason << '\n';
}

struct SolveArgs
{
    std::string grid, shape, engine = "fpt";
};

void run_solve(const SolveArgs &a, Globals &g)
{
    const auto engine = parse_engine(a.engine);
    if (! engine)
        throw CLI::ValidationError("--engine", "expected dp, bt or fpt");
    const auto pc = load_grid_file(a.grid);
    const auto family = family_from(a.shape);
    const auto result = solve(pc, family, *engine);
    g.exit_code = result.yes() ? kOk : kNo;
    if (g.json) {
        nlohmann::json j{{"decision", to_string(result.decision)},
                         {"engine", result.stats.engine},
                         {"searched", result.stats.searched},
                         {"nodes", result.stats.nodes},
                         {"table_entries", result.stats.table_entries}};
        if (result.witness)
            j["witness"] = grid_json(*result.witness);
        print_json(j);
        return;
    }
    std::cout << to_string(result.decision) << '\n';
    if (result.witness)
        write_grid(std::cout, *result.witness);
}

struct EncodeArgs
{
    int rows = 0, cols = 0, colors = 0;
    std::string shape, out;
    bool ilp = false;
};

void run_encode(const EncodeArgs &a, Globals &g)
{
    const auto family = family_from(a.shape);
    const auto cnf = build_cnf(a.rows, a.cols, a.colors, family);
    std::ostringstream body;
    if (a.ilp)
        write_ilp(body, cnf_to_ilp(cnf.cnf));
    else {
        std::ostringstream head;
        head << "grid " << a.rows << "x" << a.cols << " colors " << a.colors << ", x(i,j,k) = ((i-1)*" << a.cols << "+(j-1))*" << a.colors
             << "+k";
        write_dimacs(body, cnf.cnf, {head.str()});
    }
    if (g.json) {
        nlohmann::json j{{"format", a.ilp ? "ilp" : "dimacs"},
                         {"vars", cnf.cnf.var_count},
                         {"clauses", cnf.cnf.clauses.size()},
                         {"color_clauses", cnf.color_clauses}};
        if (a.out.empty())
            j["content"] = body.str();
        else {
            Output(a.out).stream() << body.str();
            j["output"] = a.out;
        }
        print_json(j);
        return;
    }
    Output(a.out).stream() << body.str();
}

struct DecodeArgs
{
    int rows = 0, cols = 0, colors = 0;
    std::string model, shape;
};

void run_decode(const DecodeArgs &a, Globals &g)
{
    auto in = open_in(a.model);
    const GridVariables vars(a.rows, a.cols, a.colors);
    const auto model = parse_dimacs_model(in, vars.count());
    const auto coloring = decode_model(model, a.rows, a.cols, a.colors);
    const auto violation = validate(coloring, family_from(a.shape));
    g.exit_code = violation ? kNo : kOk;
    if (g.json) {
        nlohmann::json j{{"coloring", grid_json(coloring)}, {"valid", ! violation}};
        if (violation) {
            nlohmann::json cells = nlohmann::json::array();
            for (auto c : violation->cells)
                cells.push_back({c.row, c.col});
            j["violation"] = {{"color", violation->color}, {"cells", cells}};
        }
        print_json(j);
        return;
    }
    write_grid(std::cout, coloring);
    if (violation) {
        std::cout << "invalid: color " << violation->color << " on";
        for (auto c : violation->cells)
            std::cout << ' ' << to_string(c);
        std::cout << '\n';
    }
}

struct ReduceArgs
{
    std::string formula, out, roles;
    bool optimized = false;
    bool decide = false;
};

void run_reduce(const ReduceArgs &a, Globals &g)
{
    auto in = open_in(a.formula);
    const auto phi = to_three_cnf(parse_dimacs(in));
    const auto red = reduce(phi, ReductionOptions{a.optimized});

    std::string roles_path = a.roles;
    if (roles_path.empty() && ! a.out.empty() && a.out != "-")
        roles_path = a.out + ".roles.json";
    if (! a.out.empty())
        write_grid(Output(a.out).stream(), red.instance);
    if (! roles_path.empty())
        Output(roles_path).stream() << roles_json(red) << '\n';

    std::optional<ExtensionResult> result;
    std::vector<bool> assignment;
    if (a.decide) {
        result = extend_backtrack(red.instance, ShapeFamily::rectangle());
        if (result->witness)
            assignment = coloring_to_assignment(red, *result->witness);
        g.exit_code = result->yes() ? kOk : kNo;
    }

    if (g.json) {
        nlohmann::json j{{"variables", phi.var_count},
                         {"clauses", phi.clauses.size()},
                         {"main", {{"rows", red.main_rows}, {"cols", red.main_cols}}},
                         {"instance", {{"rows", red.instance.rows()}, {"cols", red.instance.cols()}, {"colors", red.instance.colors()}}},
                         {"blanks", red.instance.blank_count()}};
        if (! roles_path.empty())
            j["roles"] = roles_path;
        if (a.out.empty())
            j["grid"] = format_grid(red.instance);
        if (result) {
            j["decision"] = to_string(result->decision);
            if (result->yes()) {
                nlohmann::json values = nlohmann::json::array();
                for (int v = 1; v <= phi.var_count; ++v)
                    values.push_back(assignment[static_cast<std::size_t>(v)] ? v : -v);
                j["assignment"] = values;
            }
        }
        print_json(j);
        return;
    }
    if (a.out.empty())
        write_grid(std::cout, red.instance);
    else {
        std::cout << "main grid " << red.main_rows << "x" << red.main_cols << ", instance " << red.instance.rows() << "x"
                  << red.instance.cols() << " with " << red.instance.colors() << " colors, " << red.instance.blank_count() << " blanks\n";
        if (! roles_path.empty())
            std::cout << "roles written to " << roles_path << '\n';
    }
    if (result) {
        std::cout << to_string(result->decision) << '\n';
        if (result->yes()) {
            std::cout << "v";
            for (int v = 1; v <= phi.var_count; ++v)
                std::cout << ' ' << (assignment[static_cast<std::size_t>(v)] ? v : -v);
            std::cout << " 0\n";
        }
    }
}

} // namespace

void add_grid_commands(CLI::App &app, Globals &g)
{
    {
        auto args = std::make_shared<BoundsArgs>();
        auto *sub = app.add_subcommand("bounds", "Closed-form colorability verdict for G(N,M) with c colors");
        sub->add_option("N", args->rows)->required()->check(CLI::PositiveNumber);
        sub->add_option("M", args->cols)->required()->check(CLI::PositiveNumber);
        sub->add_option("c", args->colors)->required()->check(CLI::PositiveNumber);
        sub->add_option("--grid", args->grid, "Partial coloring to classify instead of the blank grid")->check(CLI::ExistingFile);
        sub->callback([args, &g] { run_bounds(*args, g); });
    }
    {
        auto args = std::make_shared<SolveArgs>();
        auto *sub = app.add_subcommand("solve", "Decide whether a partial coloring extends (exit 0 = YES, 1 = NO)");
        sub->add_option("grid", args->grid)->required()->check(CLI::ExistingFile);
        sub->add_option("--shape", args->shape, "Shape file; default is the rectangle family")->check(CLI::ExistingFile);
        sub->add_option("--engine", args->engine, "dp, bt or fpt")->capture_default_str()->check(CLI::IsMember({"dp", "bt", "fpt"}));
        sub->callback([args, &g] { run_solve(*args, g); });
    }
    {
        auto args = std::make_shared<EncodeArgs>();
        auto *sub = app.add_subcommand("encode", "CNF (DIMACS) or 0-1 ILP encoding of c-colorability of G(n,m)");
        sub->add_option("n", args->rows)->required()->check(CLI::PositiveNumber);
        sub->add_option("m", args->cols)->required()->check(CLI::PositiveNumber);
        sub->add_option("c", args->colors)->required()->check(CLI::PositiveNumber);
        sub->add_option("--shape", args->shape)->check(CLI::ExistingFile);
        sub->add_option("-o,--output", args->out, "Output file (default stdout)");
        sub->add_flag("--ilp", args->ilp, "Emit the inequality system instead of DIMACS");
        sub->callback([args, &g] { run_encode(*args, g); });
    }
    {
        auto args = std::make_shared<DecodeArgs>();
        auto *sub = app.add_subcommand("decode", "Turn a SAT model into a coloring and validate it");
        sub->add_option("n", args->rows)->required()->check(CLI::PositiveNumber);
        sub->add_option("m", args->cols)->required()->check(CLI::PositiveNumber);
        sub->add_option("c", args->colors)->required()->check(CLI::PositiveNumber);
        sub->add_option("model", args->model)->required()->check(CLI::ExistingFile);
        sub->add_option("--shape", args->shape)->check(CLI::ExistingFile);
        sub->callback([args, &g] { run_decode(*args, g); });
    }
    {
        auto args = std::make_shared<ReduceArgs>();
        auto *sub = app.add_subcommand("reduce", "Build the grid extension instance of a 3-CNF formula");
        sub->add_option("formula", args->formula, "DIMACS file with three literals per clause")->required()->check(CLI::ExistingFile);
        sub->add_option("-o,--output", args->out, "Grid file for the instance (default stdout)");
        sub->add_option("--roles", args->roles, "Cell-role JSON (default <output>.roles.json)");
        sub->add_flag("--optimized", args->optimized, "Smaller variable blocks");
        sub->add_flag("--decide", args->decide, "Solve the instance and map the witness back (exit 1 if not extendable)");
        sub->callback([args, &g] { run_reduce(*args, g); });
    }
}

} // namespace gridcolor::cli
