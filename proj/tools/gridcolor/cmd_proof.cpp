#include "gridcolor/cli.hpp"

#include <gridcolor/dimacs.hpp>
#include <gridcolor/encode.hpp>
#include <gridcolor/proofs.hpp>
#include <gridcolor/refutation.hpp>

#include <iostream>
#include <sstream>

namespace gridcolor::cli {

namespace {

std::string slurp(const std::string &path)
{
    auto in = open_in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// An ILP file starts with its `# ilp` header; anything else is read as DIMACS.
IlpInstance load_system(const std::string &path)
{
    std::istringstream in(slurp(path));
    std::string first;
    for (std::string line; std::getline(in, line);)
        if (! line.empty() && line.rfind("c ", 0) != 0) {
            first = line;
            break;
        }
    in.clear();
    in.seekg(0);
    if (first.rfind("# ilp", 0) == 0)
        return read_ilp(in);
    return cnf_to_ilp(parse_dimacs(in));
}

struct CheckArgs
{
    std::string formula, proof;
    bool cp = false;
};

void run_check(const CheckArgs &a, Globals &g)
{
    CheckResult result;
    std::size_t size = 0;
    std::optional<bool> tree;
    if (a.cp) {
        const auto ilp = load_system(a.formula);
        auto in = open_in(a.proof);
        const auto proof = read_cp(in, ilp.base_vars);
        size = proof.size();
        result = check_cp(ilp, proof);
    }
    else {
        auto fin = open_in(a.formula);
        const auto phi = parse_dimacs(fin);
        auto pin = open_in(a.proof);
        const auto proof = read_resolution(pin);
        size = proof.size();
        result = check_resolution(phi, proof);
        if (result)
            tree = is_tree_shaped(proof);
    }
    g.exit_code = result ? kOk : kNo;
    if (g.json) {
        nlohmann::json j{{"system", a.cp ? "cutting-planes" : "resolution"}, {"valid", result.valid}, {"lines", size}};
        if (tree)
            j["tree"] = *tree;
        if (! result) {
            j["line"] = result.line;
            j["reason"] = result.reason;
        }
        print_json(j);
        return;
    }
    if (result) {
        std::cout << "VALID " << size << " lines";
        if (tree)
            std::cout << (*tree ? ", tree-shaped" : ", dag-shaped");
        std::cout << '\n';
    }
    else
        std::cout << "INVALID line " << result.line << ": " << result.reason << '\n';
}

struct RefuteArgs
{
    std::vector<int> grid;
    std::string cnf, out;
    bool true_first = false;
};

void run_refute(const RefuteArgs &a, Globals &g)
{
    CnfInstance phi;
    RefutationOptions opts;
    opts.false_first = ! a.true_first;
    if (! a.cnf.empty()) {
        auto in = open_in(a.cnf);
        phi = parse_dimacs(in);
    }
    else if (a.grid.size() == 3) {
        auto built = build_cnf(a.grid[0], a.grid[1], a.grid[2]);
        opts.order = column_major_order(built.vars);
        phi = std::move(built.cnf);
    }
    else
        throw CLI::ValidationError("refute", "give either n m c or --cnf FILE");

    const auto refutation = export_refutation(phi, opts);
    if (! refutation) {
        g.exit_code = kNo;
        if (g.json)
            print_json({{"satisfiable", true}});
        else
            std::cout << "SATISFIABLE: no refutation exists\n";
        return;
    }
    if (! a.out.empty())
        write_resolution(Output(a.out).stream(), refutation->proof);
    const auto check = check_resolution(phi, refutation->proof);
    if (! check)
        throw std::logic_error("exported refutation failed its own check at line " + std::to_string(check.line) + ": " + check.reason);
    const bool tree = is_tree_shaped(refutation->proof);
    if (g.json) {
        nlohmann::json j{{"satisfiable", false},
                         {"lines", refutation->proof.size()},
                         {"tree", tree},
                         {"decisions", refutation->stats.decisions},
                         {"conflicts", refutation->stats.conflicts},
                         {"propagations", refutation->stats.propagations}};
        if (! a.out.empty())
            j["output"] = a.out;
        print_json(j);
        return;
    }
    if (a.out.empty())
        write_resolution(std::cout, refutation->proof);
    else
        std::cout << "refutation: " << refutation->proof.size() << " lines" << (tree ? ", tree-shaped" : "") << ", "
                  << refutation->stats.decisions << " decisions, " << refutation->stats.conflicts << " conflicts\n";
}

} // namespace

void add_proof_commands(CLI::App &app, Globals &g)
{
    {
        auto args = std::make_shared<CheckArgs>();
        auto *sub = app.add_subcommand("check-proof", "Check a resolution or cutting-planes refutation (exit 1 if invalid)");
        sub->add_option("formula", args->formula, "DIMACS CNF, or an ILP file with --cp")->required()->check(CLI::ExistingFile);
        sub->add_option("proof", args->proof)->required()->check(CLI::ExistingFile);
        sub->add_flag("--cp", args->cp, "Proof is a cutting-planes derivation");
        sub->callback([args, &g] { run_check(*args, g); });
    }
    {
        auto args = std::make_shared<RefuteArgs>();
        auto *sub = app.add_subcommand("refute", "Export a tree-like resolution refutation found by DPLL search");
        sub->add_option("grid", args->grid, "n m c of a grid coloring formula")->expected(0, 3);
        sub->add_option("--cnf", args->cnf, "Refute a DIMACS formula instead")->check(CLI::ExistingFile);
        sub->add_option("-o,--output", args->out, "Proof file (default stdout)");
        sub->add_flag("--true-first", args->true_first, "Branch on T before F");
        sub->callback([args, &g] { run_refute(*args, g); });
    }
}

} // namespace gridcolor::cli
