#include "gridcolor/cli.hpp"

#include <gridcolor/errors.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    using namespace gridcolor::cli;

    CLI::App app{"Rectangle-free grid coloring toolkit", "gridcolor"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--jobs", g.jobs, "Worker threads for batch subcommands")->check(CLI::PositiveNumber)->capture_default_str();

    add_grid_commands(app, g);
    add_proof_commands(app, g);
    add_game_commands(app, g);
    add_commcomp_commands(app, g);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << app.help();
        return kError;
    }
    catch (const gridcolor::ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return g.exit_code;
}
