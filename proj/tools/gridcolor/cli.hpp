#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

namespace gridcolor::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kNo = 1;
inline constexpr int kError = 2;

struct Globals
{
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    int exit_code = kOk;
};

/// Bad input that is not a usage error (unreadable file, malformed content).
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string &path);

/// Writes to `path`, or stdout when path is empty or "-".
class Output
{
public:
    explicit Output(const std::string &path);
    std::ostream &stream() { return *out_; }
    bool to_stdout() const noexcept { return file_ == nullptr; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream *out_;
};

void print_json(const nlohmann::json &j);

void add_grid_commands(CLI::App &app, Globals &g);
void add_proof_commands(CLI::App &app, Globals &g);
void add_game_commands(CLI::App &app, Globals &g);
void add_commcomp_commands(CLI::App &app, Globals &g);

} // namespace gridcolor::cli
