#pragma once

// Exact decision procedures for grid coloring extension.

#include <gridcolor/grid.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridcolor {

enum class Decision
{
    Yes,
    No
};

std::string to_string(Decision decision);

struct SolveStats
{
    std::uint64_t nodes = 0;         ///< search nodes (backtracking) or submasks tried (DP)
    std::uint64_t table_entries = 0; ///< DP cells filled
    double wall_ms = 0.0;
    bool searched = false; ///< false when a closed-form test decided the instance
    std::string engine;
};

struct ExtensionResult
{
    Decision decision = Decision::No;
    /// Total coloring agreeing with the input; present iff decision is Yes.
    std::optional<PartialColoring> witness;
    SolveStats stats;

    bool yes() const noexcept { return decision == Decision::Yes; }
};

class CapExceeded : public std::runtime_error
{
public:
    CapExceeded(std::size_t blanks, std::size_t cap);
    std::size_t blanks() const noexcept { return blanks_; }

private:
    std::size_t blanks_;
};

struct DpOptions
{
    std::size_t max_blanks = 24;
};

/// f(S, i) for every subset S of the blank cells and i = 0..c:
/// can S be colored from {1..i} without completing a forbidden set,
/// given the fixed cells and the cells of S colored so far.
class SubsetDpTable
{
public:
    SubsetDpTable(std::size_t blanks, int colors);

    std::size_t blanks() const noexcept { return blanks_; }
    int colors() const noexcept { return colors_; }
    bool at(std::uint64_t mask, int i) const;
    void set(std::uint64_t mask, int i);

private:
    std::size_t blanks_;
    int colors_;
    std::vector<std::vector<std::uint64_t>> layers_;
};

struct SubsetDp
{
    std::vector<Cell> blanks; ///< bit j of a mask is blanks[j]
    SubsetDpTable table;
};

/// Fills the full table. Requires a valid partial coloring.
/// Throws CapExceeded above the blank-cell cap.
SubsetDp build_subset_dp(const PartialColoring &coloring, const ShapeFamily &family, const DpOptions &options = {});

ExtensionResult extend_subset_dp(const PartialColoring &coloring, const ShapeFamily &family, const DpOptions &options = {});

/// Most-constrained blank first (ties: row-major order), colors ascending.
ExtensionResult extend_backtrack(const PartialColoring &coloring, const ShapeFamily &family);

/// Rectangle family: closed-form region tests, then exact search only on
/// instances no bound decides.
ExtensionResult decide_gce_fpt(const PartialColoring &coloring);

enum class Engine
{
    Dp,
    Backtrack,
    Fpt
};

std::optional<Engine> parse_engine(const std::string &name);
std::string to_string(Engine engine);

/// Dispatch by engine. Fpt requires the rectangle family.
ExtensionResult solve(const PartialColoring &coloring, const ShapeFamily &family, Engine engine);

} // namespace gridcolor
