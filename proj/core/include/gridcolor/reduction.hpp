#pragma once

// Compiles a 3-CNF formula into a grid coloring extension instance and maps
// witnesses in both directions.
//
// Layout of the main grid (row 1 on top):
//   column 1          the literal column; top cell D, the rest blank
//   next columns      one chain block per variable, left to right
//   last 2m columns   two columns per clause
// Variable blocks are stacked bottom-up, variable 1 lowest. Inside a block
// the rows alternate literal signs. Every D cell holds its own color, and a
// border of columns to the left and rows below keeps each D color out of the
// rest of the main grid.

#include <gridcolor/encode.hpp>
#include <gridcolor/grid.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridcolor {

struct ThreeCnf
{
    int var_count = 0;
    std::vector<std::array<Literal, 3>> clauses;

    friend bool operator==(const ThreeCnf &, const ThreeCnf &) = default;
};

/// Throws std::invalid_argument unless every clause has exactly 3 literals
/// over variables 1..var_count and there is at least one clause.
ThreeCnf to_three_cnf(const CnfInstance &cnf);
void check_three_cnf(const ThreeCnf &phi);
CnfInstance to_cnf(const ThreeCnf &phi);

/// assignment[v] for v in 1..n (index 0 unused).
bool satisfies(const ThreeCnf &phi, const std::vector<bool> &assignment);

inline constexpr Color kTrueColor = 1;
inline constexpr Color kFalseColor = 2;

enum class RoleKind
{
    Unique,      ///< D cell of the main grid
    Border,      ///< border region filled with a D color
    GuardT,      ///< the T in a border column
    ChainT,
    ChainF,
    ClauseT,     ///< top-row T of a clause column
    ClauseF,
    Literal,     ///< blank literal-column cell
    ClauseBlank  ///< blank cell of a clause gadget
};

std::string to_string(RoleKind kind);

struct CellRole
{
    RoleKind kind = RoleKind::Unique;
    Color color = kBlank;   ///< pre-assigned color (kBlank for blanks)
    int var = 0;            ///< Literal: variable; Chain*: owning variable
    bool positive = true;   ///< Literal: sign
    int copy = 0;           ///< Literal: 1-based copy index, bottom-up
    int clause = 0;         ///< Clause*: 1-based clause index
    int position = 0;       ///< ClauseBlank/ClauseF: literal slot 1..3
};

struct ClauseGadget
{
    int clause = 0;            ///< 1-based
    int col_a = 0, col_b = 0;  ///< instance columns
    std::array<int, 3> rows{}; ///< instance rows of the L1, L2, L3 slots
    std::array<int, 3> slot{}; ///< which literal of the clause (0..2) fills L1, L2, L3
};

struct VariableBlock
{
    int var = 0;
    int rows = 0;              ///< 0 when the variable has no block
    int bottom_row = 0;        ///< instance row of the lowest literal cell
    bool bottom_positive = true;
    int first_col = 0;         ///< first chain column (instance coordinates)
};

struct ReductionOptions
{
    /// Use only as many literal copies as the clauses need.
    bool optimized = false;
};

struct GceReduction
{
    ThreeCnf formula;
    PartialColoring instance{GridDims(1, 1), 1};
    int main_rows = 0;
    int main_cols = 0;
    int d_count = 0;           ///< C; instance uses C + 2 colors
    int main_row_offset = 0;   ///< main row r is instance row r + offset (always 0)
    int main_col_offset = 0;   ///< main column j is instance column j + offset (= C)
    std::vector<VariableBlock> blocks; ///< index v-1
    std::vector<ClauseGadget> gadgets;
    std::vector<CellRole> roles;       ///< row-major over the instance
    std::vector<Cell> d_cells;         ///< instance cell of D color 3 + k

    int literal_col() const noexcept { return main_col_offset + 1; }
    const CellRole &role(Cell cell) const { return roles.at(instance.dims().index(cell)); }
    bool in_main(Cell cell) const noexcept
    {
        return cell.row <= main_rows && cell.col > main_col_offset;
    }
};

/// Literal copies per variable block in the default layout:
/// max(m, occurrences of x_v, occurrences of ~x_v).
int uniform_pairs(const ThreeCnf &phi, int var);

GceReduction reduce(const ThreeCnf &phi, const ReductionOptions &options = {});

class NotSatisfying : public std::runtime_error
{
public:
    explicit NotSatisfying(int clause);
    int clause() const noexcept { return clause_; }

private:
    int clause_;
};

class InvalidExtension : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

PartialColoring assignment_to_coloring(const GceReduction &red, const std::vector<bool> &assignment);
std::vector<bool> coloring_to_assignment(const GceReduction &red, const PartialColoring &coloring);

/// Cell roles as JSON: {"rows":..,"cols":..,"colors":..,"cells":[..]} with one
/// entry per non-border cell plus a summary of the border.
std::string roles_json(const GceReduction &red);

} // namespace gridcolor
