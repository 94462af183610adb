#pragma once

// CNF and 0-1 integer program encodings of grid colorability.

#include <gridcolor/grid.hpp>

#include <iosfwd>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridcolor {

/// DIMACS-style literal: +v or -v for variable v >= 1.
using Literal = int;
using Clause = std::vector<Literal>;

struct CnfInstance
{
    int var_count = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const CnfInstance &, const CnfInstance &) = default;
};

/// Bijection (i, j, k) <-> ((i-1)*m + (j-1))*c + k.
class GridVariables
{
public:
    struct Triple
    {
        int row, col, color;
        friend bool operator==(const Triple &, const Triple &) = default;
    };

    GridVariables(int rows, int cols, int colors);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int colors() const noexcept { return colors_; }
    int count() const noexcept { return rows_ * cols_ * colors_; }

    int id(int row, int col, int color) const;
    int id(Cell cell, int color) const { return id(cell.row, cell.col, color); }
    Triple triple(int id) const;

private:
    int rows_, cols_, colors_;
};

struct GridCnf
{
    GridVariables vars;
    CnfInstance cnf;
    /// Clauses [0, color_clauses) say "cell has some color", in row-major
    /// cell order; the rest forbid one forbidden set in one color each.
    std::size_t color_clauses = 0;
    /// For each forbidden-set clause, the set it came from.
    std::vector<ForbiddenSet> sets;

    bool is_color_clause(std::size_t clause) const noexcept { return clause < color_clauses; }
};

/// At-least-one-color clauses for every cell, then for every forbidden set
/// and every color k one clause of negative literals. No at-most-one clauses.
GridCnf build_cnf(int rows, int cols, int colors, const ShapeFamily &family = ShapeFamily::rectangle());

/// Truth values for variables 1..var_count.
class Model
{
public:
    explicit Model(int var_count = 0) : values_(static_cast<std::size_t>(var_count) + 1, false) {}

    int var_count() const noexcept { return static_cast<int>(values_.size()) - 1; }
    bool value(int var) const { return values_.at(static_cast<std::size_t>(var)); }
    void set(int var, bool v) { values_.at(static_cast<std::size_t>(var)) = v; }
    bool satisfies(Literal lit) const { return lit > 0 ? value(lit) : ! value(-lit); }

    friend bool operator==(const Model &, const Model &) = default;

private:
    std::vector<bool> values_;
};

bool satisfies(const CnfInstance &cnf, const Model &model);

class NoColor : public std::runtime_error
{
public:
    explicit NoColor(Cell cell);
    Cell cell() const noexcept { return cell_; }

private:
    Cell cell_;
};

/// Each cell takes the least k with x_{ijk} true. Throws NoColor.
PartialColoring decode_model(const Model &model, int rows, int cols, int colors);

/// x_{ijk} = [coloring(i,j) = k]. Requires a total coloring.
Model indicator_model(const PartialColoring &coloring);

/// sum coef * x_var <= bound.
struct LinearRow
{
    std::vector<std::pair<int, long long>> terms; ///< sorted by variable, nonzero coefficients
    long long bound = 0;

    friend bool operator==(const LinearRow &, const LinearRow &) = default;
};

/// Variables 1..V are the CNF variables, V+1..2V their complements.
struct IlpInstance
{
    int base_vars = 0;
    std::vector<LinearRow> rows;
    std::size_t pairing_rows = 0; ///< the first rows, two per base variable

    int var_count() const noexcept { return 2 * base_vars; }
    int complement(int var) const noexcept { return var > base_vars ? var - base_vars : var + base_vars; }
};

/// Two rows per variable (x + ~x <= 1, -x - ~x <= -1), then one row per
/// clause (-sum of literals <= -1).
IlpInstance cnf_to_ilp(const CnfInstance &cnf);

/// Builds a row from (var, coef) pairs, merging repeats and dropping zeros.
LinearRow make_row(std::vector<std::pair<int, long long>> terms, long long bound);

/// values[v] in {0,1} for v in 1..2V (index 0 unused).
bool row_holds(const LinearRow &row, const std::vector<int> &values);

/// 0-1 vector of the ILP induced by a CNF model (complements are negations).
std::vector<int> ilp_point(const IlpInstance &ilp, const Model &model);

/// `x3` or `~x3`.
std::string variable_name(const IlpInstance &ilp, int var);
/// `1*x1 1*~x1 <= 1`; an empty left side prints as `0`.
std::string format_row(const IlpInstance &ilp, const LinearRow &row);
/// Inverse of format_row. Throws std::invalid_argument.
LinearRow parse_row(const std::string &text, int base_vars);

/// `# ilp vars=V rows=R pairing=P` then one format_row line per row.
void write_ilp(std::ostream &out, const IlpInstance &ilp);
/// Inverse of write_ilp. Lines starting with `c ` are comments. Throws ParseError.
IlpInstance read_ilp(std::istream &in);

/// (c+1, c*C(c,2)+1), the family used for the cutting-planes discussion.
std::pair<int, int> gcc_instance(int colors);
/// (c+1, c*C(c+1,2)+1), just past the pigeonhole bound.
std::pair<int, int> gcc_variant_instance(int colors);

} // namespace gridcolor
