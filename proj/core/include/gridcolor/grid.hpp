#pragma once

// Grid data model: dimensions, partial colorings, shape families and the
// forbidden point sets they generate.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gridcolor {

/// Color index. Colors are 1..c; kBlank marks an uncolored cell.
using Color = int;
inline constexpr Color kBlank = 0;

/// A grid cell, 1-based: row in [1,n], col in [1,m].
struct Cell
{
    int row = 1;
    int col = 1;

    friend constexpr auto operator<=>(const Cell &, const Cell &) = default;
};

std::string to_string(Cell cell);

class GridDims
{
public:
    GridDims() = default;
    /// Throws std::invalid_argument unless rows, cols >= 1.
    GridDims(int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::size_t area() const noexcept { return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_); }

    bool contains(Cell cell) const noexcept
    {
        return cell.row >= 1 && cell.row <= rows_ && cell.col >= 1 && cell.col <= cols_;
    }

    /// Row-major 0-based offset of a cell.
    std::size_t index(Cell cell) const noexcept
    {
        return static_cast<std::size_t>(cell.row - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(cell.col - 1);
    }

    Cell cell_at(std::size_t index) const noexcept
    {
        return Cell{static_cast<int>(index / static_cast<std::size_t>(cols_)) + 1,
                    static_cast<int>(index % static_cast<std::size_t>(cols_)) + 1};
    }

    GridDims transposed() const { return GridDims{cols_, rows_}; }

    friend bool operator==(const GridDims &, const GridDims &) = default;

private:
    int rows_ = 1;
    int cols_ = 1;
};

/// A grid with some cells assigned colors in [1,c].
///
/// Well-formedness (cells in range, colors in [c]) is enforced on every
/// write. Absence of monochromatic forbidden sets is not an invariant of the
/// type; see validate().
class PartialColoring
{
public:
    PartialColoring(GridDims dims, int colors);

    const GridDims &dims() const noexcept { return dims_; }
    int rows() const noexcept { return dims_.rows(); }
    int cols() const noexcept { return dims_.cols(); }
    int colors() const noexcept { return colors_; }

    Color at(Cell cell) const { return cells_[checked_index(cell)]; }
    Color at(int row, int col) const { return at(Cell{row, col}); }
    bool is_blank(Cell cell) const { return at(cell) == kBlank; }

    /// Throws std::out_of_range for cells outside the grid or colors outside [0,c].
    void set(Cell cell, Color color);
    void clear(Cell cell) { set(cell, kBlank); }

    std::vector<Cell> blank_cells() const;
    std::size_t blank_count() const noexcept;
    bool is_total() const noexcept { return blank_count() == 0; }

    PartialColoring transposed() const;
    /// Same cells, different palette size. Throws if an existing color exceeds it.
    PartialColoring with_colors(int colors) const;

    std::span<const Color> raw() const noexcept { return cells_; }

    friend bool operator==(const PartialColoring &, const PartialColoring &) = default;

private:
    std::size_t checked_index(Cell cell) const;

    GridDims dims_;
    int colors_ = 1;
    std::vector<Color> cells_;
};

/// True iff `total` agrees with `partial` on every colored cell of `partial`.
bool agrees_with(const PartialColoring &total, const PartialColoring &partial);

struct LatticePoint
{
    long long x = 0;
    long long y = 0;

    friend constexpr auto operator<=>(const LatticePoint &, const LatticePoint &) = default;
};

enum class StretchMode
{
    Full, ///< independent row and column stretches
    Half  ///< one common stretch for both axes
};

/// Generator point set S plus stretch mode.
///
/// A generator point (x, y) maps to grid cell (row, col) = (s*x + a, t*y + b)
/// with t = s in Half mode. Only nonzero stretches whose images are lattice
/// points inside the grid are used.
class ShapeFamily
{
public:
    /// Throws std::invalid_argument if |S| < 2 or points repeat.
    ShapeFamily(std::vector<LatticePoint> generator, StretchMode mode);

    static ShapeFamily rectangle();
    static ShapeFamily square();

    const std::vector<LatticePoint> &generator() const noexcept { return generator_; }
    StretchMode mode() const noexcept { return mode_; }
    std::size_t size() const noexcept { return generator_.size(); }

    /// Full mode with four points {x0,x1} x {y0,y1}: the family is exactly the
    /// axis-parallel rectangles, which enables the implicit fast paths.
    bool is_rectangle() const noexcept { return rectangle_; }

    friend bool operator==(const ShapeFamily &a, const ShapeFamily &b)
    {
        return a.mode_ == b.mode_ && a.generator_ == b.generator_;
    }

private:
    std::vector<LatticePoint> generator_;
    StretchMode mode_;
    bool rectangle_ = false;
};

/// Sorted, pairwise distinct cells; cardinality equals the generator's.
using ForbiddenSet = std::vector<Cell>;

/// Every set of the family lying inside `dims`, deduplicated, in
/// lexicographic order of the sorted point lists.
std::vector<ForbiddenSet> enumerate_forbidden_sets(const GridDims &dims, const ShapeFamily &family);

struct Violation
{
    ForbiddenSet cells;
    Color color = kBlank;

    friend bool operator==(const Violation &, const Violation &) = default;
};

/// First monochromatic, fully colored forbidden set in enumeration order, if any.
std::optional<Violation> validate(const PartialColoring &coloring, const ShapeFamily &family);

/// Rectangle-only validation that never materialises the rectangle list;
/// returns the same witness as validate() for the rectangle family.
std::optional<Violation> validate_rectangles(const PartialColoring &coloring);

} // namespace gridcolor
