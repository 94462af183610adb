#pragma once

#include <gridcolor/grid.hpp>

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace gridcolor {

/// A working coloring that answers "would coloring p with k complete a
/// monochromatic forbidden set?" without scanning the whole family.
///
/// Rectangle families are handled implicitly through per-row and per-column
/// color indexes, so grids with hundreds of rows and colors stay cheap. Other
/// families use an explicit per-cell list of forbidden sets.
class ConflictIndex
{
public:
    ConflictIndex(const PartialColoring &initial, const ShapeFamily &family);

    const PartialColoring &coloring() const noexcept { return coloring_; }
    const ShapeFamily &family() const noexcept { return family_; }

    /// Color a currently blank cell.
    void assign(Cell cell, Color color);
    /// Blank a cell previously colored through assign().
    void clear(Cell cell);

    /// True iff coloring the blank cell `cell` with `color` would make some
    /// forbidden set through `cell` fully colored `color`.
    bool completes(Cell cell, Color color) const;

    /// Visits every forbidden set containing `cell` exactly once.
    void for_each_set_through(Cell cell, const std::function<void(std::span<const Cell>)> &visit) const;

private:
    using Entry = std::pair<Color, int>; // (color, other coordinate)

    void collect(const std::vector<Entry> &base, const std::vector<Entry> &extra, Color color, int skip, std::vector<int> &out) const;

    PartialColoring coloring_;
    ShapeFamily family_;
    bool rectangle_;

    // Rectangle mode: cells colored at construction, sorted by (color, coord).
    std::vector<std::vector<Entry>> row_base_, col_base_;
    // Cells colored through assign(); small and unsorted.
    std::vector<std::vector<Entry>> row_extra_, col_extra_;

    // Explicit mode.
    std::vector<ForbiddenSet> sets_;
    std::vector<std::vector<std::size_t>> through_;
};

} // namespace gridcolor
