#include <gridcolor/conflict.hpp>

#include <algorithm>
#include <stdexcept>

namespace gridcolor {

ConflictIndex::ConflictIndex(const PartialColoring &initial, const ShapeFamily &family) :
    coloring_(initial),
    family_(family),
    rectangle_(family.is_rectangle())
{
    if (rectangle_) {
        row_base_.resize(static_cast<std::size_t>(initial.rows()) + 1);
        col_base_.resize(static_cast<std::size_t>(initial.cols()) + 1);
        row_extra_.resize(row_base_.size());
        col_extra_.resize(col_base_.size());
        for (int r = 1; r <= initial.rows(); ++r)
            for (int c = 1; c <= initial.cols(); ++c)
                if (Color k = initial.at(r, c); k != kBlank) {
                    row_base_[static_cast<std::size_t>(r)].emplace_back(k, c);
                    col_base_[static_cast<std::size_t>(c)].emplace_back(k, r);
                }
        for (auto &v : row_base_)
            std::sort(v.begin(), v.end());
        for (auto &v : col_base_)
            std::sort(v.begin(), v.end());
    }
    else {
        sets_ = enumerate_forbidden_sets(initial.dims(), family);
        through_.resize(initial.dims().area());
        for (std::size_t i = 0; i < sets_.size(); ++i)
            for (Cell p : sets_[i])
                through_[initial.dims().index(p)].push_back(i);
    }
}

void ConflictIndex::assign(Cell cell, Color color)
{
    if (! coloring_.is_blank(cell))
        throw std::logic_error("assign on colored cell " + to_string(cell));
    if (color == kBlank)
        throw std::invalid_argument("assign requires a color");
    coloring_.set(cell, color);
    if (rectangle_) {
        row_extra_[static_cast<std::size_t>(cell.row)].emplace_back(color, cell.col);
        col_extra_[static_cast<std::size_t>(cell.col)].emplace_back(color, cell.row);
    }
}

void ConflictIndex::clear(Cell cell)
{
    if (rectangle_) {
        const Color color = coloring_.at(cell);
        auto drop = [](std::vector<Entry> &v, Entry e) {
            auto it = std::find(v.begin(), v.end(), e);
            if (it == v.end())
                throw std::logic_error("clear on a cell that was not assigned");
            *it = v.back();
            v.pop_back();
        };
        drop(row_extra_[static_cast<std::size_t>(cell.row)], Entry{color, cell.col});
        drop(col_extra_[static_cast<std::size_t>(cell.col)], Entry{color, cell.row});
    }
    coloring_.clear(cell);
}

void ConflictIndex::collect(const std::vector<Entry> &base, const std::vector<Entry> &extra, Color color, int skip, std::vector<int> &out) const
{
    auto lo = std::lower_bound(base.begin(), base.end(), Entry{color, 0});
    for (auto it = lo; it != base.end() && it->first == color; ++it)
        if (it->second != skip)
            out.push_back(it->second);
    for (const auto &e : extra)
        if (e.first == color && e.second != skip)
            out.push_back(e.second);
}

bool ConflictIndex::completes(Cell cell, Color color) const
{
    if (rectangle_) {
        thread_local std::vector<int> cols, rows;
        cols.clear();
        rows.clear();
        collect(row_base_[static_cast<std::size_t>(cell.row)], row_extra_[static_cast<std::size_t>(cell.row)], color, cell.col, cols);
        if (cols.empty())
            return false;
        collect(col_base_[static_cast<std::size_t>(cell.col)], col_extra_[static_cast<std::size_t>(cell.col)], color, cell.row, rows);
        for (int r : rows)
            for (int c : cols)
                if (coloring_.at(r, c) == color)
                    return true;
        return false;
    }

    for (std::size_t idx : through_[coloring_.dims().index(cell)]) {
        const auto &set = sets_[idx];
        bool all = std::all_of(set.begin(), set.end(), [&](Cell p) { return p == cell || coloring_.at(p) == color; });
        if (all)
            return true;
    }
    return false;
}

void ConflictIndex::for_each_set_through(Cell cell, const std::function<void(std::span<const Cell>)> &visit) const
{
    if (rectangle_) {
        Cell corners[4];
        for (int r = 1; r <= coloring_.rows(); ++r) {
            if (r == cell.row)
                continue;
            for (int c = 1; c <= coloring_.cols(); ++c) {
                if (c == cell.col)
                    continue;
                const int r1 = std::min(r, cell.row), r2 = std::max(r, cell.row);
                const int c1 = std::min(c, cell.col), c2 = std::max(c, cell.col);
                corners[0] = Cell{r1, c1};
                corners[1] = Cell{r1, c2};
                corners[2] = Cell{r2, c1};
                corners[3] = Cell{r2, c2};
                visit(std::span<const Cell>(corners, 4));
            }
        }
        return;
    }
    for (std::size_t idx : through_[coloring_.dims().index(cell)])
        visit(sets_[idx]);
}

} // namespace gridcolor
