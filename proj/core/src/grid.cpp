#include <gridcolor/grid.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gridcolor {

std::string to_string(Cell cell)
{
    return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

GridDims::GridDims(int rows, int cols) :
    rows_(rows),
    cols_(cols)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid dimensions must be positive, got " + std::to_string(rows) + "x" + std::to_string(cols));
}

PartialColoring::PartialColoring(GridDims dims, int colors) :
    dims_(dims),
    colors_(colors),
    cells_(dims.area(), kBlank)
{
    if (colors < 1)
        throw std::invalid_argument("color count must be positive");
}

std::size_t PartialColoring::checked_index(Cell cell) const
{
    if (! dims_.contains(cell))
        throw std::out_of_range("cell " + to_string(cell) + " outside " + std::to_string(rows()) + "x" + std::to_string(cols()) + " grid");
    return dims_.index(cell);
}

void PartialColoring::set(Cell cell, Color color)
{
    if (color < kBlank || color > colors_)
        throw std::out_of_range("color " + std::to_string(color) + " outside [1," + std::to_string(colors_) + "]");
    cells_[checked_index(cell)] = color;
}

std::vector<Cell> PartialColoring::blank_cells() const
{
    std::vector<Cell> result;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i] == kBlank)
            result.push_back(dims_.cell_at(i));
    return result;
}

std::size_t PartialColoring::blank_count() const noexcept
{
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), kBlank));
}

PartialColoring PartialColoring::transposed() const
{
    PartialColoring result(dims_.transposed(), colors_);
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= cols(); ++c)
            result.cells_[result.dims_.index(Cell{c, r})] = at(r, c);
    return result;
}

PartialColoring PartialColoring::with_colors(int colors) const
{
    PartialColoring result(dims_, colors);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] > colors)
            throw std::out_of_range("existing color " + std::to_string(cells_[i]) + " exceeds new palette");
        result.cells_[i] = cells_[i];
    }
    return result;
}

bool agrees_with(const PartialColoring &total, const PartialColoring &partial)
{
    if (total.dims() != partial.dims())
        return false;
    auto t = total.raw();
    auto p = partial.raw();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != kBlank && p[i] != t[i])
            return false;
    return true;
}

namespace {

bool detect_rectangle(const std::vector<LatticePoint> &points)
{
    if (points.size() != 4)
        return false;
    std::set<long long> xs, ys;
    for (const auto &p : points) {
        xs.insert(p.x);
        ys.insert(p.y);
    }
    if (xs.size() != 2 || ys.size() != 2)
        return false;
    std::set<LatticePoint> corners(points.begin(), points.end());
    for (long long x : xs)
        for (long long y : ys)
            if (! corners.contains(LatticePoint{x, y}))
                return false;
    return true;
}

long long gcd_of_offsets(const std::vector<long long> &values)
{
    long long g = 0;
    for (long long v : values)
        g = std::gcd(g, v - values.front());
    return g < 0 ? -g : g;
}

// All images of one coordinate axis under s*v + a with s = k/g (k != 0) that
// land inside [1, extent]. With g == 0 (a single distinct value) the stretch
// is irrelevant and only the translation varies.
std::vector<std::vector<int>> axis_images(const std::vector<long long> &values, int extent)
{
    std::vector<std::vector<int>> result;
    const long long lo = *std::min_element(values.begin(), values.end());
    const long long g = gcd_of_offsets(values);
    if (g == 0) {
        for (int u = 1; u <= extent; ++u)
            result.emplace_back(values.size(), u);
        return result;
    }
    const long long span = *std::max_element(values.begin(), values.end()) - lo;
    const long long max_k = (static_cast<long long>(extent) - 1) * g / span;
    for (long long k = -max_k; k <= max_k; ++k) {
        if (k == 0)
            continue;
        std::vector<long long> offsets;
        for (long long v : values)
            offsets.push_back(k * (v - lo) / g);
        const long long omin = *std::min_element(offsets.begin(), offsets.end());
        const long long omax = *std::max_element(offsets.begin(), offsets.end());
        for (long long t = 1 - omin; t + omax <= extent; ++t) {
            std::vector<int> image;
            for (long long o : offsets)
                image.push_back(static_cast<int>(t + o));
            result.push_back(std::move(image));
        }
    }
    return result;
}

void insert_image(std::set<ForbiddenSet> &out, const std::vector<int> &rows, const std::vector<int> &cols)
{
    ForbiddenSet set;
    set.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        set.push_back(Cell{rows[i], cols[i]});
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) == set.end())
        out.insert(std::move(set));
}

} // namespace

ShapeFamily::ShapeFamily(std::vector<LatticePoint> generator, StretchMode mode) :
    generator_(std::move(generator)),
    mode_(mode)
{
    if (generator_.size() < 2)
        throw std::invalid_argument("shape generator needs at least two points");
    auto sorted = generator_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("shape generator points must be distinct");
    rectangle_ = mode_ == StretchMode::Full && detect_rectangle(generator_);
}

ShapeFamily ShapeFamily::rectangle()
{
    return ShapeFamily({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, StretchMode::Full);
}

ShapeFamily ShapeFamily::square()
{
    return ShapeFamily({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, StretchMode::Half);
}

std::vector<ForbiddenSet> enumerate_forbidden_sets(const GridDims &dims, const ShapeFamily &family)
{
    std::vector<long long> xs, ys;
    for (const auto &p : family.generator()) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }

    std::set<ForbiddenSet> found;
    if (family.mode() == StretchMode::Full) {
        auto row_images = axis_images(xs, dims.rows());
        auto col_images = axis_images(ys, dims.cols());
        for (const auto &r : row_images)
            for (const auto &c : col_images)
                insert_image(found, r, c);
    }
    else {
        std::vector<long long> both;
        long long g = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            g = std::gcd(g, xs[i] - xs[0]);
            g = std::gcd(g, ys[i] - ys[0]);
        }
        g = g < 0 ? -g : g;
        const long long xlo = *std::min_element(xs.begin(), xs.end());
        const long long ylo = *std::min_element(ys.begin(), ys.end());
        const long long xspan = *std::max_element(xs.begin(), xs.end()) - xlo;
        const long long yspan = *std::max_element(ys.begin(), ys.end()) - ylo;
        long long max_k = 0;
        {
            // |k| * span / g <= extent - 1 on each axis that actually spans.
            long long bound = -1;
            if (xspan > 0)
                bound = (dims.rows() - 1LL) * g / xspan;
            if (yspan > 0) {
                long long b = (dims.cols() - 1LL) * g / yspan;
                bound = bound < 0 ? b : std::min(bound, b);
            }
            max_k = std::max(bound, 0LL);
        }
        for (long long k = -max_k; k <= max_k; ++k) {
            if (k == 0)
                continue;
            std::vector<long long> dx, dy;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                dx.push_back(k * (xs[i] - xlo) / g);
                dy.push_back(k * (ys[i] - ylo) / g);
            }
            const auto [dxmin, dxmax] = std::minmax_element(dx.begin(), dx.end());
            const auto [dymin, dymax] = std::minmax_element(dy.begin(), dy.end());
            for (long long a = 1 - *dxmin; a + *dxmax <= dims.rows(); ++a)
                for (long long b = 1 - *dymin; b + *dymax <= dims.cols(); ++b) {
                    std::vector<int> rows, cols;
                    for (std::size_t i = 0; i < dx.size(); ++i) {
                        rows.push_back(static_cast<int>(a + dx[i]));
                        cols.push_back(static_cast<int>(b + dy[i]));
                    }
                    insert_image(found, rows, cols);
                }
        }
    }
    return {found.begin(), found.end()};
}

std::optional<Violation> validate(const PartialColoring &coloring, const ShapeFamily &family)
{
    if (family.is_rectangle())
        return validate_rectangles(coloring);

    for (auto &set : enumerate_forbidden_sets(coloring.dims(), family)) {
        Color first = coloring.at(set.front());
        if (first == kBlank)
            continue;
        bool mono = std::all_of(set.begin(), set.end(), [&](Cell p) { return coloring.at(p) == first; });
        if (mono)
            return Violation{std::move(set), first};
    }
    return std::nullopt;
}

std::optional<Violation> validate_rectangles(const PartialColoring &coloring)
{
    // Group colored cells by (color, row); a monochromatic rectangle needs two
    // rows that each hold at least two cells of that color in common columns.
    struct Entry
    {
        Color color;
        int row;
        int col;
    };
    std::vector<Entry> entries;
    entries.reserve(coloring.dims().area() - coloring.blank_count());
    for (int r = 1; r <= coloring.rows(); ++r)
        for (int c = 1; c <= coloring.cols(); ++c)
            if (Color k = coloring.at(r, c); k != kBlank)
                entries.push_back(Entry{k, r, c});
    std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) {
        return std::tie(a.color, a.row, a.col) < std::tie(b.color, b.row, b.col);
    });

    // Lexicographic order of sorted corner lists {(a,b),(a,b'),(a',b),(a',b')}
    // is the order of the key (a, b, b', a').
    std::optional<std::tuple<int, int, int, int, Color>> best;

    std::size_t i = 0;
    while (i < entries.size()) {
        const Color k = entries[i].color;
        std::size_t color_end = i;
        while (color_end < entries.size() && entries[color_end].color == k)
            ++color_end;

        struct RowSpan
        {
            int row;
            std::size_t begin, end;
        };
        std::vector<RowSpan> heavy;
        for (std::size_t j = i; j < color_end;) {
            std::size_t e = j;
            while (e < color_end && entries[e].row == entries[j].row)
                ++e;
            if (e - j >= 2)
                heavy.push_back(RowSpan{entries[j].row, j, e});
            j = e;
        }

        for (std::size_t a = 0; a < heavy.size(); ++a) {
            if (best && std::get<0>(*best) < heavy[a].row)
                break;
            for (std::size_t b = a + 1; b < heavy.size(); ++b) {
                std::size_t p = heavy[a].begin, q = heavy[b].begin;
                int first = 0, second = 0;
                while (p < heavy[a].end && q < heavy[b].end) {
                    if (entries[p].col < entries[q].col)
                        ++p;
                    else if (entries[p].col > entries[q].col)
                        ++q;
                    else {
                        if (first == 0)
                            first = entries[p].col;
                        else {
                            second = entries[p].col;
                            break;
                        }
                        ++p;
                        ++q;
                    }
                }
                if (second == 0)
                    continue;
                auto key = std::make_tuple(heavy[a].row, first, second, heavy[b].row, k);
                if (! best || key < *best)
                    best = key;
            }
        }
        i = color_end;
    }

    if (! best)
        return std::nullopt;
    auto [r1, c1, c2, r2, k] = *best;
    return Violation{{Cell{r1, c1}, Cell{r1, c2}, Cell{r2, c1}, Cell{r2, c2}}, k};
}

} // namespace gridcolor
