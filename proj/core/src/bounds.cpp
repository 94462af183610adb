#include <gridcolor/bounds.hpp>

#include <algorithm>
#include <stdexcept>

namespace gridcolor {

namespace {

__extension__ typedef __int128 wide;

wide pairs_wide(long long k)
{
    return static_cast<wide>(k) * (k - 1) / 2;
}

bool pigeonhole_one_way(long long rows, long long cols, long long c)
{
    return c + 1 <= rows && static_cast<wide>(c) * pairs_wide(c + 1) < cols;
}

bool doubled_one_way(long long rows, long long cols, long long c)
{
    return rows >= 2 * c && cols > 2 * pairs_wide(2 * c);
}

} // namespace

bool pigeonhole_uncolorable(long long rows, long long cols, long long colors)
{
    return pigeonhole_one_way(rows, cols, colors) || pigeonhole_one_way(cols, rows, colors);
}

long long better_refinement(long long rows, long long cols, long long c)
{
    for (long long cp = 1; cp <= c - 1 && rows >= c + cp; ++cp) {
        // M > (c/c') * C(c+c', 2)  <=>  M * c' > c * C(c+c', 2)
        if (static_cast<wide>(cols) * cp > static_cast<wide>(c) * pairs_wide(c + cp))
            return cp;
    }
    return 0;
}

bool better_uncolorable(long long rows, long long cols, long long colors)
{
    return better_refinement(rows, cols, colors) != 0 || better_refinement(cols, rows, colors) != 0
        || doubled_one_way(rows, cols, colors) || doubled_one_way(cols, rows, colors);
}

bool thin_grid_extendable(const PartialColoring &coloring)
{
    if (std::min(coloring.rows(), coloring.cols()) > coloring.colors())
        throw std::domain_error("thin-grid test needs min(N,M) <= c");
    return ! validate_rectangles(coloring).has_value();
}

PartialColoring thin_grid_completion(const PartialColoring &coloring)
{
    if (std::min(coloring.rows(), coloring.cols()) > coloring.colors())
        throw std::domain_error("thin-grid completion needs min(N,M) <= c");
    if (coloring.rows() > coloring.colors())
        return thin_grid_completion(coloring.transposed()).transposed();

    // Every column gets pairwise distinct colors, so a monochromatic
    // rectangle could only use pre-colored cells.
    PartialColoring result = coloring;
    std::vector<char> used(static_cast<std::size_t>(coloring.colors()) + 1);
    for (int c = 1; c <= coloring.cols(); ++c) {
        std::fill(used.begin(), used.end(), 0);
        for (int r = 1; r <= coloring.rows(); ++r)
            used[static_cast<std::size_t>(coloring.at(r, c))] = 1;
        Color next = 1;
        for (int r = 1; r <= coloring.rows(); ++r) {
            if (! coloring.is_blank(Cell{r, c}))
                continue;
            while (used[static_cast<std::size_t>(next)])
                ++next;
            used[static_cast<std::size_t>(next)] = 1;
            result.set(Cell{r, c}, next);
        }
    }
    return result;
}

std::string to_string(VerdictKind kind)
{
    switch (kind) {
    case VerdictKind::Uncolorable: return "UNCOLORABLE";
    case VerdictKind::TriviallyExtendable: return "TRIVIALLY_EXTENDABLE";
    case VerdictKind::NeedsSearch: return "NEEDS_SEARCH";
    }
    return "?";
}

std::string to_string(BoundRule rule)
{
    switch (rule) {
    case BoundRule::ThinGrid: return "thin-grid";
    case BoundRule::Pigeonhole: return "pigeonhole";
    case BoundRule::RefinedColumns: return "refined-columns";
    case BoundRule::DoubledColumns: return "doubled-columns";
    }
    return "?";
}

bool RegionVerdict::fired(BoundRule rule) const
{
    return std::find(rules.begin(), rules.end(), rule) != rules.end();
}

namespace {

// Everything after the thin-grid case depends only on (N, M, c).
RegionVerdict closed_form_verdict(long long rows, long long cols, long long c)
{
    RegionVerdict verdict;
    if (pigeonhole_uncolorable(rows, cols, c)) {
        verdict.rules.push_back(BoundRule::Pigeonhole);
        verdict.kind = VerdictKind::Uncolorable;
        verdict.reason = "c+1 <= N and c*C(c+1,2) < M (column pigeonhole over row pairs and colors)";
    }
    long long cp = better_refinement(rows, cols, c);
    if (cp == 0)
        cp = better_refinement(cols, rows, c);
    if (cp != 0) {
        verdict.rules.push_back(BoundRule::RefinedColumns);
        verdict.refinement = cp;
        if (verdict.kind != VerdictKind::Uncolorable) {
            verdict.kind = VerdictKind::Uncolorable;
            verdict.reason = "N >= c+c' and M > (c/c')*C(c+c',2) with c'=" + std::to_string(cp);
        }
    }
    if (doubled_one_way(rows, cols, c) || doubled_one_way(cols, rows, c)) {
        verdict.rules.push_back(BoundRule::DoubledColumns);
        if (verdict.kind != VerdictKind::Uncolorable) {
            verdict.kind = VerdictKind::Uncolorable;
            verdict.reason = "N >= 2c and M > 2*C(2c,2)";
        }
    }
    if (verdict.kind == VerdictKind::NeedsSearch)
        verdict.reason = "no closed-form bound applies";
    return verdict;
}

RegionVerdict thin_verdict(bool extendable)
{
    RegionVerdict verdict;
    verdict.rules.push_back(BoundRule::ThinGrid);
    if (extendable) {
        verdict.kind = VerdictKind::TriviallyExtendable;
        verdict.reason = "min(N,M) <= c: every column can take distinct fresh colors";
    }
    else {
        verdict.reason = "min(N,M) <= c but the partial coloring already has a monochromatic rectangle";
    }
    return verdict;
}

} // namespace

RegionVerdict classify(long long rows, long long cols, long long c, const PartialColoring &coloring)
{
    if (coloring.rows() != rows || coloring.cols() != cols)
        throw std::invalid_argument("classify: partial coloring dimensions do not match");
    if (std::min(rows, cols) <= c)
        return thin_verdict(thin_grid_extendable(coloring.with_colors(static_cast<int>(std::max<long long>(c, coloring.colors())))));
    return closed_form_verdict(rows, cols, c);
}

RegionVerdict classify_blank(long long rows, long long cols, long long colors)
{
    if (rows < 1 || cols < 1 || colors < 1)
        throw std::invalid_argument("N, M and c must be positive");
    if (std::min(rows, cols) <= colors)
        return thin_verdict(true);
    return closed_form_verdict(rows, cols, colors);
}

long long search_region_limit(long long colors)
{
    return std::max(2 * pairs_of(2 * colors), colors * pairs_of(colors + 1));
}

} // namespace gridcolor
