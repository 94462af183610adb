#pragma once

// Closed-form colorability tests used as fast paths before search.

#include <gridcolor/grid.hpp>

#include <string>
#include <vector>

namespace gridcolor {

/// C(k, 2).
constexpr long long pairs_of(long long k) noexcept
{
    return k * (k - 1) / 2;
}

/// (c+1 <= N and c*C(c+1,2) < M), or the same with N and M swapped.
/// True implies G(N,M) has no c-coloring.
bool pigeonhole_uncolorable(long long rows, long long cols, long long colors);

/// Some c' in [1, c-1] has N >= c+c' and M > (c/c')*C(c+c',2) (or transposed),
/// or N >= 2c and M > 2*C(2c,2). The fraction is compared exactly.
bool better_uncolorable(long long rows, long long cols, long long colors);

/// Smallest c' for which the refined bound fires on (rows, cols) as given
/// (no transposition), or 0 if none does.
long long better_refinement(long long rows, long long cols, long long colors);

/// For grids with min(N,M) <= c: partial coloring extends iff it is valid.
/// Throws std::domain_error when min(N,M) > c.
bool thin_grid_extendable(const PartialColoring &coloring);

/// Completion used by the thin-grid test: each blank cell takes the least
/// color unused in its column (or row, for wide thin grids). Requires a valid
/// partial coloring with min(N,M) <= c.
PartialColoring thin_grid_completion(const PartialColoring &coloring);

enum class VerdictKind
{
    Uncolorable,
    TriviallyExtendable,
    NeedsSearch
};

enum class BoundRule
{
    ThinGrid,       ///< min(N,M) <= c
    Pigeonhole,     ///< c+1 <= N, c*C(c+1,2) < M
    RefinedColumns, ///< N >= c+c', M > (c/c')*C(c+c',2)
    DoubledColumns  ///< N >= 2c, M > 2*C(2c,2)
};

std::string to_string(VerdictKind kind);
std::string to_string(BoundRule rule);

struct RegionVerdict
{
    VerdictKind kind = VerdictKind::NeedsSearch;
    /// Every rule whose hypothesis holds, in the order they were checked.
    std::vector<BoundRule> rules;
    /// c' of the first refined bound that fired, else 0.
    long long refinement = 0;
    std::string reason;

    bool fired(BoundRule rule) const;
};

/// Thin-grid test, then the uncolorability bounds, else NeedsSearch.
/// A thin grid whose partial coloring is already invalid is reported as
/// NeedsSearch with rule ThinGrid; the solver layer answers NO for it.
RegionVerdict classify(long long rows, long long cols, long long colors, const PartialColoring &coloring);

/// classify() on the blank grid.
RegionVerdict classify_blank(long long rows, long long cols, long long colors);

/// Largest max(N,M) a valid NeedsSearch verdict can have for c colors:
/// max(2*C(2c,2), c*C(c+1,2)).
long long search_region_limit(long long colors);

} // namespace gridcolor
