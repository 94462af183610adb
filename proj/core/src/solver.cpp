#include <gridcolor/solver.hpp>

#include <gridcolor/bounds.hpp>
#include <gridcolor/conflict.hpp>

#include <algorithm>
#include <bit>
#include <chrono>

namespace gridcolor {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

ExtensionResult no_result(std::string engine, bool searched = false)
{
    ExtensionResult result;
    result.stats.engine = std::move(engine);
    result.stats.searched = searched;
    return result;
}

// For each color k, the blank-cell masks T such that coloring T with k
// completes some forbidden set (before superset closure).
struct BadMasks
{
    std::vector<std::vector<std::uint64_t>> by_color; // index 1..c
    std::vector<std::uint64_t> any_color;             // sets made only of blanks
};

BadMasks collect_bad_masks(const PartialColoring &coloring, const ShapeFamily &family, const std::vector<Cell> &blanks)
{
    BadMasks out;
    out.by_color.resize(static_cast<std::size_t>(coloring.colors()) + 1);
    std::vector<int> bit_of(coloring.dims().area(), -1);
    for (std::size_t j = 0; j < blanks.size(); ++j)
        bit_of[coloring.dims().index(blanks[j])] = static_cast<int>(j);

    ConflictIndex index(coloring, family);
    for (std::size_t j = 0; j < blanks.size(); ++j) {
        index.for_each_set_through(blanks[j], [&](std::span<const Cell> set) {
            std::uint64_t mask = 0;
            Color fixed = kBlank;
            for (Cell p : set) {
                const int bit = bit_of[coloring.dims().index(p)];
                if (bit >= 0) {
                    // visit each set once, from its lowest blank
                    if (static_cast<std::size_t>(bit) < j)
                        return;
                    mask |= std::uint64_t{1} << bit;
                    continue;
                }
                const Color k = coloring.at(p);
                if (fixed == kBlank)
                    fixed = k;
                else if (fixed != k)
                    return;
            }
            if (fixed == kBlank)
                out.any_color.push_back(mask);
            else
                out.by_color[static_cast<std::size_t>(fixed)].push_back(mask);
        });
    }
    return out;
}

// bad[T] = 1 iff coloring exactly T with color k completes a forbidden set.
std::vector<std::uint8_t> bad_table(const BadMasks &masks, int k, std::size_t u)
{
    std::vector<std::uint8_t> bad(std::size_t{1} << u, 0);
    for (auto m : masks.any_color)
        bad[m] = 1;
    for (auto m : masks.by_color[static_cast<std::size_t>(k)])
        bad[m] = 1;
    for (std::size_t b = 0; b < u; ++b) {
        const std::uint64_t bit = std::uint64_t{1} << b;
        for (std::uint64_t m = 0; m < bad.size(); ++m)
            if (m & bit)
                bad[m] |= bad[m ^ bit];
    }
    return bad;
}

} // namespace

std::string to_string(Decision decision)
{
    return decision == Decision::Yes ? "YES" : "NO";
}

CapExceeded::CapExceeded(std::size_t blanks, std::size_t cap) :
    std::runtime_error("subset DP needs " + std::to_string(blanks) + " blank cells <= cap " + std::to_string(cap)),
    blanks_(blanks)
{
}

SubsetDpTable::SubsetDpTable(std::size_t blanks, int colors) :
    blanks_(blanks),
    colors_(colors),
    layers_(static_cast<std::size_t>(colors) + 1, std::vector<std::uint64_t>(((std::size_t{1} << blanks) + 63) / 64, 0))
{
}

bool SubsetDpTable::at(std::uint64_t mask, int i) const
{
    return (layers_.at(static_cast<std::size_t>(i))[mask >> 6] >> (mask & 63)) & 1;
}

void SubsetDpTable::set(std::uint64_t mask, int i)
{
    layers_.at(static_cast<std::size_t>(i))[mask >> 6] |= std::uint64_t{1} << (mask & 63);
}

SubsetDp build_subset_dp(const PartialColoring &coloring, const ShapeFamily &family, const DpOptions &options)
{
    auto blanks = coloring.blank_cells();
    const std::size_t u = blanks.size();
    if (u > options.max_blanks || u > 40)
        throw CapExceeded(u, std::min<std::size_t>(options.max_blanks, 40));

    SubsetDp dp{blanks, SubsetDpTable(u, coloring.colors())};
    const BadMasks masks = collect_bad_masks(coloring, family, blanks);
    const std::uint64_t full = (std::uint64_t{1} << u);

    dp.table.set(0, 0);
    for (int i = 1; i <= coloring.colors(); ++i) {
        const auto bad = bad_table(masks, i, u);
        for (std::uint64_t s = 0; s < full; ++s) {
            if (dp.table.at(s, i - 1)) {
                dp.table.set(s, i);
                continue;
            }
            for (std::uint64_t t = (0 - s) & s; t != 0; t = (t - s) & s) {
                if (! bad[t] && dp.table.at(s ^ t, i - 1)) {
                    dp.table.set(s, i);
                    break;
                }
            }
        }
    }
    return dp;
}

ExtensionResult extend_subset_dp(const PartialColoring &coloring, const ShapeFamily &family, const DpOptions &options)
{
    const auto start = Clock::now();
    if (validate(coloring, family)) {
        auto r = no_result("dp");
        r.stats.wall_ms = elapsed_ms(start);
        return r;
    }

    SubsetDp dp = build_subset_dp(coloring, family, options);
    const std::size_t u = dp.blanks.size();
    const int c = coloring.colors();
    const std::uint64_t all = (std::uint64_t{1} << u) - 1;

    ExtensionResult result;
    result.stats.engine = "dp";
    result.stats.searched = true;
    result.stats.table_entries = static_cast<std::uint64_t>(c + 1) << u;
    if (! dp.table.at(all, c)) {
        result.stats.wall_ms = elapsed_ms(start);
        return result;
    }

    const BadMasks masks = collect_bad_masks(coloring, family, dp.blanks);
    PartialColoring witness = coloring;
    std::uint64_t s = all;
    for (int i = c; i >= 1 && s != 0; --i) {
        if (dp.table.at(s, i - 1))
            continue;
        const auto bad = bad_table(masks, i, u);
        for (std::uint64_t t = (0 - s) & s; t != 0; t = (t - s) & s) {
            ++result.stats.nodes;
            if (! bad[t] && dp.table.at(s ^ t, i - 1)) {
                for (std::uint64_t rest = t; rest != 0; rest &= rest - 1)
                    witness.set(dp.blanks[static_cast<std::size_t>(std::countr_zero(rest))], i);
                s ^= t;
                break;
            }
        }
    }
    result.decision = Decision::Yes;
    result.witness = std::move(witness);
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

namespace {

class Backtracker
{
public:
    Backtracker(const PartialColoring &coloring, const ShapeFamily &family) :
        index_(coloring, family),
        blanks_(coloring.blank_cells()),
        done_(blanks_.size(), 0),
        colors_(coloring.colors())
    {
    }

    bool run() { return search(blanks_.size()); }
    std::uint64_t nodes() const noexcept { return nodes_; }
    const PartialColoring &coloring() const noexcept { return index_.coloring(); }

private:
    int domain_size(Cell cell, int limit) const
    {
        int count = 0;
        for (Color k = 1; k <= colors_ && count < limit; ++k)
            if (! index_.completes(cell, k))
                ++count;
        return count;
    }

    bool search(std::size_t remaining)
    {
        if (remaining == 0)
            return true;
        ++nodes_;

        std::size_t pick = blanks_.size();
        int best = colors_ + 1;
        for (std::size_t j = 0; j < blanks_.size() && best > 0; ++j) {
            if (done_[j])
                continue;
            const int d = domain_size(blanks_[j], best);
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        if (best == 0)
            return false;

        const Cell cell = blanks_[pick];
        done_[pick] = 1;
        for (Color k = 1; k <= colors_; ++k) {
            if (index_.completes(cell, k))
                continue;
            index_.assign(cell, k);
            if (search(remaining - 1))
                return true;
            index_.clear(cell);
        }
        done_[pick] = 0;
        return false;
    }

    ConflictIndex index_;
    std::vector<Cell> blanks_;
    std::vector<char> done_;
    int colors_;
    std::uint64_t nodes_ = 0;
};

} // namespace

ExtensionResult extend_backtrack(const PartialColoring &coloring, const ShapeFamily &family)
{
    const auto start = Clock::now();
    if (validate(coloring, family)) {
        auto r = no_result("bt");
        r.stats.wall_ms = elapsed_ms(start);
        return r;
    }
    Backtracker bt(coloring, family);
    ExtensionResult result;
    result.stats.engine = "bt";
    result.stats.searched = true;
    if (bt.run()) {
        result.decision = Decision::Yes;
        result.witness = bt.coloring();
    }
    result.stats.nodes = bt.nodes();
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

namespace {

// c * 3^u submask steps
bool dp_affordable(std::size_t blanks, int colors)
{
    if (blanks > 16)
        return false;
    double work = colors;
    for (std::size_t i = 0; i < blanks; ++i)
        work *= 3;
    return work <= 2e8;
}

} // namespace

ExtensionResult decide_gce_fpt(const PartialColoring &coloring)
{
    const auto start = Clock::now();
    if (validate_rectangles(coloring)) {
        auto r = no_result("fpt");
        r.stats.wall_ms = elapsed_ms(start);
        return r;
    }

    const RegionVerdict verdict = classify(coloring.rows(), coloring.cols(), coloring.colors(), coloring);
    ExtensionResult result;
    switch (verdict.kind) {
    case VerdictKind::TriviallyExtendable:
        result.decision = Decision::Yes;
        result.witness = thin_grid_completion(coloring);
        break;
    case VerdictKind::Uncolorable:
        break;
    case VerdictKind::NeedsSearch:
        if (dp_affordable(coloring.blank_count(), coloring.colors()))
            result = extend_subset_dp(coloring, ShapeFamily::rectangle());
        else
            result = extend_backtrack(coloring, ShapeFamily::rectangle());
        result.stats.searched = true;
        break;
    }
    result.stats.engine = "fpt";
    result.stats.wall_ms = elapsed_ms(start);
    return result;
}

std::optional<Engine> parse_engine(const std::string &name)
{
    if (name == "dp")
        return Engine::Dp;
    if (name == "bt")
        return Engine::Backtrack;
    if (name == "fpt")
        return Engine::Fpt;
    return std::nullopt;
}

std::string to_string(Engine engine)
{
    switch (engine) {
    case Engine::Dp: return "dp";
    case Engine::Backtrack: return "bt";
    case Engine::Fpt: return "fpt";
    }
    return "?";
}

ExtensionResult solve(const PartialColoring &coloring, const ShapeFamily &family, Engine engine)
{
    switch (engine) {
    case Engine::Dp: return extend_subset_dp(coloring, family);
    case Engine::Backtrack: return extend_backtrack(coloring, family);
    case Engine::Fpt:
        if (! family.is_rectangle())
            throw std::invalid_argument("the fpt engine only handles the rectangle family");
        return decide_gce_fpt(coloring);
    }
    return extend_backtrack(coloring, family);
}

} // namespace gridcolor
