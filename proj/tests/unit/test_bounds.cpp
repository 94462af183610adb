#include "oracles.hpp"

#include <gridcolor/bounds.hpp>

#include <gtest/gtest.h>

#include <limits>

using namespace gridcolor;

TEST(Bounds, PigeonholeExamples)
{
    EXPECT_TRUE(pigeonhole_uncolorable(3, 7, 2));
    EXPECT_FALSE(pigeonhole_uncolorable(3, 6, 2));
    EXPECT_TRUE(pigeonhole_uncolorable(4, 19, 3));
    EXPECT_FALSE(pigeonhole_uncolorable(4, 18, 3));
    EXPECT_TRUE(pigeonhole_uncolorable(7, 3, 2)) << "either orientation";
}

TEST(Bounds, RefinedExamples)
{
    EXPECT_TRUE(better_uncolorable(4, 13, 2));
    EXPECT_EQ(better_refinement(4, 13, 2), 1);
    EXPECT_FALSE(better_uncolorable(2, 1000, 2));
    EXPECT_TRUE(better_uncolorable(4, 12, 2)) << "c'=1 already fires";
    EXPECT_FALSE(better_uncolorable(3, 6, 2));
    EXPECT_FALSE(better_uncolorable(6, 3, 2));
}

TEST(Bounds, LargeArgumentsDoNotOverflow)
{
    // c*C(c+1,2) is about 1.35e19 here, past the range of long long
    const long long c = 3'000'000;
    const long long huge = std::numeric_limits<long long>::max();
    EXPECT_FALSE(pigeonhole_uncolorable(c + 1, huge, c));
    EXPECT_FALSE(better_uncolorable(c + 1, huge, c));
    EXPECT_TRUE(pigeonhole_uncolorable(3001, huge, 3000));
}

TEST(Bounds, ThinGrid)
{
    PartialColoring pc(GridDims(2, 100), 3);
    pc.set(Cell{1, 1}, 1);
    pc.set(Cell{2, 5}, 1);
    EXPECT_TRUE(thin_grid_extendable(pc));
    auto done = thin_grid_completion(pc);
    EXPECT_TRUE(done.is_total());
    EXPECT_TRUE(agrees_with(done, pc));
    EXPECT_FALSE(validate_rectangles(done));

    pc.set(Cell{1, 5}, 1);
    pc.set(Cell{2, 1}, 1);
    EXPECT_FALSE(thin_grid_extendable(pc));
    EXPECT_TRUE(thin_grid_extendable(PartialColoring(GridDims(1, 5), 1)));
    EXPECT_THROW(thin_grid_extendable(PartialColoring(GridDims(4, 4), 2)), std::domain_error);
}

TEST(Bounds, ThinGridCompletionTransposes)
{
    PartialColoring pc(GridDims(9, 3), 3);
    pc.set(Cell{4, 2}, 2);
    auto done = thin_grid_completion(pc);
    EXPECT_TRUE(done.is_total());
    EXPECT_TRUE(agrees_with(done, pc));
    EXPECT_FALSE(validate_rectangles(done));
}

TEST(Bounds, ClassifyExamples)
{
    PartialColoring thin(GridDims(2, 100), 3);
    EXPECT_EQ(classify(2, 100, 3, thin).kind, VerdictKind::TriviallyExtendable);
    auto v = classify(4, 13, 2, PartialColoring(GridDims(4, 13), 2));
    EXPECT_EQ(v.kind, VerdictKind::Uncolorable);
    EXPECT_TRUE(v.fired(BoundRule::RefinedColumns));
    EXPECT_TRUE(v.fired(BoundRule::DoubledColumns));
    EXPECT_EQ(classify_blank(4, 4, 2).kind, VerdictKind::NeedsSearch);
    EXPECT_THROW(classify(4, 4, 2, PartialColoring(GridDims(4, 5), 2)), std::invalid_argument);
    EXPECT_EQ(classify_blank(1'000'000, 1'000'000, 3).kind, VerdictKind::Uncolorable);
}

TEST(Bounds, SoundAgainstEnumeration)
{
    for (int n = 1; n <= 7; ++n)
        for (int m = n; m <= 7; ++m)
            for (int c = 1; c <= 2; ++c) {
                if (! pigeonhole_uncolorable(n, m, c) && ! better_uncolorable(n, m, c))
                    continue;
                if (n * m > 24)
                    continue; // covered by the acceptance run for G(3,7)
                EXPECT_FALSE(oracle::naive_colorable(n, m, c, oracle::four_corner_rectangles(n, m))) << n << "x" << m << " c=" << c;
            }
}

TEST(Bounds, NeedsSearchStaysInsideRegion)
{
    for (long long c = 1; c <= 8; ++c) {
        const long long limit = search_region_limit(c);
        for (long long n = 1; n <= limit + 3; ++n)
            for (long long m : {n, limit, limit + 1, limit + 2})
                if (classify_blank(n, m, c).kind == VerdictKind::NeedsSearch) {
                    EXPECT_LE(std::max(n, m), limit);
                    if (c <= 6)
                        EXPECT_LE(std::max(n, m), 2 * pairs_of(2 * c));
                }
    }
}
