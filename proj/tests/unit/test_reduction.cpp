#include "oracles.hpp"

#include <gridcolor/reduction.hpp>
#include <gridcolor/solver.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <set>

using namespace gridcolor;

namespace {

ThreeCnf worked_example()
{
    return ThreeCnf{4, {{1, 2, -3}, {-2, 3, 4}, {-1, -3, -4}}};
}

std::vector<bool> bits(std::initializer_list<bool> values)
{
    std::vector<bool> a{false};
    a.insert(a.end(), values);
    return a;
}

void expect_well_formed(const GceReduction &red)
{
    const auto &pc = red.instance;
    EXPECT_EQ(pc.colors(), red.d_count + 2);
    EXPECT_EQ(static_cast<int>(red.d_cells.size()), red.d_count);
    // every D color sits exactly once inside the main grid, at its recorded cell
    std::vector<int> seen(static_cast<std::size_t>(pc.colors()) + 1, 0);
    for (int i = 1; i <= red.main_rows; ++i)
        for (int j = 1; j <= red.main_cols; ++j) {
            const Color k = pc.at(i + red.main_row_offset, j + red.main_col_offset);
            if (k >= 3)
                ++seen[static_cast<std::size_t>(k)];
        }
    for (int k = 3; k <= pc.colors(); ++k) {
        EXPECT_EQ(seen[static_cast<std::size_t>(k)], 1) << "D color " << k;
        EXPECT_EQ(pc.at(red.d_cells[static_cast<std::size_t>(k - 3)]), k);
    }
    // blanks are exactly the literal cells and the clause slots left open
    for (int i = 1; i <= pc.rows(); ++i)
        for (int j = 1; j <= pc.cols(); ++j) {
            const auto &role = red.role(Cell{i, j});
            EXPECT_EQ(role.color, pc.at(i, j));
            if (pc.at(i, j) == kBlank)
                EXPECT_TRUE(role.kind == RoleKind::Literal || role.kind == RoleKind::ClauseBlank) << to_string(Cell{i, j});
        }
    EXPECT_FALSE(validate_rectangles(pc));
}

} // namespace

TEST(Reduction, MainGridDimensions)
{
    auto red = reduce(ThreeCnf{3, {{1, 2, 3}}});
    EXPECT_EQ(red.main_rows, 7);
    EXPECT_EQ(red.main_cols, 9);
    expect_well_formed(red);

    auto ex = reduce(worked_example());
    EXPECT_EQ(ex.main_rows, 2 * 4 * 3 + 1);
    EXPECT_EQ(ex.main_cols, 4 * (4 * 3 - 2) + 2 * 3 + 1);
}

TEST(Reduction, RepeatedLiteralsGetMorePairs)
{
    ThreeCnf phi{1, {{1, 1, 1}, {-1, -1, -1}}};
    EXPECT_EQ(uniform_pairs(phi, 1), 3);
    auto red = reduce(phi);
    EXPECT_EQ(red.main_rows, 7);
    EXPECT_EQ(red.main_cols, 15);
    expect_well_formed(red);
    EXPECT_FALSE(extend_backtrack(red.instance, ShapeFamily::rectangle()).yes());
}

TEST(Reduction, WorkedExampleIsExtendable)
{
    auto red = reduce(worked_example());
    expect_well_formed(red);
    auto r = extend_backtrack(red.instance, ShapeFamily::rectangle());
    ASSERT_TRUE(r.yes());
    auto a = coloring_to_assignment(red, *r.witness);
    EXPECT_TRUE(satisfies(red.formula, a));
}

TEST(Reduction, AssignmentMapsToValidColoring)
{
    auto red = reduce(worked_example());
    auto chi = assignment_to_coloring(red, bits({true, true, true, false}));
    EXPECT_TRUE(chi.is_total());
    EXPECT_TRUE(agrees_with(chi, red.instance));
    EXPECT_FALSE(validate_rectangles(chi));
    EXPECT_EQ(coloring_to_assignment(red, chi), bits({true, true, true, false}));

    auto small = reduce(ThreeCnf{3, {{1, 2, 3}}});
    EXPECT_FALSE(validate_rectangles(assignment_to_coloring(small, bits({true, true, true}))));
}

TEST(Reduction, FalsifyingAssignmentIsRejected)
{
    auto red = reduce(worked_example());
    try {
        assignment_to_coloring(red, bits({false, false, true, false}));
        FAIL() << "expected NotSatisfying";
    }
    catch (const NotSatisfying &e) {
        EXPECT_EQ(e.clause(), 1);
    }
}

TEST(Reduction, BadColoringIsRejected)
{
    auto red = reduce(ThreeCnf{3, {{1, 2, 3}}});
    auto chi = assignment_to_coloring(red, bits({true, false, false}));
    auto broken = chi;
    // paint a T rectangle onto four pre-colored T cells plus blanks if possible
    for (int i = 1; i <= broken.rows(); ++i)
        for (int j = 1; j <= broken.cols(); ++j)
            if (red.instance.is_blank(Cell{i, j}))
                broken.set(Cell{i, j}, kTrueColor);
    if (validate_rectangles(broken))
        EXPECT_THROW(coloring_to_assignment(red, broken), InvalidExtension);
    EXPECT_THROW(coloring_to_assignment(red, red.instance), InvalidExtension);
    PartialColoring wrong(GridDims(2, 2), 2);
    EXPECT_THROW(coloring_to_assignment(red, wrong), InvalidExtension);
}

TEST(Reduction, OptimizedLayout)
{
    auto red = reduce(worked_example(), ReductionOptions{true});
    expect_well_formed(red);
    EXPECT_LT(red.main_rows, 25);
    auto r = extend_backtrack(red.instance, ShapeFamily::rectangle());
    ASSERT_TRUE(r.yes());
    EXPECT_TRUE(satisfies(red.formula, coloring_to_assignment(red, *r.witness)));
}

TEST(Reduction, SmallFormulasAgreeWithSat)
{
    for (const auto &phi : oracle::canonical_three_cnfs(2, 2)) {
        const bool sat = oracle::brute_sat(phi);
        for (bool opt : {false, true}) {
            auto red = reduce(phi, ReductionOptions{opt});
            auto r = extend_backtrack(red.instance, ShapeFamily::rectangle());
            EXPECT_EQ(r.yes(), sat);
            if (r.yes())
                EXPECT_TRUE(satisfies(phi, coloring_to_assignment(red, *r.witness)));
            if (auto model = oracle::brute_model(phi))
                EXPECT_FALSE(validate_rectangles(assignment_to_coloring(red, *model)));
        }
    }
}

TEST(Reduction, RolesJson)
{
    auto red = reduce(ThreeCnf{3, {{1, 2, 3}}});
    auto j = nlohmann::json::parse(roles_json(red));
    EXPECT_EQ(j["rows"], red.instance.rows());
    EXPECT_EQ(j["cols"], red.instance.cols());
    EXPECT_EQ(j["colors"], red.instance.colors());
    EXPECT_EQ(j["gadgets"].size(), 1u);
}

TEST(Reduction, InputChecks)
{
    EXPECT_THROW(reduce(ThreeCnf{2, {}}), std::invalid_argument);
    EXPECT_THROW(reduce(ThreeCnf{2, {{1, 2, 3}}}), std::invalid_argument);
    EXPECT_THROW(to_three_cnf(CnfInstance{2, {{1, 2}}}), std::invalid_argument);
}

TEST(Reduction, CanonicalFamilySize)
{
    // one variable: clauses are {x,x,x},{x,x,-x},{x,-x,-x},{-x,-x,-x}; up to flipping x
    auto one = oracle::canonical_three_cnfs(1, 1);
    EXPECT_EQ(one.size(), 2u);
    std::set<std::vector<std::array<Literal, 3>>> distinct;
    for (const auto &phi : oracle::canonical_three_cnfs(3, 2))
        EXPECT_TRUE(distinct.insert(phi.clauses).second);
}
