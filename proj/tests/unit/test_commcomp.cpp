#include <gridcolor/commcomp.hpp>
#include <gridcolor/encode.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace gridcolor;

namespace {

PromiseInstance prum(const std::string &x, const std::string &y)
{
    return PromiseInstance::bits(Problem::PrUm, parse_bits(x), parse_bits(y));
}

} // namespace

TEST(Commcomp, BruteAnswers)
{
    EXPECT_EQ(solve_brute(prum("110", "010")).index, 1);
    auto set = solve_brute(PromiseInstance::symbols(Problem::PhpSet, {1, 2}, {1, 3}, 3));
    EXPECT_EQ(set.kind, Answer::Kind::Symbol);
    EXPECT_EQ(set.symbol, 1);
    auto disj = solve_brute(PromiseInstance::bits(Problem::PrDisj, parse_bits("110"), parse_bits("001")));
    EXPECT_EQ(disj.kind, Answer::Kind::Boolean);
    EXPECT_FALSE(disj.flag);
    EXPECT_TRUE(solve_brute(PromiseInstance::bits(Problem::Disj, parse_bits("1010"), parse_bits("0011"))).flag);
    EXPECT_EQ(solve_brute(PromiseInstance::bits(Problem::Um, parse_bits("0111"), parse_bits("0010"))).index, 2);
}

TEST(Commcomp, PromiseViolations)
{
    EXPECT_THROW(solve_brute(prum("110", "011")), PromiseViolation);
    EXPECT_THROW(solve_brute(prum("1100", "0100")), PromiseViolation);
    EXPECT_THROW(solve_brute(PromiseInstance::bits(Problem::PrMeet, parse_bits("110"), parse_bits("110"))), PromiseViolation);
    EXPECT_THROW(solve_brute(PromiseInstance::bits(Problem::PrDisj, parse_bits("111"), parse_bits("110"))), PromiseViolation);
    EXPECT_THROW(solve_brute(PromiseInstance::bits(Problem::Um, parse_bits("01"), parse_bits("01"))), PromiseViolation);
    EXPECT_THROW(solve_brute(PromiseInstance::symbols(Problem::PhpSet, {1, 2}, {1, 2}, 3)), PromiseViolation);
    EXPECT_THROW(solve_brute(PromiseInstance::symbols(Problem::PhpStr, {1, 1}, {1, 3}, 3)), PromiseViolation);
    EXPECT_THROW(solve_brute(PromiseInstance::symbols(Problem::PhpSet, {1, 2}, {1, 4}, 3)), PromiseViolation);
    EXPECT_THROW(parse_bits("10a"), std::invalid_argument);
}

TEST(Commcomp, PrumToPrmeet)
{
    auto [x, y] = reduce_prum_to_prmeet(parse_bits("110"), parse_bits("010"));
    EXPECT_EQ(format_bits(x), "110");
    EXPECT_EQ(format_bits(y), "101");
    EXPECT_EQ(solve_brute(PromiseInstance::bits(Problem::PrMeet, x, y)).index, 1);

    auto [x2, y2] = reduce_prum_to_prmeet(parse_bits("101"), parse_bits("001"));
    EXPECT_EQ(format_bits(y2), "110");
    EXPECT_EQ(solve_brute(PromiseInstance::bits(Problem::PrMeet, x2, y2)).index, 1);

    EXPECT_THROW(reduce_prum_to_prmeet(parse_bits("101"), parse_bits("000")), PromiseViolation);
}

TEST(Commcomp, PrmeetToPhpset)
{
    auto [a, b] = reduce_prmeet_to_phpset(parse_bits("110"), parse_bits("101"));
    EXPECT_EQ(a, (Symbols{1, 2}));
    EXPECT_EQ(b, (Symbols{1, 3}));
    EXPECT_EQ(symbol_to_index(solve_brute(PromiseInstance::symbols(Problem::PhpSet, a, b, 3)).symbol), 1);
    EXPECT_THROW(reduce_prmeet_to_phpset(parse_bits("1100"), parse_bits("1010")), PromiseViolation);
}

TEST(Commcomp, PhpsetToPhpstr)
{
    auto [x, y] = reduce_phpset_to_phpstr({1, 2}, {1, 3}, 3);
    auto ans = solve_brute(PromiseInstance::symbols(Problem::PhpStr, x, y, 3));
    EXPECT_EQ(ans.i, 1);
    EXPECT_EQ(ans.j, 1);
    EXPECT_EQ(phpstr_answer_to_symbol(x, ans), 1);

    auto [x2, y2] = reduce_phpset_to_phpstr({2, 3}, {1, 2}, 3);
    auto ans2 = solve_brute(PromiseInstance::symbols(Problem::PhpStr, x2, y2, 3));
    EXPECT_EQ(ans2.i, 1);
    EXPECT_EQ(ans2.j, 2);
    EXPECT_EQ(phpstr_answer_to_symbol(x2, ans2), 2);

    EXPECT_THROW(reduce_phpset_to_phpstr({1, 2, 3}, {1, 2, 4}, 5), PromiseViolation);
}

TEST(Commcomp, ChainExhaustive)
{
    const std::vector<std::uint64_t> counts{6, 30, 140};
    for (int n : {3, 5, 7}) {
        auto check = verify_chain(n);
        EXPECT_TRUE(check.all_ok()) << "n=" << n;
        EXPECT_EQ(check.instances, counts[static_cast<std::size_t>((n - 3) / 2)]);
    }
    EXPECT_THROW(all_prum_instances(4), std::invalid_argument);
}

TEST(Commcomp, FiOnUncolorableGrid)
{
    const GridVariables vars(3, 7, 2);
    const auto ilp = cnf_to_ilp(build_cnf(3, 7, 2).cnf);
    const auto split = column_split(vars, ilp);
    std::mt19937_64 rng(8);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> alice(static_cast<std::size_t>(ilp.var_count()) + 1), bob(alice.size());
        for (std::size_t v = 1; v < alice.size(); ++v) {
            alice[v] = coin(rng);
            bob[v] = coin(rng);
        }
        const auto x = combine(split, alice, bob);
        const auto row = fi_find_violation(ilp, x);
        ASSERT_GE(row, 1u);
        EXPECT_FALSE(row_holds(ilp.rows[row - 1], x));
        for (std::size_t r = 1; r < row; ++r)
            EXPECT_TRUE(row_holds(ilp.rows[r - 1], x));
    }
}

TEST(Commcomp, ColumnSplitOwnership)
{
    const GridVariables vars(3, 7, 2);
    const auto ilp = cnf_to_ilp(build_cnf(3, 7, 2).cnf);
    const auto split = column_split(vars, ilp);
    for (int v = 1; v <= vars.count(); ++v) {
        const int want = vars.triple(v).col <= 4 ? 0 : 1;
        EXPECT_EQ(split.owner[static_cast<std::size_t>(v)], want);
        EXPECT_EQ(split.owner[static_cast<std::size_t>(ilp.complement(v))], want);
    }
}

TEST(Commcomp, FiSatisfiableCases)
{
    // the section-7 family at c = 2 is G(3,3), which is 2-colorable
    PartialColoring chi(GridDims(3, 3), 2);
    const int colors[3][3] = {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            chi.set(Cell{i + 1, j + 1}, colors[i][j]);
    ASSERT_FALSE(validate_rectangles(chi));
    const auto ilp = cnf_to_ilp(build_cnf(3, 3, 2).cnf);
    EXPECT_THROW(fi_find_violation(ilp, ilp_point(ilp, indicator_model(chi))), NoViolation);

    // violate exactly one clause row: recolor so that cell (1,1) has no color
    auto x = ilp_point(ilp, indicator_model(chi));
    x[1] = 0;
    x[static_cast<std::size_t>(ilp.complement(1))] = 1;
    const auto row = fi_find_violation(ilp, x);
    EXPECT_EQ(row, ilp.pairing_rows + 1);
}

TEST(Commcomp, ColumnRestrictedSampler)
{
    std::mt19937_64 rng(1);
    for (int c : {2, 3, 4, 7}) {
        auto pc = sample_column_restricted(c, 12, rng);
        EXPECT_EQ(pc.rows(), c + 1);
        for (int j = 1; j <= 12; ++j) {
            std::vector<int> count(static_cast<std::size_t>(c) + 1, 0);
            for (int i = 1; i <= c + 1; ++i)
                ++count[static_cast<std::size_t>(pc.at(i, j))];
            EXPECT_EQ(std::count(count.begin() + 1, count.end(), 1), c - 1);
            EXPECT_EQ(std::count(count.begin() + 1, count.end(), 2), 1);
            auto s = column_symbol(pc, j);
            EXPECT_EQ(pc.at(s.row1, j), s.color);
            EXPECT_EQ(pc.at(s.row2, j), s.color);
        }
    }
    EXPECT_TRUE(gcc_parity_covered(3));
    EXPECT_TRUE(gcc_parity_covered(7));
    EXPECT_FALSE(gcc_parity_covered(4));
    EXPECT_FALSE(gcc_parity_covered(5));
}
