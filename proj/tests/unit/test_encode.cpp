#include "oracles.hpp"

#include <gridcolor/dimacs.hpp>
#include <gridcolor/encode.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace gridcolor;

TEST(Encode, VariableNumbering)
{
    GridVariables v(3, 4, 2);
    EXPECT_EQ(v.id(1, 1, 1), 1);
    EXPECT_EQ(v.id(1, 1, 2), 2);
    EXPECT_EQ(v.id(1, 2, 1), 3);
    EXPECT_EQ(v.id(3, 4, 2), 24);
    for (int id = 1; id <= v.count(); ++id) {
        auto t = v.triple(id);
        EXPECT_EQ(v.id(t.row, t.col, t.color), id);
    }
}

TEST(Encode, TwoByTwoOneColor)
{
    auto g = build_cnf(2, 2, 1);
    EXPECT_EQ(g.cnf.var_count, 4);
    ASSERT_EQ(g.cnf.clauses.size(), 5u);
    EXPECT_EQ(g.color_clauses, 4u);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_EQ(g.cnf.clauses[i], Clause{static_cast<Literal>(i + 1)});
    EXPECT_EQ(g.cnf.clauses[4], (Clause{-1, -2, -3, -4}));
    EXPECT_FALSE(oracle::brute_sat(g.cnf));
}

TEST(Encode, ClauseCounts)
{
    auto g = build_cnf(2, 2, 2);
    EXPECT_EQ(g.cnf.var_count, 8);
    EXPECT_EQ(g.cnf.clauses.size(), 6u);
    EXPECT_TRUE(oracle::brute_sat(g.cnf));

    auto h = build_cnf(3, 3, 2);
    std::size_t negative4 = 0;
    for (const auto &c : h.cnf.clauses)
        negative4 += c.size() == 4 && std::all_of(c.begin(), c.end(), [](Literal l) { return l < 0; });
    EXPECT_EQ(negative4, 18u);
}

TEST(Encode, ColoringModelsSatisfy)
{
    PartialColoring chi(GridDims(2, 2), 2);
    chi.set(Cell{1, 1}, 1);
    chi.set(Cell{1, 2}, 1);
    chi.set(Cell{2, 1}, 1);
    chi.set(Cell{2, 2}, 2);
    auto g = build_cnf(2, 2, 2);
    auto model = indicator_model(chi);
    EXPECT_TRUE(satisfies(g.cnf, model));
    EXPECT_EQ(decode_model(model, 2, 2, 2), chi);
}

TEST(Encode, DecodeTakesLeastColor)
{
    Model m(8);
    m.set(1, true);
    m.set(2, true);
    for (int v : {4, 5, 8})
        m.set(v, true);
    auto chi = decode_model(m, 2, 2, 2);
    EXPECT_EQ(chi.at(1, 1), 1);
    EXPECT_EQ(chi.at(1, 2), 2);
    Model empty(8);
    EXPECT_THROW(decode_model(empty, 2, 2, 2), NoColor);
}

TEST(Encode, CnfMatchesColorability)
{
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int c = 1; c <= 2; ++c) {
                auto g = build_cnf(n, m, c);
                EXPECT_EQ(oracle::brute_sat(g.cnf), oracle::naive_colorable(n, m, c, oracle::four_corner_rectangles(n, m)))
                    << n << "x" << m << " c=" << c;
            }
}

TEST(Encode, ShapeCnfMatchesColorability)
{
    const auto sq = ShapeFamily::square();
    for (int n = 2; n <= 3; ++n)
        for (int c = 1; c <= 2; ++c) {
            auto g = build_cnf(n, 3, c, sq);
            EXPECT_EQ(oracle::brute_sat(g.cnf), oracle::naive_colorable(n, 3, c, enumerate_forbidden_sets(GridDims(n, 3), sq)));
        }
}

TEST(Encode, IlpShape)
{
    auto ilp = cnf_to_ilp(build_cnf(2, 2, 1).cnf);
    EXPECT_EQ(ilp.var_count(), 8);
    EXPECT_EQ(ilp.rows.size(), 13u);
    EXPECT_EQ(ilp.pairing_rows, 8u);
    EXPECT_EQ(ilp.complement(3), 7);
    EXPECT_EQ(ilp.complement(7), 3);

    CnfInstance one{2, {{1, -2}}};
    auto small = cnf_to_ilp(one);
    EXPECT_EQ(format_row(small, small.rows.back()), "-1*x1 -1*~x2 <= -1");

    CnfInstance none{3, {}};
    auto trivial = cnf_to_ilp(none);
    EXPECT_EQ(trivial.rows.size(), 6u);
    EXPECT_TRUE(oracle::ilp_feasible(trivial));
}

TEST(Encode, IlpFeasibilityMatchesCnf)
{
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int c = 1; c <= 2; ++c) {
                auto g = build_cnf(n, m, c);
                EXPECT_EQ(oracle::ilp_feasible(cnf_to_ilp(g.cnf)), oracle::brute_sat(g.cnf)) << n << "x" << m << " c=" << c;
            }
}

TEST(Encode, IlpPointOfModelSatisfiesRows)
{
    PartialColoring chi(GridDims(2, 2), 2);
    chi.set(Cell{1, 1}, 1);
    chi.set(Cell{1, 2}, 2);
    chi.set(Cell{2, 1}, 2);
    chi.set(Cell{2, 2}, 1);
    auto ilp = cnf_to_ilp(build_cnf(2, 2, 2).cnf);
    auto x = ilp_point(ilp, indicator_model(chi));
    for (const auto &row : ilp.rows)
        EXPECT_TRUE(row_holds(row, x));
}

TEST(Encode, RowTextRoundTrip)
{
    auto ilp = cnf_to_ilp(build_cnf(2, 3, 2).cnf);
    for (const auto &row : ilp.rows)
        EXPECT_EQ(parse_row(format_row(ilp, row), ilp.base_vars), row);
    EXPECT_EQ(parse_row("0 <= -1", 3).terms.size(), 0u);
    EXPECT_EQ(parse_row("2*x1 3*x1 <= 4", 3), make_row({{1, 5}}, 4));
    EXPECT_THROW(parse_row("1*x9 <= 1", 3), std::invalid_argument);
    EXPECT_THROW(parse_row("1*x1 >= 1", 3), std::invalid_argument);

    std::ostringstream out;
    write_ilp(out, ilp);
    std::istringstream in(out.str());
    auto back = read_ilp(in);
    EXPECT_EQ(back.base_vars, ilp.base_vars);
    EXPECT_EQ(back.rows, ilp.rows);
    EXPECT_EQ(back.pairing_rows, ilp.pairing_rows);

    std::istringstream short_file("# ilp vars=1 rows=3 pairing=2\n1*x1 1*~x1 <= 1\n");
    EXPECT_THROW(read_ilp(short_file), ParseError);
}

TEST(Encode, GccFamily)
{
    EXPECT_EQ(gcc_instance(3), std::make_pair(4, 10));
    EXPECT_EQ(gcc_variant_instance(3), std::make_pair(4, 19));
    EXPECT_EQ(gcc_instance(2), std::make_pair(3, 3));
    EXPECT_THROW(gcc_instance(1), std::invalid_argument);
}

TEST(Dimacs, HeaderAndRoundTrip)
{
    auto g = build_cnf(2, 2, 1);
    const auto text = to_dimacs(g.cnf);
    EXPECT_NE(text.find("p cnf 4 5\n"), std::string::npos);
    std::istringstream in(text);
    auto back = parse_dimacs(in);
    EXPECT_EQ(back.var_count, 4);
    EXPECT_EQ(back.clauses, g.cnf.clauses);
}

TEST(Dimacs, Model)
{
    std::istringstream in("1 -2 0\n");
    auto m = parse_dimacs_model(in);
    EXPECT_TRUE(m.value(1));
    EXPECT_FALSE(m.value(2));
    std::istringstream sol("c solver output\ns SATISFIABLE\nv 1 -2\nv 3 0\n");
    auto m2 = parse_dimacs_model(sol, 4);
    EXPECT_EQ(m2.var_count(), 4);
    EXPECT_TRUE(m2.value(3));
    EXPECT_FALSE(m2.value(4));
}

TEST(Dimacs, Errors)
{
    std::istringstream count("p cnf 2 3\n1 2 0\n-1 0\n");
    EXPECT_THROW(parse_dimacs(count), ParseError);
    std::istringstream range("p cnf 2 1\n1 3 0\n");
    EXPECT_THROW(parse_dimacs(range), ParseError);
    std::istringstream header("1 2 0\n");
    EXPECT_THROW(parse_dimacs(header), ParseError);
    std::istringstream open("p cnf 2 1\n1 2\n");
    EXPECT_THROW(parse_dimacs(open), ParseError);
    std::istringstream junk("p cnf 2 1\n1 x 0\n");
    EXPECT_THROW(parse_dimacs(junk), ParseError);
}
