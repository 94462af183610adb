#include "proof_fixtures.hpp"

#include <algorithm>
#include <cstdlib>

namespace gridcolor::fixture {

namespace {

using RL = ResolutionLine;

CpLine cp_axiom(std::size_t row, LinearRow r)
{
    return CpLine{CpLine::Kind::Axiom, row, 0, 0, std::move(r)};
}
CpLine cp_add(std::size_t a, std::size_t b, LinearRow r)
{
    return CpLine{CpLine::Kind::Add, a, b, 0, std::move(r)};
}
CpLine cp_mul(std::size_t a, long long d, LinearRow r)
{
    return CpLine{CpLine::Kind::Mul, a, 0, d, std::move(r)};
}
CpLine cp_div(std::size_t a, long long d, LinearRow r)
{
    return CpLine{CpLine::Kind::Div, a, 0, d, std::move(r)};
}

} // namespace

std::pair<CnfInstance, ResolutionProof> x_and_not_x()
{
    return {CnfInstance{1, {{1}, {-1}}}, ResolutionProof{{RL::axiom({1}), RL::axiom({-1}), RL::resolve(1, 2, 1, {})}}};
}

std::pair<CnfInstance, ResolutionProof> all_four_shared()
{
    return {CnfInstance{2, {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}},
            ResolutionProof{{RL::axiom({1, 2}), RL::axiom({1, -2}), RL::resolve(1, 2, 2, {1}), RL::axiom({-1, 2}), RL::resolve(3, 4, 1, {2}),
                             RL::axiom({-1, -2}), RL::resolve(3, 6, 1, {-2}), RL::resolve(5, 7, 2, {})}}};
}

std::pair<IlpInstance, CpProof> division_system()
{
    IlpInstance ilp;
    ilp.base_vars = 1;
    ilp.rows = {make_row({{1, 2}, {2, 2}}, 1), make_row({{1, -1}}, -1), make_row({{2, -1}}, 0)};
    CpProof p{{cp_axiom(1, ilp.rows[0]), cp_div(1, 2, make_row({{1, 1}, {2, 1}}, 0)), cp_axiom(2, ilp.rows[1]),
               cp_mul(3, 3, make_row({{1, -3}}, -3)), cp_add(2, 3, make_row({{2, 1}}, -1)), cp_axiom(3, ilp.rows[2]),
               cp_add(5, 6, make_row({}, -1))}};
    return {ilp, p};
}

std::pair<IlpInstance, CpProof> grid_2x2_cp()
{
    auto ilp = cnf_to_ilp(build_cnf(2, 2, 1).cnf);
    CpProof p;
    const int V = ilp.base_vars;
    std::vector<std::pair<int, long long>> acc;
    std::size_t last = 0;
    for (int v = 1; v <= V; ++v) {
        // x_v + ~x_v <= 1 plus the unit row -x_v <= -1 leaves ~x_v <= 0
        p.lines.push_back(cp_axiom(static_cast<std::size_t>(2 * v - 1), ilp.rows[static_cast<std::size_t>(2 * v - 2)]));
        const std::size_t pair_line = p.lines.size();
        p.lines.push_back(cp_axiom(static_cast<std::size_t>(2 * V + v), ilp.rows[static_cast<std::size_t>(2 * V + v - 1)]));
        p.lines.push_back(cp_add(pair_line, pair_line + 1, make_row({{ilp.complement(v), 1}}, 0)));
        acc.emplace_back(ilp.complement(v), 1);
        if (last == 0)
            last = p.lines.size();
        else {
            p.lines.push_back(cp_add(last, p.lines.size(), make_row(acc, 0)));
            last = p.lines.size();
        }
    }
    p.lines.push_back(cp_axiom(ilp.rows.size(), ilp.rows.back()));
    p.lines.push_back(cp_add(last, p.lines.size(), make_row({}, -1)));
    return {ilp, p};
}

ResolutionProof mutate(const ResolutionProof &proof, int var_count, std::mt19937_64 &rng)
{
    std::vector<std::size_t> derived;
    for (std::size_t i = 0; i < proof.size(); ++i)
        if (proof.lines[i].kind == RL::Kind::Resolve)
            derived.push_back(i);
    auto bad = proof;
    if (derived.empty())
        return bad;
    auto &line = bad.lines[derived[rng() % derived.size()]];
    const int kind = static_cast<int>(rng() % 4);
    if (kind == 0 && ! line.clause.empty()) {
        auto &l = line.clause[rng() % line.clause.size()];
        l = -l;
    }
    else if (kind == 1 && ! line.clause.empty())
        line.clause.erase(line.clause.begin() + static_cast<long>(rng() % line.clause.size()));
    else if (kind == 3 && var_count > 1) {
        int p = line.pivot;
        while (p == line.pivot)
            p = 1 + static_cast<int>(rng() % static_cast<unsigned>(var_count));
        line.pivot = p;
    }
    else {
        const int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(var_count));
        const bool present = std::any_of(line.clause.begin(), line.clause.end(), [&](Literal l) { return std::abs(l) == v; });
        line.clause.push_back(present ? var_count + 1 : (rng() % 2 ? v : -v));
    }
    return bad;
}

CpProof mutate(const CpProof &proof, std::mt19937_64 &rng)
{
    auto bad = proof;
    auto &line = bad.lines[rng() % bad.size()];
    const int kind = static_cast<int>(rng() % 3);
    if (kind == 0 && ! line.row.terms.empty()) {
        auto terms = line.row.terms;
        terms[rng() % terms.size()].second += rng() % 2 ? 1 : -1;
        line.row = make_row(terms, line.row.bound);
    }
    else if (kind == 1 && (line.kind == CpLine::Kind::Mul || line.kind == CpLine::Kind::Div))
        line.factor += 1;
    else
        line.row.bound += rng() % 2 ? 1 : -1;
    return bad;
}

} // namespace gridcolor::fixture
