#include <gridcolor/reduction.hpp>

#include <gridcolor/conflict.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>

namespace gridcolor {

namespace {

int var_of(Literal l)
{
    return std::abs(l);
}

// Block rows are numbered 0 (bottom) upward.
struct BlockDesign
{
    int rows = 0;
    bool bottom_positive = true;

    bool sign_at(int p) const { return (p % 2 == 0) == bottom_positive; }
};

struct Occurrences
{
    std::vector<int> pos, neg;
};

Occurrences count_occurrences(const ThreeCnf &phi)
{
    Occurrences occ{std::vector<int>(static_cast<std::size_t>(phi.var_count) + 1), std::vector<int>(static_cast<std::size_t>(phi.var_count) + 1)};
    for (const auto &clause : phi.clauses)
        for (Literal l : clause)
            ++(l > 0 ? occ.pos : occ.neg)[static_cast<std::size_t>(var_of(l))];
    return occ;
}

struct Placement
{
    int var;
    int pos; // block position
    bool operator==(const Placement &) const = default;
};

bool adjacent(Placement a, Placement b)
{
    return a.var == b.var && std::abs(a.pos - b.pos) == 1;
}

// Chooses a block position for every literal occurrence, keeping the L2 slot
// of each clause away from the rows next to its L1 and L3 slots.
class CopyAssigner
{
public:
    CopyAssigner(const ThreeCnf &phi, const std::vector<BlockDesign> &design) :
        phi_(phi),
        design_(design),
        used_(design.size())
    {
        for (std::size_t v = 1; v < design.size(); ++v)
            used_[v].assign(static_cast<std::size_t>(design[v].rows), 0);
        choice_.resize(phi.clauses.size());
    }

    bool run() { return place(0); }
    std::size_t deepest() const noexcept { return deepest_; }

    // slot order L1, L2, L3 -> (literal index, placement)
    struct Choice
    {
        std::array<int, 3> slot{};
        std::array<Placement, 3> at{};
    };
    const std::vector<Choice> &choices() const noexcept { return choice_; }

private:
    bool place(std::size_t ci)
    {
        if (ci == phi_.clauses.size())
            return true;
        deepest_ = std::max(deepest_, ci);
        if (++nodes_ > 2'000'000)
            return false;

        const auto &clause = phi_.clauses[ci];
        static constexpr std::array<int, 3> kMiddleFirst{1, 0, 2};
        for (int mid : kMiddleFirst) {
            std::array<int, 2> others{};
            for (int i = 0, o = 0; i < 3; ++i)
                if (i != mid)
                    others[static_cast<std::size_t>(o++)] = i;

            for (int pm : positions(clause[static_cast<std::size_t>(mid)])) {
                const Placement m{var_of(clause[static_cast<std::size_t>(mid)]), pm};
                take(m);
                for (int p0 : positions(clause[static_cast<std::size_t>(others[0])])) {
                    const Placement a{var_of(clause[static_cast<std::size_t>(others[0])]), p0};
                    if (adjacent(a, m))
                        continue;
                    take(a);
                    for (int p1 : positions(clause[static_cast<std::size_t>(others[1])])) {
                        const Placement b{var_of(clause[static_cast<std::size_t>(others[1])]), p1};
                        if (adjacent(b, m))
                            continue;
                        take(b);
                        record(ci, mid, others, m, a, b);
                        if (place(ci + 1))
                            return true;
                        release(b);
                    }
                    release(a);
                }
                release(m);
            }
        }
        return false;
    }

    void record(std::size_t ci, int mid, std::array<int, 2> others, Placement m, Placement a, Placement b)
    {
        // L1 is whichever of the two outer literals sits lower in the grid;
        // lower means an earlier variable or, within a block, a lower position.
        auto lower = [](Placement x, Placement y) { return x.var != y.var ? x.var < y.var : x.pos < y.pos; };
        Choice &c = choice_[ci];
        const bool a_low = lower(a, b);
        c.slot = {a_low ? others[0] : others[1], mid, a_low ? others[1] : others[0]};
        c.at = {a_low ? a : b, m, a_low ? b : a};
    }

    std::vector<int> positions(Literal l) const
    {
        std::vector<int> out;
        const auto &d = design_[static_cast<std::size_t>(var_of(l))];
        for (int p = 0; p < d.rows; ++p)
            if (d.sign_at(p) == (l > 0) && ! used_[static_cast<std::size_t>(var_of(l))][static_cast<std::size_t>(p)])
                out.push_back(p);
        return out;
    }

    void take(Placement p) { used_[static_cast<std::size_t>(p.var)][static_cast<std::size_t>(p.pos)] = 1; }
    void release(Placement p) { used_[static_cast<std::size_t>(p.var)][static_cast<std::size_t>(p.pos)] = 0; }

    const ThreeCnf &phi_;
    const std::vector<BlockDesign> &design_;
    std::vector<std::vector<char>> used_;
    std::vector<Choice> choice_;
    std::size_t deepest_ = 0;
    std::uint64_t nodes_ = 0;
};

std::vector<BlockDesign> initial_design(const ThreeCnf &phi, const Occurrences &occ, bool optimized)
{
    std::vector<BlockDesign> design(static_cast<std::size_t>(phi.var_count) + 1);
    for (int v = 1; v <= phi.var_count; ++v) {
        auto &d = design[static_cast<std::size_t>(v)];
        const int a = occ.pos[static_cast<std::size_t>(v)], b = occ.neg[static_cast<std::size_t>(v)];
        if (! optimized) {
            d.rows = 2 * uniform_pairs(phi, v);
            d.bottom_positive = true;
        }
        else if (a == b) {
            d.rows = 2 * a;
            d.bottom_positive = true;
        }
        else {
            d.rows = 2 * std::max(a, b) - 1;
            d.bottom_positive = a > b;
        }
    }
    return design;
}

constexpr Color kDMarker = -1;

} // namespace

ThreeCnf to_three_cnf(const CnfInstance &cnf)
{
    ThreeCnf phi;
    phi.var_count = cnf.var_count;
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
        const auto &c = cnf.clauses[i];
        if (c.size() != 3)
            throw std::invalid_argument("clause " + std::to_string(i + 1) + " has " + std::to_string(c.size()) + " literals, expected 3");
        phi.clauses.push_back({c[0], c[1], c[2]});
    }
    check_three_cnf(phi);
    return phi;
}

void check_three_cnf(const ThreeCnf &phi)
{
    if (phi.clauses.empty())
        throw std::invalid_argument("formula has no clauses");
    if (phi.var_count < 1)
        throw std::invalid_argument("formula has no variables");
    for (const auto &clause : phi.clauses)
        for (Literal l : clause)
            if (l == 0 || var_of(l) > phi.var_count)
                throw std::invalid_argument("literal " + std::to_string(l) + " out of range");
}

CnfInstance to_cnf(const ThreeCnf &phi)
{
    CnfInstance cnf;
    cnf.var_count = phi.var_count;
    for (const auto &c : phi.clauses)
        cnf.clauses.push_back({c[0], c[1], c[2]});
    return cnf;
}

bool satisfies(const ThreeCnf &phi, const std::vector<bool> &assignment)
{
    return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const auto &clause) {
        return std::any_of(clause.begin(), clause.end(), [&](Literal l) {
            return assignment.at(static_cast<std::size_t>(var_of(l))) == (l > 0);
        });
    });
}

std::string to_string(RoleKind kind)
{
    switch (kind) {
    case RoleKind::Unique: return "UNIQUE";
    case RoleKind::Border: return "BORDER";
    case RoleKind::GuardT: return "GUARD_T";
    case RoleKind::ChainT: return "CHAIN_T";
    case RoleKind::ChainF: return "CHAIN_F";
    case RoleKind::ClauseT: return "CLAUSE_T";
    case RoleKind::ClauseF: return "CLAUSE_F";
    case RoleKind::Literal: return "LITERAL";
    case RoleKind::ClauseBlank: return "CLAUSE_BLANK";
    }
    return "?";
}

int uniform_pairs(const ThreeCnf &phi, int var)
{
    int pos = 0, neg = 0;
    for (const auto &clause : phi.clauses)
        for (Literal l : clause)
            if (var_of(l) == var)
                ++(l > 0 ? pos : neg);
    return std::max({static_cast<int>(phi.clauses.size()), pos, neg});
}

GceReduction reduce(const ThreeCnf &phi, const ReductionOptions &options)
{
    check_three_cnf(phi);
    const Occurrences occ = count_occurrences(phi);
    std::vector<BlockDesign> design = initial_design(phi, occ, options.optimized);

    std::vector<CopyAssigner::Choice> choices;
    for (;;) {
        CopyAssigner assigner(phi, design);
        if (assigner.run()) {
            choices = assigner.choices();
            break;
        }
        const auto &stuck = phi.clauses[assigner.deepest()];
        for (Literal l : stuck)
            design[static_cast<std::size_t>(var_of(l))].rows += 2;
    }

    const int n = phi.var_count;
    const int m = static_cast<int>(phi.clauses.size());

    GceReduction red;
    red.formula = phi;
    red.blocks.resize(static_cast<std::size_t>(n));

    // Main-grid geometry (main coordinates, row 1 on top, column 1 literal column).
    int total_block_rows = 0;
    int chain_cols = 0;
    for (int v = 1; v <= n; ++v) {
        total_block_rows += design[static_cast<std::size_t>(v)].rows;
        chain_cols += 2 * std::max(0, design[static_cast<std::size_t>(v)].rows - 1);
    }
    const int R = 1 + total_block_rows;
    const int Mc = 1 + chain_cols + 2 * m;
    red.main_rows = R;
    red.main_cols = Mc;

    std::vector<Color> main(static_cast<std::size_t>(R) * static_cast<std::size_t>(Mc), kDMarker);
    std::vector<CellRole> main_roles(main.size());
    auto at = [&](int r, int c) -> std::size_t { return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(Mc) + static_cast<std::size_t>(c - 1); };

    // bottom main row of each block
    std::vector<int> bottom(static_cast<std::size_t>(n) + 1, 0);
    {
        int below = 0;
        int col = 2;
        for (int v = 1; v <= n; ++v) {
            const auto &d = design[static_cast<std::size_t>(v)];
            auto &blk = red.blocks[static_cast<std::size_t>(v - 1)];
            blk.var = v;
            blk.rows = d.rows;
            blk.bottom_positive = d.bottom_positive;
            if (d.rows == 0)
                continue;
            bottom[static_cast<std::size_t>(v)] = R - below;
            blk.bottom_row = R - below;
            blk.first_col = col;

            std::vector<int> copies(2, 0);
            for (int p = 0; p < d.rows; ++p) {
                const int r = R - below - p;
                auto &role = main_roles[at(r, 1)];
                main[at(r, 1)] = kBlank;
                role.kind = RoleKind::Literal;
                role.var = v;
                role.positive = d.sign_at(p);
                role.copy = ++copies[role.positive ? 1 : 0];
            }
            for (int p = 0; p + 1 < d.rows; ++p) {
                const int lo = R - below - p;
                const int left = col + 2 * p;
                for (int r : {lo, lo - 1}) {
                    main[at(r, left)] = kTrueColor;
                    main_roles[at(r, left)] = CellRole{RoleKind::ChainT, kTrueColor, v};
                    main[at(r, left + 1)] = kFalseColor;
                    main_roles[at(r, left + 1)] = CellRole{RoleKind::ChainF, kFalseColor, v};
                }
            }
            col += 2 * std::max(0, d.rows - 1);
            below += d.rows;
        }
    }

    const int clause_col0 = 2 + chain_cols;
    for (int ci = 0; ci < m; ++ci) {
        const auto &choice = choices[static_cast<std::size_t>(ci)];
        const int a = clause_col0 + 2 * ci, b = a + 1;
        ClauseGadget g;
        g.clause = ci + 1;
        g.slot = choice.slot;
        for (int s = 0; s < 3; ++s)
            g.rows[static_cast<std::size_t>(s)] = bottom[static_cast<std::size_t>(choice.at[static_cast<std::size_t>(s)].var)] - choice.at[static_cast<std::size_t>(s)].pos;
        for (int col : {a, b}) {
            main[at(1, col)] = kTrueColor;
            main_roles[at(1, col)] = CellRole{RoleKind::ClauseT, kTrueColor, 0, true, 0, ci + 1};
            main[at(g.rows[1], col)] = kBlank;
            main_roles[at(g.rows[1], col)] = CellRole{RoleKind::ClauseBlank, kBlank, 0, true, 0, ci + 1, 2};
        }
        main[at(g.rows[0], a)] = kFalseColor;
        main_roles[at(g.rows[0], a)] = CellRole{RoleKind::ClauseF, kFalseColor, 0, true, 0, ci + 1, 1};
        main[at(g.rows[2], b)] = kFalseColor;
        main_roles[at(g.rows[2], b)] = CellRole{RoleKind::ClauseF, kFalseColor, 0, true, 0, ci + 1, 3};
        g.col_a = a;
        g.col_b = b;
        red.gadgets.push_back(g);
    }

    // Number the D cells top-down, row-major.
    std::vector<Cell> d_main;
    for (int r = 1; r <= R; ++r)
        for (int c = 1; c <= Mc; ++c)
            if (main[at(r, c)] == kDMarker) {
                main[at(r, c)] = static_cast<Color>(3 + d_main.size());
                main_roles[at(r, c)] = CellRole{RoleKind::Unique, main[at(r, c)]};
                d_main.push_back(Cell{r, c});
            }

    const int C = static_cast<int>(d_main.size());
    red.d_count = C;
    red.main_col_offset = C;
    red.main_row_offset = 0;

    const int N = R + C;
    const int M = C + Mc;
    PartialColoring inst(GridDims(N, M), C + 2);
    red.roles.assign(inst.dims().area(), CellRole{});
    auto place = [&](int r, int c, Color color, CellRole role) {
        role.color = color;
        if (color != kBlank)
            inst.set(Cell{r, c}, color);
        red.roles[inst.dims().index(Cell{r, c})] = role;
    };

    for (int r = 1; r <= R; ++r)
        for (int c = 1; c <= Mc; ++c) {
            auto role = main_roles[at(r, c)];
            place(r, C + c, main[at(r, c)], role);
        }
    for (int k = 1; k <= C; ++k)
        red.d_cells.push_back(Cell{d_main[static_cast<std::size_t>(k - 1)].row, C + d_main[static_cast<std::size_t>(k - 1)].col});
    for (auto &g : red.gadgets) {
        g.col_a += C;
        g.col_b += C;
    }
    for (auto &blk : red.blocks)
        if (blk.rows > 0)
            blk.first_col += C;

    // Border: column for D_k at C+1-k, row at R+k.
    for (int k = 1; k <= C; ++k) {
        const int bc = C + 1 - k;
        const Color dk = 2 + k;
        for (int r = 1; r <= R; ++r) {
            if (r == d_main[static_cast<std::size_t>(k - 1)].row)
                place(r, bc, kTrueColor, CellRole{RoleKind::GuardT});
            else
                place(r, bc, dk, CellRole{RoleKind::Border});
        }
        const int br = R + k;
        for (int c = 1; c <= Mc; ++c)
            place(br, C + c, dk, CellRole{RoleKind::Border});
    }
    for (int k = 1; k <= C; ++k)
        for (int l = 1; l <= C; ++l)
            place(R + l, C + 1 - k, 2 + std::max(k, l), CellRole{RoleKind::Border});

    red.instance = std::move(inst);
    return red;
}

NotSatisfying::NotSatisfying(int clause) :
    std::runtime_error("assignment falsifies clause " + std::to_string(clause)),
    clause_(clause)
{
}

PartialColoring assignment_to_coloring(const GceReduction &red, const std::vector<bool> &assignment)
{
    const auto &phi = red.formula;
    if (assignment.size() < static_cast<std::size_t>(phi.var_count) + 1)
        throw std::invalid_argument("assignment needs values for variables 1.." + std::to_string(phi.var_count));
    for (std::size_t ci = 0; ci < phi.clauses.size(); ++ci) {
        const auto &clause = phi.clauses[ci];
        const bool sat = std::any_of(clause.begin(), clause.end(), [&](Literal l) {
            return assignment[static_cast<std::size_t>(var_of(l))] == (l > 0);
        });
        if (! sat)
            throw NotSatisfying(static_cast<int>(ci) + 1);
    }

    ConflictIndex index(red.instance, ShapeFamily::rectangle());
    const int lit_col = red.literal_col();
    for (int r = 1; r <= red.main_rows; ++r) {
        const Cell cell{r, lit_col};
        const auto &role = red.role(cell);
        if (role.kind != RoleKind::Literal)
            continue;
        const bool value = assignment[static_cast<std::size_t>(role.var)] == role.positive;
        index.assign(cell, value ? kTrueColor : kFalseColor);
    }

    static constexpr std::array<std::array<Color, 2>, 4> kCombos{{{kFalseColor, kFalseColor},
                                                                  {kFalseColor, kTrueColor},
                                                                  {kTrueColor, kFalseColor},
                                                                  {kTrueColor, kTrueColor}}};
    for (const auto &g : red.gadgets) {
        const Cell a{g.rows[1], g.col_a}, b{g.rows[1], g.col_b};
        bool done = false;
        for (const auto &combo : kCombos) {
            if (index.completes(a, combo[0]))
                continue;
            index.assign(a, combo[0]);
            if (! index.completes(b, combo[1])) {
                index.assign(b, combo[1]);
                done = true;
                break;
            }
            index.clear(a);
        }
        if (! done)
            throw std::logic_error("clause gadget " + std::to_string(g.clause) + " could not be completed");
    }
    return index.coloring();
}

std::vector<bool> coloring_to_assignment(const GceReduction &red, const PartialColoring &coloring)
{
    if (coloring.dims() != red.instance.dims() || ! coloring.is_total())
        throw InvalidExtension("coloring is not a total coloring of the instance grid");
    if (! agrees_with(coloring, red.instance))
        throw InvalidExtension("coloring changes a pre-colored cell");
    if (auto v = validate_rectangles(coloring))
        throw InvalidExtension("coloring has a monochromatic rectangle at " + to_string(v->cells.front()));

    std::vector<bool> assignment(static_cast<std::size_t>(red.formula.var_count) + 1, false);
    for (const auto &blk : red.blocks) {
        if (blk.rows == 0)
            continue;
        const Color k = coloring.at(blk.bottom_row, red.literal_col());
        if (k != kTrueColor && k != kFalseColor)
            throw InvalidExtension("literal cell of variable " + std::to_string(blk.var) + " is not T or F");
        assignment[static_cast<std::size_t>(blk.var)] = (k == kTrueColor) == blk.bottom_positive;
    }
    return assignment;
}

std::string roles_json(const GceReduction &red)
{
    using nlohmann::json;
    json cells = json::array();
    std::size_t border = 0;
    for (int r = 1; r <= red.instance.rows(); ++r)
        for (int c = 1; c <= red.instance.cols(); ++c) {
            const auto &role = red.role(Cell{r, c});
            if (role.kind == RoleKind::Border) {
                ++border;
                continue;
            }
            json e{{"row", r}, {"col", c}, {"role", to_string(role.kind)}};
            if (role.color != kBlank)
                e["color"] = role.color;
            switch (role.kind) {
            case RoleKind::Literal:
                e["var"] = role.var;
                e["sign"] = role.positive ? "+" : "-";
                e["copy"] = role.copy;
                break;
            case RoleKind::ChainT:
            case RoleKind::ChainF:
                e["var"] = role.var;
                break;
            case RoleKind::ClauseT:
                e["clause"] = role.clause;
                break;
            case RoleKind::ClauseF:
            case RoleKind::ClauseBlank:
                e["clause"] = role.clause;
                e["position"] = role.position;
                break;
            default:
                break;
            }
            cells.push_back(std::move(e));
        }

    json colors = json::array();
    colors.push_back({{"color", kTrueColor}, {"meaning", "T"}});
    colors.push_back({{"color", kFalseColor}, {"meaning", "F"}});
    for (std::size_t k = 0; k < red.d_cells.size(); ++k)
        colors.push_back({{"color", 3 + k}, {"meaning", "D"}, {"row", red.d_cells[k].row}, {"col", red.d_cells[k].col}});

    json gadgets = json::array();
    for (const auto &g : red.gadgets)
        gadgets.push_back({{"clause", g.clause},
                           {"cols", {g.col_a, g.col_b}},
                           {"rows", {g.rows[0], g.rows[1], g.rows[2]}},
                           {"literals", {g.slot[0] + 1, g.slot[1] + 1, g.slot[2] + 1}}});

    json out{{"rows", red.instance.rows()},
             {"cols", red.instance.cols()},
             {"colors", red.instance.colors()},
             {"d_count", red.d_count},
             {"main", {{"rows", red.main_rows}, {"cols", red.main_cols}, {"row_offset", red.main_row_offset}, {"col_offset", red.main_col_offset}}},
             {"border_cells", border},
             {"color_table", std::move(colors)},
             {"gadgets", std::move(gadgets)},
             {"cells", std::move(cells)}};
    return out.dump(1);
}

} // namespace gridcolor
