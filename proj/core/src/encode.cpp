#include <gridcolor/encode.hpp>
#include <gridcolor/errors.hpp>

#include <algorithm>
#include <map>
#include <istream>
#include <ostream>
#include <sstream>

namespace gridcolor {

GridVariables::GridVariables(int rows, int cols, int colors) :
    rows_(rows),
    cols_(cols),
    colors_(colors)
{
    if (rows < 1 || cols < 1 || colors < 1)
        throw std::invalid_argument("grid variables need n, m, c >= 1");
}

int GridVariables::id(int row, int col, int color) const
{
    if (row < 1 || row > rows_ || col < 1 || col > cols_ || color < 1 || color > colors_)
        throw std::out_of_range("variable index out of range");
    return ((row - 1) * cols_ + (col - 1)) * colors_ + color;
}

GridVariables::Triple GridVariables::triple(int id) const
{
    if (id < 1 || id > count())
        throw std::out_of_range("variable id " + std::to_string(id) + " out of range");
    const int z = id - 1;
    const int color = z % colors_ + 1;
    const int cell = z / colors_;
    return Triple{cell / cols_ + 1, cell % cols_ + 1, color};
}

GridCnf build_cnf(int rows, int cols, int colors, const ShapeFamily &family)
{
    GridCnf out{GridVariables(rows, cols, colors), {}, 0, {}};
    out.cnf.var_count = out.vars.count();
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            Clause clause;
            for (int k = 1; k <= colors; ++k)
                clause.push_back(out.vars.id(i, j, k));
            out.cnf.clauses.push_back(std::move(clause));
        }
    out.color_clauses = out.cnf.clauses.size();

    for (auto &set : enumerate_forbidden_sets(GridDims(rows, cols), family)) {
        for (int k = 1; k <= colors; ++k) {
            Clause clause;
            for (Cell p : set)
                clause.push_back(-out.vars.id(p, k));
            out.cnf.clauses.push_back(std::move(clause));
            out.sets.push_back(set);
        }
    }
    return out;
}

bool satisfies(const CnfInstance &cnf, const Model &model)
{
    return std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const Clause &clause) {
        return std::any_of(clause.begin(), clause.end(), [&](Literal l) { return model.satisfies(l); });
    });
}

NoColor::NoColor(Cell cell) :
    std::runtime_error("cell " + to_string(cell) + " has no true color variable"),
    cell_(cell)
{
}

PartialColoring decode_model(const Model &model, int rows, int cols, int colors)
{
    GridVariables vars(rows, cols, colors);
    if (model.var_count() < vars.count())
        throw std::invalid_argument("model has fewer variables than the grid encoding");
    PartialColoring out(GridDims(rows, cols), colors);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            Color found = kBlank;
            for (int k = 1; k <= colors && found == kBlank; ++k)
                if (model.value(vars.id(i, j, k)))
                    found = k;
            if (found == kBlank)
                throw NoColor(Cell{i, j});
            out.set(Cell{i, j}, found);
        }
    return out;
}

Model indicator_model(const PartialColoring &coloring)
{
    GridVariables vars(coloring.rows(), coloring.cols(), coloring.colors());
    Model model(vars.count());
    for (int i = 1; i <= coloring.rows(); ++i)
        for (int j = 1; j <= coloring.cols(); ++j) {
            const Color k = coloring.at(i, j);
            if (k == kBlank)
                throw std::invalid_argument("indicator model needs a total coloring");
            model.set(vars.id(i, j, k), true);
        }
    return model;
}

LinearRow make_row(std::vector<std::pair<int, long long>> terms, long long bound)
{
    std::map<int, long long> merged;
    for (auto [v, a] : terms)
        merged[v] += a;
    LinearRow row;
    row.bound = bound;
    for (auto [v, a] : merged)
        if (a != 0)
            row.terms.emplace_back(v, a);
    return row;
}

IlpInstance cnf_to_ilp(const CnfInstance &cnf)
{
    IlpInstance ilp;
    const int n = cnf.var_count;
    ilp.base_vars = n;
    for (int v = 1; v <= n; ++v) {
        ilp.rows.push_back(make_row({{v, 1}, {n + v, 1}}, 1));
        ilp.rows.push_back(make_row({{v, -1}, {n + v, -1}}, -1));
    }
    ilp.pairing_rows = ilp.rows.size();
    for (const auto &clause : cnf.clauses) {
        std::vector<std::pair<int, long long>> terms;
        for (Literal l : clause)
            terms.emplace_back(l > 0 ? l : n - l, -1);
        ilp.rows.push_back(make_row(std::move(terms), -1));
    }
    return ilp;
}

bool row_holds(const LinearRow &row, const std::vector<int> &values)
{
    long long lhs = 0;
    for (auto [v, a] : row.terms)
        lhs += a * values.at(static_cast<std::size_t>(v));
    return lhs <= row.bound;
}

std::vector<int> ilp_point(const IlpInstance &ilp, const Model &model)
{
    std::vector<int> values(static_cast<std::size_t>(ilp.var_count()) + 1, 0);
    for (int v = 1; v <= ilp.base_vars; ++v) {
        const bool x = v <= model.var_count() && model.value(v);
        values[static_cast<std::size_t>(v)] = x ? 1 : 0;
        values[static_cast<std::size_t>(v + ilp.base_vars)] = x ? 0 : 1;
    }
    return values;
}

std::string variable_name(const IlpInstance &ilp, int var)
{
    if (var > ilp.base_vars)
        return "~x" + std::to_string(var - ilp.base_vars);
    return "x" + std::to_string(var);
}

std::string format_row(const IlpInstance &ilp, const LinearRow &row)
{
    std::string out;
    for (auto [v, a] : row.terms) {
        if (! out.empty())
            out += ' ';
        out += std::to_string(a) + "*" + variable_name(ilp, v);
    }
    if (out.empty())
        out = "0";
    return out + " <= " + std::to_string(row.bound);
}

LinearRow parse_row(const std::string &text, int base_vars)
{
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;)
        tokens.push_back(t);
    if (tokens.size() < 3 || tokens[tokens.size() - 2] != "<=")
        throw std::invalid_argument("row must read `terms <= bound`: " + text);

    auto to_ll = [&](const std::string &s) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != s.size() || s.empty())
            throw std::invalid_argument("bad integer `" + s + "` in row: " + text);
        return v;
    };

    const long long bound = to_ll(tokens.back());
    std::vector<std::pair<int, long long>> terms;
    const std::size_t lhs_end = tokens.size() - 2;
    if (lhs_end == 1 && tokens[0] == "0")
        return make_row({}, bound);
    for (std::size_t i = 0; i < lhs_end; ++i) {
        const auto &tok = tokens[i];
        const auto star = tok.find('*');
        if (star == std::string::npos)
            throw std::invalid_argument("term `" + tok + "` lacks `coef*var`");
        const long long coef = to_ll(tok.substr(0, star));
        std::string name = tok.substr(star + 1);
        bool neg = false;
        if (! name.empty() && name[0] == '~') {
            neg = true;
            name.erase(0, 1);
        }
        if (name.size() < 2 || name[0] != 'x')
            throw std::invalid_argument("bad variable `" + tok.substr(star + 1) + "`");
        const long long v = to_ll(name.substr(1));
        if (v < 1 || v > base_vars)
            throw std::invalid_argument("variable `" + tok.substr(star + 1) + "` out of range");
        terms.emplace_back(static_cast<int>(neg ? v + base_vars : v), coef);
    }
    return make_row(std::move(terms), bound);
}

std::pair<int, int> gcc_instance(int colors)
{
    if (colors < 2)
        throw std::invalid_argument("gcc instance needs c >= 2");
    return {colors + 1, colors * (colors * (colors - 1) / 2) + 1};
}

std::pair<int, int> gcc_variant_instance(int colors)
{
    if (colors < 2)
        throw std::invalid_argument("gcc instance needs c >= 2");
    return {colors + 1, colors * ((colors + 1) * colors / 2) + 1};
}

void write_ilp(std::ostream &out, const IlpInstance &ilp)
{
    out << "# ilp vars=" << ilp.base_vars << " rows=" << ilp.rows.size() << " pairing=" << ilp.pairing_rows << '\n';
    for (const auto &row : ilp.rows)
        out << format_row(ilp, row) << '\n';
}

IlpInstance read_ilp(std::istream &in)
{
    IlpInstance ilp;
    std::string line;
    std::size_t lineno = 0, expected = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.rfind("c ", 0) == 0 || line == "c")
            continue;
        if (! header) {
            std::istringstream hs(line);
            std::string hash, tag, vars, rows, pairing;
            hs >> hash >> tag >> vars >> rows >> pairing;
            auto field = [&](const std::string &tok, const std::string &key) -> long long {
                if (tok.rfind(key + "=", 0) != 0)
                    throw ParseError(lineno, "expected `" + key + "=` in ILP header");
                try {
                    std::size_t used = 0;
                    const long long v = std::stoll(tok.substr(key.size() + 1), &used);
                    if (used + key.size() + 1 != tok.size() || v < 0)
                        throw std::invalid_argument(tok);
                    return v;
                }
                catch (const std::exception &) {
                    throw ParseError(lineno, "bad header field `" + tok + "`");
                }
            };
            if (hash != "#" || tag != "ilp")
                throw ParseError(lineno, "missing `# ilp` header");
            ilp.base_vars = static_cast<int>(field(vars, "vars"));
            expected = static_cast<std::size_t>(field(rows, "rows"));
            ilp.pairing_rows = pairing.empty() ? 0 : static_cast<std::size_t>(field(pairing, "pairing"));
            header = true;
            continue;
        }
        try {
            ilp.rows.push_back(parse_row(line, ilp.base_vars));
        }
        catch (const std::invalid_argument &e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (! header)
        throw ParseError(lineno, "missing `# ilp` header");
    if (ilp.rows.size() != expected)
        throw ParseError(lineno, "header announces " + std::to_string(expected) + " rows, found " + std::to_string(ilp.rows.size()));
    if (ilp.pairing_rows > ilp.rows.size())
        throw ParseError(lineno, "pairing count exceeds row count");
    return ilp;
}

} // namespace gridcolor
