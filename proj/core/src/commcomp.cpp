#include <gridcolor/commcomp.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace gridcolor {

std::string to_string(Problem problem)
{
    switch (problem) {
    case Problem::Disj: return "DISJ";
    case Problem::PrDisj: return "PrDISJ";
    case Problem::Um: return "UM";
    case Problem::PrUm: return "PrUM";
    case Problem::PrMeet: return "PrMeet";
    case Problem::PhpSet: return "PHPset";
    case Problem::PhpStr: return "PHPstr";
    }
    return "?";
}

Bits parse_bits(const std::string &text)
{
    Bits out;
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("bit string may only contain 0 and 1: " + text);
        out.push_back(ch - '0');
    }
    return out;
}

std::string format_bits(const Bits &bits)
{
    std::string s;
    for (int b : bits)
        s += static_cast<char>('0' + b);
    return s;
}

int weight(const Bits &bits)
{
    return static_cast<int>(std::count(bits.begin(), bits.end(), 1));
}

PromiseInstance PromiseInstance::bits(Problem p, Bits x, Bits y)
{
    PromiseInstance inst;
    inst.problem = p;
    inst.x = std::move(x);
    inst.y = std::move(y);
    return inst;
}

PromiseInstance PromiseInstance::symbols(Problem p, Symbols a, Symbols b, int alphabet)
{
    PromiseInstance inst;
    inst.problem = p;
    inst.a = std::move(a);
    inst.b = std::move(b);
    inst.alphabet = alphabet;
    return inst;
}

std::string to_string(const Answer &answer)
{
    switch (answer.kind) {
    case Answer::Kind::Index: return "i=" + std::to_string(answer.index);
    case Answer::Kind::Pair: return "(i,j)=(" + std::to_string(answer.i) + "," + std::to_string(answer.j) + ")";
    case Answer::Kind::Symbol: return "sigma=" + std::to_string(answer.symbol);
    case Answer::Kind::Boolean: return answer.flag ? "intersect" : "disjoint";
    }
    return "?";
}

namespace {

void need(bool condition, const std::string &problem, const std::string &what)
{
    if (! condition)
        throw PromiseViolation(problem + " promise violated: " + what);
}

void check_bits(const Bits &x, const Bits &y, const std::string &name)
{
    need(x.size() == y.size(), name, "inputs differ in length");
    need(! x.empty(), name, "empty input");
    for (int v : x)
        need(v == 0 || v == 1, name, "non-binary entry");
    for (int v : y)
        need(v == 0 || v == 1, name, "non-binary entry");
}

void check_symbols(const Symbols &s, int alphabet, const std::string &name)
{
    std::set<int> seen;
    for (int v : s) {
        need(v >= 1 && v <= alphabet, name, "symbol " + std::to_string(v) + " outside the alphabet");
        need(seen.insert(v).second, name, "repeated symbol " + std::to_string(v));
    }
}

} // namespace

void check_promise(const PromiseInstance &inst)
{
    const std::string name = to_string(inst.problem);
    switch (inst.problem) {
    case Problem::Disj:
        check_bits(inst.x, inst.y, name);
        return;
    case Problem::PrDisj: {
        check_bits(inst.x, inst.y, name);
        need(inst.x.size() % 2 == 1, name, "length must be odd");
        int common = 0;
        for (std::size_t i = 0; i < inst.x.size(); ++i)
            common += inst.x[i] & inst.y[i];
        need(common <= 1, name, "more than one common 1");
        return;
    }
    case Problem::Um: {
        check_bits(inst.x, inst.y, name);
        bool any = false;
        for (std::size_t i = 0; i < inst.x.size(); ++i)
            any = any || (inst.x[i] == 1 && inst.y[i] == 0);
        need(any, name, "no position with x=1, y=0");
        return;
    }
    case Problem::PrUm: {
        check_bits(inst.x, inst.y, name);
        const int n = static_cast<int>(inst.x.size());
        need(n % 2 == 1, name, "length must be odd");
        const int m = (n + 1) / 2;
        need(weight(inst.x) == m, name, "w(x) must be " + std::to_string(m));
        need(weight(inst.y) == m - 1, name, "w(y) must be " + std::to_string(m - 1));
        int d = 0;
        for (int i = 0; i < n; ++i)
            d += inst.x[static_cast<std::size_t>(i)] != inst.y[static_cast<std::size_t>(i)];
        need(d == 1, name, "Hamming distance must be 1");
        return;
    }
    case Problem::PrMeet: {
        check_bits(inst.x, inst.y, name);
        const int n = static_cast<int>(inst.x.size());
        need(n % 2 == 1, name, "length must be odd");
        const int m = (n + 1) / 2;
        need(weight(inst.x) == m && weight(inst.y) == m, name, "both weights must be " + std::to_string(m));
        int both = 0;
        for (int i = 0; i < n; ++i) {
            const int xi = inst.x[static_cast<std::size_t>(i)], yi = inst.y[static_cast<std::size_t>(i)];
            if (xi == 1 && yi == 1)
                ++both;
            else
                need(xi != yi, name, "position " + std::to_string(i + 1) + " is (0,0)");
        }
        need(both == 1, name, "need exactly one common 1");
        return;
    }
    case Problem::PhpSet:
    case Problem::PhpStr: {
        const std::size_t k = inst.a.size();
        need(k >= 1 && inst.b.size() == k, name, "inputs must have equal nonzero size");
        need(inst.alphabet == static_cast<int>(2 * k - 1), name, "alphabet size must be 2k-1");
        check_symbols(inst.a, inst.alphabet, name);
        check_symbols(inst.b, inst.alphabet, name);
        if (inst.problem == Problem::PhpSet)
            need(std::is_sorted(inst.a.begin(), inst.a.end()) && std::is_sorted(inst.b.begin(), inst.b.end()), name, "sets must be listed in order");
        int common = 0;
        for (int v : inst.a)
            common += static_cast<int>(std::count(inst.b.begin(), inst.b.end(), v));
        need(common == 1, name, "need exactly one common symbol, found " + std::to_string(common));
        return;
    }
    }
}

Answer solve_brute(const PromiseInstance &inst)
{
    check_promise(inst);
    Answer ans;
    switch (inst.problem) {
    case Problem::Disj:
    case Problem::PrDisj:
        ans.kind = Answer::Kind::Boolean;
        for (std::size_t i = 0; i < inst.x.size(); ++i)
            ans.flag = ans.flag || (inst.x[i] == 1 && inst.y[i] == 1);
        return ans;
    case Problem::Um:
    case Problem::PrUm:
        ans.kind = Answer::Kind::Index;
        for (std::size_t i = 0; i < inst.x.size(); ++i)
            if (inst.x[i] == 1 && inst.y[i] == 0) {
                ans.index = static_cast<int>(i) + 1;
                break;
            }
        return ans;
    case Problem::PrMeet:
        ans.kind = Answer::Kind::Index;
        for (std::size_t i = 0; i < inst.x.size(); ++i)
            if (inst.x[i] == 1 && inst.y[i] == 1)
                ans.index = static_cast<int>(i) + 1;
        return ans;
    case Problem::PhpSet:
        ans.kind = Answer::Kind::Symbol;
        for (int v : inst.a)
            if (std::count(inst.b.begin(), inst.b.end(), v))
                ans.symbol = v;
        return ans;
    case Problem::PhpStr:
        ans.kind = Answer::Kind::Pair;
        for (std::size_t i = 0; i < inst.a.size(); ++i)
            for (std::size_t j = 0; j < inst.b.size(); ++j)
                if (inst.a[i] == inst.b[j]) {
                    ans.i = static_cast<int>(i) + 1;
                    ans.j = static_cast<int>(j) + 1;
                }
        return ans;
    }
    return ans;
}

std::pair<Bits, Bits> reduce_prum_to_prmeet(const Bits &x, const Bits &y)
{
    check_promise(PromiseInstance::bits(Problem::PrUm, x, y));
    Bits ybar = y;
    for (int &b : ybar)
        b = 1 - b;
    return {x, ybar};
}

std::pair<Symbols, Symbols> reduce_prmeet_to_phpset(const Bits &x, const Bits &y)
{
    check_promise(PromiseInstance::bits(Problem::PrMeet, x, y));
    Symbols a, b;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i])
            a.push_back(static_cast<int>(i) + 1);
        if (y[i])
            b.push_back(static_cast<int>(i) + 1);
    }
    return {a, b};
}

std::pair<Symbols, Symbols> reduce_phpset_to_phpstr(const Symbols &a, const Symbols &b, int alphabet)
{
    check_promise(PromiseInstance::symbols(Problem::PhpSet, a, b, alphabet));
    Symbols xs = a, ys = b;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    return {xs, ys};
}

int phpstr_answer_to_symbol(const Symbols &x_str, const Answer &pair)
{
    if (pair.kind != Answer::Kind::Pair || pair.i < 1 || pair.i > static_cast<int>(x_str.size()))
        throw std::invalid_argument("not a PHPstr answer for this string");
    return x_str[static_cast<std::size_t>(pair.i - 1)];
}

std::vector<std::pair<Bits, Bits>> all_prum_instances(int n)
{
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("PrUM length must be odd");
    const int m = (n + 1) / 2;
    std::vector<std::pair<Bits, Bits>> out;
    Bits x(static_cast<std::size_t>(n), 0);
    std::fill(x.begin(), x.begin() + m, 1);
    std::sort(x.begin(), x.end());
    do {
        for (int i = 0; i < n; ++i)
            if (x[static_cast<std::size_t>(i)]) {
                Bits y = x;
                y[static_cast<std::size_t>(i)] = 0;
                out.emplace_back(x, std::move(y));
            }
    } while (std::next_permutation(x.begin(), x.end()));
    return out;
}

ChainCheck verify_chain(int n)
{
    ChainCheck check;
    check.n = n;
    auto promise_ok = [](const PromiseInstance &inst) {
        try {
            check_promise(inst);
            return true;
        }
        catch (const PromiseViolation &) {
            return false;
        }
    };
    for (const auto &[x, y] : all_prum_instances(n)) {
        ++check.instances;
        const Answer truth = solve_brute(PromiseInstance::bits(Problem::PrUm, x, y));
        try {
            const auto [mx, my] = reduce_prum_to_prmeet(x, y);
            if (! promise_ok(PromiseInstance::bits(Problem::PrMeet, mx, my)))
                continue;
            ++check.prmeet_promise_ok;
            const auto [sa, sb] = reduce_prmeet_to_phpset(mx, my);
            const int alphabet = n;
            if (! promise_ok(PromiseInstance::symbols(Problem::PhpSet, sa, sb, alphabet)))
                continue;
            ++check.phpset_promise_ok;
            const auto [xs, ys] = reduce_phpset_to_phpstr(sa, sb, alphabet);
            const auto str = PromiseInstance::symbols(Problem::PhpStr, xs, ys, alphabet);
            if (! promise_ok(str))
                continue;
            ++check.phpstr_promise_ok;
            const Answer pair = solve_brute(str);
            const int index = symbol_to_index(phpstr_answer_to_symbol(xs, pair));
            if (index == truth.index)
                ++check.answers_agree;
        }
        catch (const PromiseViolation &) {
        }
    }
    return check;
}

Partition column_split(const GridVariables &vars, const IlpInstance &ilp)
{
    if (ilp.base_vars != vars.count())
        throw std::invalid_argument("ILP does not match the grid variables");
    Partition p;
    p.owner.assign(static_cast<std::size_t>(ilp.var_count()) + 1, 1);
    const int half = (vars.cols() + 1) / 2;
    for (int v = 1; v <= vars.count(); ++v) {
        const int owner = vars.triple(v).col <= half ? 0 : 1;
        p.owner[static_cast<std::size_t>(v)] = owner;
        p.owner[static_cast<std::size_t>(ilp.complement(v))] = owner;
    }
    return p;
}

std::vector<int> combine(const Partition &partition, const std::vector<int> &alice, const std::vector<int> &bob)
{
    if (alice.size() != partition.owner.size() || bob.size() != partition.owner.size())
        throw std::invalid_argument("assignment vectors must cover every variable");
    std::vector<int> out(partition.owner.size(), 0);
    for (std::size_t v = 1; v < out.size(); ++v)
        out[v] = partition.owner[v] == 0 ? alice[v] : bob[v];
    return out;
}

std::size_t fi_find_violation(const IlpInstance &ilp, const std::vector<int> &values)
{
    if (values.size() != static_cast<std::size_t>(ilp.var_count()) + 1)
        throw std::invalid_argument("assignment must give a value to every ILP variable");
    for (std::size_t i = 0; i < ilp.rows.size(); ++i)
        if (! row_holds(ilp.rows[i], values))
            return i + 1;
    throw NoViolation();
}

PartialColoring sample_column_restricted(int colors, int cols, std::mt19937_64 &rng)
{
    if (colors < 2 || cols < 1)
        throw std::invalid_argument("sampler needs c >= 2 and at least one column");
    const int rows = colors + 1;
    PartialColoring out(GridDims(rows, cols), colors);
    std::vector<int> palette(static_cast<std::size_t>(colors));
    std::iota(palette.begin(), palette.end(), 1);
    for (int j = 1; j <= cols; ++j) {
        // c+1 entries: every color once plus one repeat, shuffled into the rows
        std::vector<int> column = palette;
        std::uniform_int_distribution<int> pick(1, colors);
        column.push_back(pick(rng));
        std::shuffle(column.begin(), column.end(), rng);
        for (int i = 1; i <= rows; ++i)
            out.set(Cell{i, j}, column[static_cast<std::size_t>(i - 1)]);
    }
    return out;
}

ColumnSymbol column_symbol(const PartialColoring &coloring, int col)
{
    for (int r1 = 1; r1 <= coloring.rows(); ++r1)
        for (int r2 = r1 + 1; r2 <= coloring.rows(); ++r2)
            if (coloring.at(r1, col) != kBlank && coloring.at(r1, col) == coloring.at(r2, col))
                return ColumnSymbol{coloring.at(r1, col), r1, r2};
    throw std::invalid_argument("column has no repeated color");
}

bool gcc_parity_covered(int colors)
{
    return colors % 4 == 3;
}

} // namespace gridcolor
