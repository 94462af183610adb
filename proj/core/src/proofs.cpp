#include <gridcolor/proofs.hpp>

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace gridcolor {

namespace {

Clause canonical(Clause c)
{
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

bool contains(const Clause &sorted, Literal l)
{
    return std::binary_search(sorted.begin(), sorted.end(), l);
}

long long floor_div(long long a, long long d)
{
    long long q = a / d;
    if ((a % d != 0) && ((a < 0) != (d < 0)))
        --q;
    return q;
}

std::string clause_text(const Clause &c)
{
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? " " : "") + std::to_string(c[i]);
    return s + "}";
}

} // namespace

CheckResult check_resolution(const CnfInstance &phi, const ResolutionProof &proof)
{
    if (proof.lines.empty())
        return CheckResult::fail(0, "empty proof");

    std::set<Clause> axioms;
    for (const auto &c : phi.clauses)
        axioms.insert(canonical(c));

    std::vector<Clause> derived;
    derived.reserve(proof.lines.size());
    for (std::size_t i = 0; i < proof.lines.size(); ++i) {
        const auto &line = proof.lines[i];
        const std::size_t no = i + 1;
        Clause claimed = canonical(line.clause);
        for (Literal l : claimed)
            if (l == 0 || std::abs(l) > phi.var_count)
                return CheckResult::fail(no, "literal " + std::to_string(l) + " out of range");

        if (line.kind == ResolutionLine::Kind::Axiom) {
            if (! axioms.contains(claimed))
                return CheckResult::fail(no, "axiom " + clause_text(claimed) + " is not a clause of the formula");
        }
        else {
            if (line.a < 1 || line.a >= no || line.b < 1 || line.b >= no)
                return CheckResult::fail(no, "parent reference must point to an earlier line");
            const Clause &pa = derived[line.a - 1];
            const Clause &pb = derived[line.b - 1];
            const int x = line.pivot;
            if (x <= 0 || x > phi.var_count)
                return CheckResult::fail(no, "pivot " + std::to_string(x) + " is not a variable");
            const bool forward = contains(pa, x) && contains(pb, -x);
            const bool backward = contains(pa, -x) && contains(pb, x);
            if (! forward && ! backward)
                return CheckResult::fail(no, "pivot " + std::to_string(x) + " is not positive in one parent and negative in the other");
            Clause out;
            for (Literal l : pa)
                if (l != x && l != -x)
                    out.push_back(l);
            for (Literal l : pb)
                if (l != x && l != -x)
                    out.push_back(l);
            out = canonical(std::move(out));
            if (out != claimed)
                return CheckResult::fail(no, "resolvent is " + clause_text(out) + ", line claims " + clause_text(claimed));
        }
        derived.push_back(std::move(claimed));
    }
    if (! derived.back().empty())
        return CheckResult::fail(proof.lines.size(), "last line is not the empty clause");
    return CheckResult::ok();
}

bool is_tree_shaped(const ResolutionProof &proof)
{
    std::vector<int> uses(proof.lines.size() + 1, 0);
    for (const auto &line : proof.lines)
        if (line.kind == ResolutionLine::Kind::Resolve) {
            if (line.a < uses.size())
                ++uses[line.a];
            if (line.b < uses.size())
                ++uses[line.b];
        }
    for (std::size_t i = 1; i < proof.lines.size(); ++i)
        if (uses[i] > 1)
            return false;
    return true;
}

ResolutionProof unshare(const ResolutionProof &proof)
{
    ResolutionProof out;
    if (proof.lines.empty())
        return out;
    // Iterative post-order copy from the last line.
    struct Frame
    {
        std::size_t line;
        int stage;
        std::size_t left = 0;
    };
    std::vector<Frame> stack{{proof.lines.size(), 0}};
    std::vector<std::size_t> results;
    while (! stack.empty()) {
        Frame &f = stack.back();
        const auto &line = proof.lines.at(f.line - 1);
        if (line.kind == ResolutionLine::Kind::Axiom) {
            out.lines.push_back(line);
            results.push_back(out.lines.size());
            stack.pop_back();
            continue;
        }
        if (f.stage == 0) {
            f.stage = 1;
            stack.push_back({line.a, 0});
        }
        else if (f.stage == 1) {
            f.left = results.back();
            results.pop_back();
            f.stage = 2;
            stack.push_back({line.b, 0});
        }
        else {
            const std::size_t right = results.back();
            results.pop_back();
            out.lines.push_back(ResolutionLine::resolve(f.left, right, line.pivot, line.clause));
            results.push_back(out.lines.size());
            stack.pop_back();
        }
    }
    return out;
}

void write_resolution(std::ostream &out, const ResolutionProof &proof)
{
    for (const auto &line : proof.lines) {
        if (line.kind == ResolutionLine::Kind::Axiom)
            out << 'A';
        else
            out << "R " << line.a << ' ' << line.b << ' ' << line.pivot;
        for (Literal l : line.clause)
            out << ' ' << l;
        out << " 0\n";
    }
}

ResolutionProof read_resolution(std::istream &in)
{
    ResolutionProof proof;
    std::size_t lineno = 0;
    for (std::string text; std::getline(in, text);) {
        ++lineno;
        std::istringstream tokens(text);
        std::string tag;
        if (! (tokens >> tag) || tag[0] == '#')
            continue;
        ResolutionLine line;
        if (tag == "A")
            line.kind = ResolutionLine::Kind::Axiom;
        else if (tag == "R") {
            line.kind = ResolutionLine::Kind::Resolve;
            long long a = 0, b = 0, p = 0;
            if (! (tokens >> a >> b >> p) || a < 1 || b < 1 || p < 1)
                throw ParseError(lineno, "expected `R <a> <b> <pivot> <lits> 0`");
            line.a = static_cast<std::size_t>(a);
            line.b = static_cast<std::size_t>(b);
            line.pivot = static_cast<int>(p);
        }
        else
            throw ParseError(lineno, "unknown step `" + tag + "`");
        bool closed = false;
        for (long long l; tokens >> l;) {
            if (l == 0) {
                closed = true;
                break;
            }
            line.clause.push_back(static_cast<Literal>(l));
        }
        if (! closed)
            throw ParseError(lineno, "clause must end with 0");
        std::string extra;
        if (tokens >> extra)
            throw ParseError(lineno, "trailing text after 0");
        proof.lines.push_back(std::move(line));
    }
    return proof;
}

CheckResult check_cp(const IlpInstance &ilp, const CpProof &proof)
{
    if (proof.lines.empty())
        return CheckResult::fail(0, "empty proof");
    std::vector<LinearRow> rows;
    rows.reserve(proof.lines.size());
    for (std::size_t i = 0; i < proof.lines.size(); ++i) {
        const auto &line = proof.lines[i];
        const std::size_t no = i + 1;
        const LinearRow claimed = make_row(line.row.terms, line.row.bound);
        for (auto [v, a] : claimed.terms)
            if (v < 1 || v > ilp.var_count())
                return CheckResult::fail(no, "variable " + std::to_string(v) + " out of range");
        auto earlier = [&](std::size_t j) { return j >= 1 && j < no; };

        LinearRow expect;
        switch (line.kind) {
        case CpLine::Kind::Axiom:
            if (line.a < 1 || line.a > ilp.rows.size())
                return CheckResult::fail(no, "row id " + std::to_string(line.a) + " out of range");
            expect = ilp.rows[line.a - 1];
            break;
        case CpLine::Kind::Add: {
            if (! earlier(line.a) || ! earlier(line.b))
                return CheckResult::fail(no, "ADD must reference earlier lines");
            auto terms = rows[line.a - 1].terms;
            terms.insert(terms.end(), rows[line.b - 1].terms.begin(), rows[line.b - 1].terms.end());
            expect = make_row(std::move(terms), rows[line.a - 1].bound + rows[line.b - 1].bound);
            break;
        }
        case CpLine::Kind::Mul: {
            if (! earlier(line.a))
                return CheckResult::fail(no, "MUL must reference an earlier line");
            if (line.factor == 0)
                return CheckResult::fail(no, "MUL by 0 is degenerate");
            const long long d = line.factor < 0 ? -line.factor : line.factor;
            auto terms = rows[line.a - 1].terms;
            for (auto &t : terms)
                t.second *= d;
            expect = make_row(std::move(terms), rows[line.a - 1].bound * d);
            break;
        }
        case CpLine::Kind::Div: {
            if (! earlier(line.a))
                return CheckResult::fail(no, "DIV must reference an earlier line");
            if (line.factor <= 0)
                return CheckResult::fail(no, "DIV needs a positive divisor");
            auto terms = rows[line.a - 1].terms;
            for (auto &t : terms) {
                if (t.second % line.factor != 0)
                    return CheckResult::fail(no, "coefficient " + std::to_string(t.second) + " not divisible by " + std::to_string(line.factor));
                t.second /= line.factor;
            }
            expect = make_row(std::move(terms), floor_div(rows[line.a - 1].bound, line.factor));
            break;
        }
        }
        if (expect != claimed)
            return CheckResult::fail(no, "claimed row does not follow from the rule");
        rows.push_back(claimed);
    }
    const auto &last = rows.back();
    if (! last.terms.empty() || last.bound >= 0)
        return CheckResult::fail(proof.lines.size(), "last line is not 0 <= b with b < 0");
    return CheckResult::ok();
}

void write_cp(std::ostream &out, const IlpInstance &ilp, const CpProof &proof)
{
    for (const auto &line : proof.lines) {
        switch (line.kind) {
        case CpLine::Kind::Axiom: out << "A " << line.a; break;
        case CpLine::Kind::Add: out << "ADD " << line.a << ' ' << line.b; break;
        case CpLine::Kind::Mul: out << "MUL " << line.a << ' ' << line.factor; break;
        case CpLine::Kind::Div: out << "DIV " << line.a << ' ' << line.factor; break;
        }
        out << " : " << format_row(ilp, line.row) << '\n';
    }
}

CpProof read_cp(std::istream &in, int base_vars)
{
    CpProof proof;
    std::size_t lineno = 0;
    for (std::string text; std::getline(in, text);) {
        ++lineno;
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#')
            continue;
        const auto colon = text.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, "missing `: <row>` after the step");
        std::istringstream head(text.substr(0, colon));
        std::string tag;
        head >> tag;
        CpLine line;
        long long x = 0, y = 0;
        if (tag == "A") {
            line.kind = CpLine::Kind::Axiom;
            if (! (head >> x) || x < 1)
                throw ParseError(lineno, "expected `A <row-id>`");
            line.a = static_cast<std::size_t>(x);
        }
        else if (tag == "ADD") {
            line.kind = CpLine::Kind::Add;
            if (! (head >> x >> y) || x < 1 || y < 1)
                throw ParseError(lineno, "expected `ADD <i> <j>`");
            line.a = static_cast<std::size_t>(x);
            line.b = static_cast<std::size_t>(y);
        }
        else if (tag == "MUL" || tag == "DIV") {
            line.kind = tag == "MUL" ? CpLine::Kind::Mul : CpLine::Kind::Div;
            if (! (head >> x >> y) || x < 1)
                throw ParseError(lineno, "expected `" + tag + " <i> <d>`");
            line.a = static_cast<std::size_t>(x);
            line.factor = y;
        }
        else
            throw ParseError(lineno, "unknown step `" + tag + "`");
        std::string extra;
        if (head >> extra)
            throw ParseError(lineno, "trailing text before `:`");
        try {
            line.row = parse_row(text.substr(colon + 1), base_vars);
        }
        catch (const std::invalid_argument &e) {
            throw ParseError(lineno, e.what());
        }
        proof.lines.push_back(std::move(line));
    }
    return proof;
}

} // namespace gridcolor
