#include <gridcolor/dimacs.hpp>

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace gridcolor {

namespace {

bool parse_int(const std::string &token, long long &out)
{
    if (token.empty())
        return false;
    char *end = nullptr;
    out = std::strtoll(token.c_str(), &end, 10);
    return *end == '\0';
}

} // namespace

void write_dimacs(std::ostream &out, const CnfInstance &cnf, const std::vector<std::string> &comments)
{
    for (const auto &c : comments)
        out << "c " << c << '\n';
    out << "p cnf " << cnf.var_count << ' ' << cnf.clauses.size() << '\n';
    for (const auto &clause : cnf.clauses) {
        for (Literal l : clause)
            out << l << ' ';
        out << "0\n";
    }
}

std::string to_dimacs(const CnfInstance &cnf)
{
    std::ostringstream out;
    write_dimacs(out, cnf);
    return out.str();
}

CnfInstance parse_dimacs(std::istream &in)
{
    CnfInstance cnf;
    std::optional<long long> declared;
    std::size_t header_line = 0;
    std::size_t lineno = 0;
    Clause pending;
    bool open = false;

    for (std::string line; std::getline(in, line);) {
        ++lineno;
        std::istringstream tokens(line);
        std::string first;
        if (! (tokens >> first))
            continue;
        if (first == "c" || first[0] == 'c')
            continue;
        if (first == "%")
            break;
        if (first == "p") {
            if (declared)
                throw ParseError(lineno, "duplicate problem line");
            std::string fmt, vs, cs, extra;
            long long v = 0, c = 0;
            if (! (tokens >> fmt >> vs >> cs) || fmt != "cnf" || ! parse_int(vs, v) || ! parse_int(cs, c) || v < 0 || c < 0)
                throw ParseError(lineno, "expected `p cnf <vars> <clauses>`");
            if (tokens >> extra)
                throw ParseError(lineno, "trailing text after problem line");
            cnf.var_count = static_cast<int>(v);
            declared = c;
            header_line = lineno;
            continue;
        }
        if (! declared)
            throw ParseError(lineno, "clause before `p cnf` header");

        std::string tok = first;
        do {
            long long lit = 0;
            if (! parse_int(tok, lit))
                throw ParseError(lineno, "bad literal `" + tok + "`");
            if (lit == 0) {
                cnf.clauses.push_back(std::move(pending));
                pending.clear();
                open = false;
                continue;
            }
            if (lit > cnf.var_count || -lit > cnf.var_count)
                throw ParseError(lineno, "literal " + tok + " exceeds declared variable count " + std::to_string(cnf.var_count));
            pending.push_back(static_cast<Literal>(lit));
            open = true;
        } while (tokens >> tok);
    }

    if (! declared)
        throw ParseError(lineno == 0 ? 1 : lineno, "missing `p cnf` header");
    if (open)
        throw ParseError(lineno, "last clause is not terminated by 0");
    if (static_cast<long long>(cnf.clauses.size()) != *declared)
        throw ParseError(header_line, "header declares " + std::to_string(*declared) + " clauses but " + std::to_string(cnf.clauses.size()) + " were read");
    return cnf;
}

Model parse_dimacs_model(std::istream &in, std::optional<int> var_count)
{
    std::vector<std::pair<int, bool>> values;
    int max_var = var_count.value_or(0);
    std::size_t lineno = 0;
    bool ended = false;

    for (std::string line; ! ended && std::getline(in, line);) {
        ++lineno;
        std::istringstream tokens(line);
        std::string tok;
        if (! (tokens >> tok))
            continue;
        if (tok == "c" || tok == "s" || tok[0] == 'c' || tok[0] == 's')
            continue;
        if (tok == "v" && ! (tokens >> tok))
            continue;
        do {
            if (tok == "v")
                continue;
            long long lit = 0;
            if (! parse_int(tok, lit))
                throw ParseError(lineno, "bad model literal `" + tok + "`");
            if (lit == 0) {
                ended = true;
                break;
            }
            const long long var = lit < 0 ? -lit : lit;
            if (var_count && var > *var_count)
                throw ParseError(lineno, "model variable " + std::to_string(var) + " exceeds " + std::to_string(*var_count));
            if (var > 1'000'000'000)
                throw ParseError(lineno, "model variable out of range");
            values.emplace_back(static_cast<int>(var), lit > 0);
            if (static_cast<int>(var) > max_var && ! var_count)
                max_var = static_cast<int>(var);
        } while (tokens >> tok);
    }

    Model model(max_var);
    for (auto [v, b] : values)
        model.set(v, b);
    return model;
}

} // namespace gridcolor
