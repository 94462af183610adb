#include <gridcolor/grid_io.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace gridcolor {

namespace {

bool is_skippable(const std::string &line)
{
    auto it = std::find_if_not(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); });
    return it == line.end() || *it == '#';
}

std::vector<std::string> tokens_of(const std::string &line)
{
    std::istringstream ss(line);
    std::vector<std::string> result;
    for (std::string t; ss >> t;)
        result.push_back(t);
    return result;
}

long long parse_integer(const std::string &token, std::size_t line)
{
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    }
    catch (const std::exception &) {
        throw ParseError(line, "expected an integer, got '" + token + "'");
    }
    if (used != token.size())
        throw ParseError(line, "expected an integer, got '" + token + "'");
    return value;
}

} // namespace

PartialColoring read_grid(std::istream &in)
{
    std::string line;
    std::size_t line_no = 0;
    std::vector<long long> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_skippable(line))
            continue;
        for (auto &t : tokens_of(line))
            header.push_back(parse_integer(t, line_no));
        break;
    }
    if (header.size() != 3)
        throw ParseError(line_no, "grid header must be `N M c`");
    if (header[0] < 1 || header[1] < 1 || header[2] < 1)
        throw ParseError(line_no, "grid header values must be positive");

    PartialColoring result(GridDims(static_cast<int>(header[0]), static_cast<int>(header[1])), static_cast<int>(header[2]));
    int row = 0;
    while (row < result.rows() && std::getline(in, line)) {
        ++line_no;
        if (is_skippable(line))
            continue;
        ++row;
        auto toks = tokens_of(line);
        if (static_cast<int>(toks.size()) != result.cols())
            throw ParseError(line_no, "expected " + std::to_string(result.cols()) + " tokens, got " + std::to_string(toks.size()));
        for (int col = 1; col <= result.cols(); ++col) {
            const auto &t = toks[static_cast<std::size_t>(col - 1)];
            if (t == ".")
                continue;
            long long k = parse_integer(t, line_no);
            if (k < 1 || k > result.colors())
                throw ParseError(line_no, "color " + t + " outside [1," + std::to_string(result.colors()) + "]");
            result.set(Cell{row, col}, static_cast<Color>(k));
        }
    }
    if (row != result.rows())
        throw ParseError(line_no, "expected " + std::to_string(result.rows()) + " grid rows, got " + std::to_string(row));
    return result;
}

void write_grid(std::ostream &out, const PartialColoring &coloring)
{
    out << coloring.rows() << ' ' << coloring.cols() << ' ' << coloring.colors() << '\n';
    for (int r = 1; r <= coloring.rows(); ++r) {
        for (int c = 1; c <= coloring.cols(); ++c) {
            if (c > 1)
                out << ' ';
            Color k = coloring.at(r, c);
            if (k == kBlank)
                out << '.';
            else
                out << k;
        }
        out << '\n';
    }
}

std::string format_grid(const PartialColoring &coloring)
{
    std::ostringstream ss;
    write_grid(ss, coloring);
    return ss.str();
}

ShapeFamily read_shape(std::istream &in)
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<StretchMode> mode;
    std::vector<LatticePoint> points;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_skippable(line))
            continue;
        auto toks = tokens_of(line);
        if (toks.front() == "mode:" || toks.front().rfind("mode:", 0) == 0) {
            std::string value = toks.front() == "mode:" ? (toks.size() > 1 ? toks[1] : "") : toks.front().substr(5);
            std::transform(value.begin(), value.end(), value.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
            if (value == "full")
                mode = StretchMode::Full;
            else if (value == "half")
                mode = StretchMode::Half;
            else
                throw ParseError(line_no, "mode must be `full` or `half`");
            continue;
        }
        if (toks.size() != 2)
            throw ParseError(line_no, "expected `x y`");
        points.push_back(LatticePoint{parse_integer(toks[0], line_no), parse_integer(toks[1], line_no)});
    }
    if (! mode)
        throw ParseError(line_no, "missing `mode: full|half` header");
    try {
        return ShapeFamily(std::move(points), *mode);
    }
    catch (const std::invalid_argument &e) {
        throw ParseError(line_no, e.what());
    }
}

void write_shape(std::ostream &out, const ShapeFamily &family)
{
    out << "mode: " << (family.mode() == StretchMode::Full ? "full" : "half") << '\n';
    for (const auto &p : family.generator())
        out << p.x << ' ' << p.y << '\n';
}

PartialColoring load_grid_file(const std::string &path)
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open grid file " + path);
    return read_grid(in);
}

ShapeFamily load_shape_file(const std::string &path)
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open shape file " + path);
    return read_shape(in);
}

} // namespace gridcolor
