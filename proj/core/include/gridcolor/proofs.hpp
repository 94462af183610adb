#pragma once

// Checkers for resolution and cutting-planes refutations.
//
// Resolution file: one step per line,
//   A <lits> 0                  axiom clause
//   R <a> <b> <pivot> <lits> 0  resolve lines a and b on variable pivot
// Cutting-planes file: one step per line, the claimed row after a colon,
//   A <row-id> : <row>
//   ADD <i> <j> : <row>
//   MUL <i> <d> : <row>
//   DIV <i> <d> : <row>
// Line and row references are 1-based; `#` starts a comment line.

#include <gridcolor/encode.hpp>
#include <gridcolor/errors.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace gridcolor {

struct CheckResult
{
    bool valid = true;
    std::size_t line = 0; ///< 1-based offending line when invalid
    std::string reason;

    static CheckResult ok() { return {}; }
    static CheckResult fail(std::size_t line, std::string reason) { return {false, line, std::move(reason)}; }
    explicit operator bool() const noexcept { return valid; }
};

struct ResolutionLine
{
    enum class Kind
    {
        Axiom,
        Resolve
    };

    Kind kind = Kind::Axiom;
    std::size_t a = 0, b = 0; ///< parent lines (Resolve)
    int pivot = 0;            ///< variable (Resolve)
    Clause clause;

    static ResolutionLine axiom(Clause c) { return {Kind::Axiom, 0, 0, 0, std::move(c)}; }
    static ResolutionLine resolve(std::size_t a, std::size_t b, int pivot, Clause c) { return {Kind::Resolve, a, b, pivot, std::move(c)}; }

    friend bool operator==(const ResolutionLine &, const ResolutionLine &) = default;
};

struct ResolutionProof
{
    std::vector<ResolutionLine> lines;

    std::size_t size() const noexcept { return lines.size(); }
    friend bool operator==(const ResolutionProof &, const ResolutionProof &) = default;
};

CheckResult check_resolution(const CnfInstance &phi, const ResolutionProof &proof);

/// Every line except the last is used as a parent at most once.
bool is_tree_shaped(const ResolutionProof &proof);

/// Copies shared subproofs so each use gets its own; the result is tree-shaped
/// and derives the same final clause.
ResolutionProof unshare(const ResolutionProof &proof);

void write_resolution(std::ostream &out, const ResolutionProof &proof);
ResolutionProof read_resolution(std::istream &in);

struct CpLine
{
    enum class Kind
    {
        Axiom,
        Add,
        Mul,
        Div
    };

    Kind kind = Kind::Axiom;
    std::size_t a = 0, b = 0; ///< Axiom: a is the row id; Add: both lines; Mul/Div: a
    long long factor = 0;     ///< Mul/Div
    LinearRow row;

    friend bool operator==(const CpLine &, const CpLine &) = default;
};

struct CpProof
{
    std::vector<CpLine> lines;

    std::size_t size() const noexcept { return lines.size(); }
};

/// Rows are compared after normalisation (sorted variables, zeros dropped).
/// MUL by 0 is rejected; MUL by negative d yields |d| times the row, which is
/// the same inequality read in <= form. DIV needs every coefficient divisible
/// by d > 0 and floors the bound. The last line must read 0 <= b with b < 0.
CheckResult check_cp(const IlpInstance &ilp, const CpProof &proof);

void write_cp(std::ostream &out, const IlpInstance &ilp, const CpProof &proof);
CpProof read_cp(std::istream &in, int base_vars);

} // namespace gridcolor
