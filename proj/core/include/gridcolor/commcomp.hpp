#pragma once

// Promise communication problems, the answer-preserving input
// transformations between them, and the violated-inequality finder.

#include <gridcolor/encode.hpp>
#include <gridcolor/grid.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridcolor {

enum class Problem
{
    Disj,
    PrDisj,
    Um,
    PrUm,
    PrMeet,
    PhpSet,
    PhpStr
};

std::string to_string(Problem problem);

class PromiseViolation : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Bit strings are stored one entry (0 or 1) per position, index 0 = position 1.
using Bits = std::vector<int>;
/// Parses "0110". Throws std::invalid_argument.
Bits parse_bits(const std::string &text);
std::string format_bits(const Bits &bits);
int weight(const Bits &bits);

/// Symbols are 1..|alphabet|. Sets are sorted; strings keep their order.
using Symbols = std::vector<int>;

struct PromiseInstance
{
    Problem problem = Problem::PrUm;
    Bits x, y;             ///< bit-string problems
    Symbols a, b;          ///< PhpSet (sets) and PhpStr (strings)
    int alphabet = 0;      ///< PhpSet / PhpStr: 2k-1 for inputs of size k

    static PromiseInstance bits(Problem p, Bits x, Bits y);
    static PromiseInstance symbols(Problem p, Symbols a, Symbols b, int alphabet);
};

struct Answer
{
    enum class Kind
    {
        Index,  ///< 1-based position
        Pair,   ///< (i, j), 1-based
        Symbol,
        Boolean ///< true = the inputs intersect
    };
    Kind kind = Kind::Index;
    int index = 0;
    int i = 0, j = 0;
    int symbol = 0;
    bool flag = false;

    friend bool operator==(const Answer &, const Answer &) = default;
};

std::string to_string(const Answer &answer);

/// Throws PromiseViolation when the inputs break the problem's promise.
void check_promise(const PromiseInstance &inst);

/// Ground truth with both inputs visible. Checks the promise first.
Answer solve_brute(const PromiseInstance &inst);

/// (x, complement of y).
std::pair<Bits, Bits> reduce_prum_to_prmeet(const Bits &x, const Bits &y);
/// Indices of the 1s of x and y over alphabet 1..n.
std::pair<Symbols, Symbols> reduce_prmeet_to_phpset(const Bits &x, const Bits &y);
/// The sets written out in increasing order.
std::pair<Symbols, Symbols> reduce_phpset_to_phpstr(const Symbols &a, const Symbols &b, int alphabet);

/// Back maps: a PHPstr pair to the symbol x'_i, a symbol to its position.
int phpstr_answer_to_symbol(const Symbols &x_str, const Answer &pair);
inline int symbol_to_index(int symbol) { return symbol; }

struct ChainCheck
{
    int n = 0;
    std::uint64_t instances = 0;
    std::uint64_t prmeet_promise_ok = 0;
    std::uint64_t phpset_promise_ok = 0;
    std::uint64_t phpstr_promise_ok = 0;
    std::uint64_t answers_agree = 0;

    bool all_ok() const noexcept
    {
        return instances > 0 && prmeet_promise_ok == instances && phpset_promise_ok == instances && phpstr_promise_ok == instances
            && answers_agree == instances;
    }
};

/// Every PrUM instance of length n (odd): C(n,m)*m pairs with m = (n+1)/2.
std::vector<std::pair<Bits, Bits>> all_prum_instances(int n);

/// Runs PrUM -> PrMeet -> PHPset -> PHPstr on every instance and maps the
/// PHPstr answer back.
ChainCheck verify_chain(int n);

/// Owner of each ILP variable (index 1..2V): 0 = Alice, 1 = Bob.
struct Partition
{
    std::vector<int> owner;
};

/// Alice holds every variable (and complement) of cells in columns 1..ceil(m/2).
Partition column_split(const GridVariables &vars, const IlpInstance &ilp);

/// Takes each variable's value from its owner's vector.
std::vector<int> combine(const Partition &partition, const std::vector<int> &alice, const std::vector<int> &bob);

class NoViolation : public std::runtime_error
{
public:
    NoViolation() : std::runtime_error("assignment satisfies every row") {}
};

/// Least 1-based row id violated by the 0-1 vector (index 1..2V). Throws NoViolation.
std::size_t fi_find_violation(const IlpInstance &ilp, const std::vector<int> &values);

/// Random (c+1) x cols coloring where every column uses c-1 colors once and
/// one color twice.
PartialColoring sample_column_restricted(int colors, int cols, std::mt19937_64 &rng);

/// (repeated color, upper row, lower row) of a column of such a coloring.
struct ColumnSymbol
{
    int color = 0, row1 = 0, row2 = 0;
    friend bool operator==(const ColumnSymbol &, const ColumnSymbol &) = default;
};
ColumnSymbol column_symbol(const PartialColoring &coloring, int col);

/// True when c*C(c,2)+1 is even, i.e. c = 3 (mod 4).
bool gcc_parity_covered(int colors);

} // namespace gridcolor
