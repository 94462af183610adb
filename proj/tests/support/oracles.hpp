#pragma once

// Brute-force reference implementations used as test oracles. They share no
// search code with the library: every answer comes from plain enumeration.

#include <gridcolor/encode.hpp>
#include <gridcolor/grid.hpp>
#include <gridcolor/reduction.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace gridcolor::oracle {

/// All axis-parallel rectangles {(a,b),(a,b'),(a',b),(a',b')}, a<a', b<b'.
std::vector<ForbiddenSet> four_corner_rectangles(int rows, int cols);

bool has_mono(const PartialColoring &pc, const std::vector<ForbiddenSet> &sets);

/// Tries every completion of the blanks in odometer order.
std::optional<PartialColoring> naive_extension(const PartialColoring &pc, const std::vector<ForbiddenSet> &sets);

/// c-colorability of the blank grid by full enumeration of c^(nm) colorings.
bool naive_colorable(int rows, int cols, int colors, const std::vector<ForbiddenSet> &sets);

/// Satisfiability by enumerating all 2^V assignments (V <= 26).
bool brute_sat(const CnfInstance &cnf);
bool brute_sat(const ThreeCnf &phi);
std::optional<std::vector<bool>> brute_model(const ThreeCnf &phi);

/// Every 3-CNF with exactly n variables (all used), 1 <= n <= max_vars, and
/// 1..max_clauses clauses, one representative per class under variable
/// permutation and sign flips. Literals inside a clause and the clauses
/// themselves are sorted.
std::vector<ThreeCnf> canonical_three_cnfs(int max_vars, int max_clauses);

/// 0-1 feasibility of an inequality system by depth-first search over
/// variables 1..2V with a bound check on every row after each assignment.
bool ilp_feasible(const IlpInstance &ilp);

/// Uniform random partial coloring; each cell blank with probability p_blank.
PartialColoring random_partial(int rows, int cols, int colors, double p_blank, std::mt19937_64 &rng);

/// Minimum points the Prover can hold the Delayer to, by full game-tree
/// search with the Delayer strategy written out from its definition.
double game_value(int rows, int cols, int colors, const ShapeFamily &family, double a, double r);

} // namespace gridcolor::oracle
