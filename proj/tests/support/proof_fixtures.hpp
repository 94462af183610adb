#pragma once

// Hand-built refutations and single-step proof mutations.

#include <gridcolor/encode.hpp>
#include <gridcolor/proofs.hpp>

#include <random>
#include <utility>
#include <vector>

namespace gridcolor::fixture {

/// (x) and (-x), refuted in three lines.
std::pair<CnfInstance, ResolutionProof> x_and_not_x();
/// All four 2-clauses over x, y; the derived clause (x) is used twice.
std::pair<CnfInstance, ResolutionProof> all_four_shared();

/// 2x1 + 2x2 <= 1, -x1 <= -1, -x2 <= 0, refuted with every rule.
std::pair<IlpInstance, CpProof> division_system();
/// The ILP of G(2,2) with one color, refuted by summing rows.
std::pair<IlpInstance, CpProof> grid_2x2_cp();

/// Changes one derived line: flips, drops or adds a literal, or moves the pivot.
ResolutionProof mutate(const ResolutionProof &proof, int var_count, std::mt19937_64 &rng);
/// Changes one line: a coefficient, the bound, or a MUL/DIV factor.
CpProof mutate(const CpProof &proof, std::mt19937_64 &rng);

} // namespace gridcolor::fixture
