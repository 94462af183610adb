#pragma once

// Tree-shaped resolution refutations exported from a DPLL search.

#include <gridcolor/encode.hpp>
#include <gridcolor/proofs.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace gridcolor {

struct RefutationOptions
{
    /// Decision variables in this order; empty means 1..V.
    std::vector<int> order;
    /// Value tried first at each decision.
    bool false_first = true;
    std::uint64_t max_lines = 50'000'000;
};

struct RefutationStats
{
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t propagations = 0;
};

struct Refutation
{
    ResolutionProof proof;
    RefutationStats stats;
};

/// Unit propagation plus chronological branching. Each conflict becomes an
/// axiom resolved against the reasons of the current level; branches whose
/// clause avoids the decision literal are returned without trying the other
/// value. Unused lines are dropped. Returns nullopt when the formula is
/// satisfiable. Throws std::length_error above options.max_lines.
std::optional<Refutation> export_refutation(const CnfInstance &phi, const RefutationOptions &options = {});

/// Column-major cell order, colors ascending, for the grid CNF.
std::vector<int> column_major_order(const GridVariables &vars);

} // namespace gridcolor
