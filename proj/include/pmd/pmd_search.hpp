#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "pmd/decompose.hpp"

namespace pmd {

/// Exact pmd by branch-and-bound over positive first parts (largest first,
/// lexicographic tie-break), memoized on the remaining edge set. Returns
/// nullopt when no decomposition with at most part_budget parts exists.
/// Positivity is decided by the walk characterization when the induced
/// subhypergraph is linear and by the LP oracle otherwise. The returned
/// decomposition carries freshly synthesized certificates that replay.
/// Throws BudgetExceeded if the state space passes node_budget.
std::optional<std::pair<int, PmDecomposition>> pmd_exact(const Hypergraph& h, int part_budget,
                                                         std::uint64_t node_budget = 1u << 22);

/// Upper-bound decomposition: repeatedly grows one positive matching by
/// scanning the remaining edges in lexicographic order and removes it.
PmDecomposition pmd_greedy(const Hypergraph& h);

struct PmdFormula {
    int value;
    std::string family; // "good-forest", "loose-cycle", or "pendant"
};

/// Closed-form pmd for recognized families: good forests (max degree), loose
/// cycles (2 or 3 by segment parity), and pendant extensions of a recognized
/// core (max of the core's value and the max degree). Recognition is
/// structural and ignores isolated vertices.
std::optional<PmdFormula> pmd_formula(const Hypergraph& h);

} // namespace pmd
