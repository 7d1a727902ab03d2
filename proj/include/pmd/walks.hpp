#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmd/hypergraph.hpp"

namespace pmd {

/// One step of an alternating walk: the edge is traversed from entry to the
/// next step's entry (the final exit closes the walk or ends an open one);
/// the r-2 remaining vertices are the step's interior ("middle") vertices.
struct WalkStep {
    Vertex entry;
    Edge edge;
    bool in_matching;
};

/// A closed alternating walk; step i exits at step (i+1)'s entry, the last
/// step exits at step 0's entry.
struct WalkWitness {
    std::vector<WalkStep> steps;

    Vertex exit_of(std::size_t i) const;
    std::vector<Vertex> interior_of(std::size_t i) const;
};

/// An open alternating walk grown from a root (alternate-rooted-tree leaf).
struct AlternatingWalk {
    std::vector<WalkStep> steps;
    Vertex end;
};

/// A degree-regular witness pair: inner = N (a subset of the matching),
/// outer = N1 with N included, and for every inner edge all of its vertex
/// degrees in N1 equal, with value degrees[i] >= 2 for inner edge i.
struct RegularWitness {
    EdgeList inner;
    EdgeList outer;
    std::vector<int> degrees;

    bool uniform_degree() const;
};

/// Checks incidence, alternation, and closure inside induced_on(h, V_m); says
/// nothing about strongness. Pure recount, independent of any search.
bool is_alternate_closed_walk(const Hypergraph& h, const Matching& m, const WalkWitness& w);

/// The strong condition alone: every vertex occurs as often inside matching
/// steps as inside non-matching steps (interior occurrences only).
bool has_balanced_interiors(const WalkWitness& w);

/// A witness replays iff it is an alternate closed walk with balanced
/// interiors.
bool replay_walk_witness(const Hypergraph& h, const Matching& m, const WalkWitness& w);

/// Finds a strong alternate closed walk inside induced_on(h, V_m) with respect
/// to m, or nullopt. Depth-first over alternate rooted trees from every vertex
/// of V_m with per-vertex occurrence caps 2(deg-1); roots, edges, and exits
/// are explored in ascending order so the result is deterministic.
/// Throws NotLinear if the induced subhypergraph is not linear, and
/// SearchBudgetExceeded if the tree grows past node_budget.
std::optional<WalkWitness> find_strong_closed_walk(const Hypergraph& h, const Matching& m,
                                                   std::uint64_t node_budget = 1u << 26);

/// Smallest subset N of m (by cardinality, then lexicographically) admitting a
/// degree-regular N1 inside H[V_N], found by exhaustive subset search; nullopt
/// if none. Throws SearchBudgetExceeded when the enumeration would pass
/// max_subsets candidate pairs without settling the answer.
std::optional<RegularWitness> find_regular_witness(const Hypergraph& h, const Matching& m,
                                                   std::uint64_t max_subsets = 1u << 22);

/// Enumerates the alternate rooted tree (h, n_set, root): all root-to-leaf
/// alternating walks, expanding while a vertex has appeared fewer than
/// 2(deg-1) times, never repeating a non-matching edge along a branch, and
/// creating at most node_budget tree nodes (0 enumerates nothing).
/// Throws RootNotMatched if root is not covered by n_set.
std::vector<AlternatingWalk> alternate_rooted_tree(const Hypergraph& h, const Matching& n_set,
                                                   Vertex root, std::uint64_t node_budget);

struct WalkPositivity {
    bool positive;
    std::optional<WalkWitness> witness;
};

/// Positivity via the walk characterization: positive iff no strong alternate
/// closed walk exists; carries the witness otherwise.
WalkPositivity positive_by_walks(const Hypergraph& h, const Matching& m);

} // namespace pmd
