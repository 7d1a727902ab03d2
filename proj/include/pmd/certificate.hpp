#pragma once

#include <map>
#include <optional>

#include "pmd/hypergraph.hpp"
#include "pmd/rational.hpp"

namespace pmd {

/// Exact rational vertex weights witnessing positivity of a matching; the
/// scope is the key set of the map.
struct WeightCertificate {
    std::map<Vertex, Rational> weights;

    bool in_scope(Vertex v) const { return weights.count(v) > 0; }
    Rational edge_sum(const Edge& e) const;
};

/// True iff every matching edge sums > 0 and every other edge of
/// induced_on(h, V_m) sums < 0, with exact comparisons.
/// Throws ScopeMissingVertex if a vertex of V_m carries no weight.
bool verify_certificate(const Hypergraph& h, const Matching& m, const WeightCertificate& w);

/// A certificate passing verify_certificate iff one exists. The strict system
/// is decided through its margin-1 closed form (equivalent by homogeneity)
/// with exact phase-one simplex; absence means infeasible.
std::optional<WeightCertificate> synthesize_weights(const Hypergraph& h, const Matching& m);

/// Whether m is a positive matching of h. Strips edges owning an induced
/// private vertex first (that never changes the answer) and solves the rest.
bool is_positive_matching(const Hypergraph& h, const Matching& m);

} // namespace pmd
