#pragma once

#include <json.hpp>

#include "pmd/decompose.hpp"
#include "pmd/lss.hpp"
#include "pmd/walks.hpp"

namespace pmd {

using nlohmann::json;

// Interchange formats. Hypergraphs: {"n": int, "edges": [[int,...],...]} with
// 1-based vertices, each edge ascending, the edge list lexicographic (an "r"
// field is added only when the edge list is empty). Rationals travel as
// reduced fraction strings. Parsers throw ParseError (or the constructing
// type's validation error) on malformed input.

json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

json matching_to_json(const Matching& m);
Matching matching_from_json(const Hypergraph& host, const json& j);

json certificate_to_json(const WeightCertificate& w);
WeightCertificate certificate_from_json(const json& j);

json walk_witness_to_json(const WalkWitness& w);
WalkWitness walk_witness_from_json(const json& j);

json regular_witness_to_json(const RegularWitness& w);
RegularWitness regular_witness_from_json(const json& j);

json decomposition_to_json(const PmDecomposition& d);
PmDecomposition decomposition_from_json(const json& j);

json lss_presentation_to_json(const LssPresentation& p);
LssPresentation lss_presentation_from_json(const json& j);

} // namespace pmd
