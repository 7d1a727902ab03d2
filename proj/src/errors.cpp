#include "pmd/errors.hpp"

namespace pmd {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::duplicate_vertex_in_edge: return "DuplicateVertexInEdge";
    case Errc::non_uniform: return "NonUniform";
    case Errc::not_a_clutter: return "NotAClutter";
    case Errc::invalid_uniformity: return "InvalidUniformity";
    case Errc::invalid_parameters: return "InvalidParameters";
    case Errc::anchor_not_in_host: return "AnchorNotInHost";
    case Errc::fresh_vertex_collision: return "FreshVertexCollision";
    case Errc::scope_missing_vertex: return "ScopeMissingVertex";
    case Errc::not_linear: return "NotLinear";
    case Errc::root_not_matched: return "RootNotMatched";
    case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case Errc::range_violation: return "RangeViolation";
    case Errc::no_admissible_t: return "NoAdmissibleT";
    case Errc::certificate_unobtainable: return "CertificateUnobtainable";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_a_good_forest: return "NotAGoodForest";
    case Errc::unknown_dialect: return "UnknownDialect";
    case Errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

} // namespace pmd
