#include "pmd/certificate.hpp"

#include <algorithm>

#include "pmd/simplex.hpp"

namespace pmd {

Rational WeightCertificate::edge_sum(const Edge& e) const {
    Rational sum(0);
    for (Vertex v : e) {
        auto it = weights.find(v);
        if (it == weights.end())
            fail(Errc::scope_missing_vertex, "vertex " + std::to_string(v) + " has no weight");
        sum += it->second;
    }
    return sum;
}

bool verify_certificate(const Hypergraph& h, const Matching& m, const WeightCertificate& w) {
    const std::set<Vertex> span = m.vertex_span();
    for (Vertex v : span)
        if (!w.in_scope(v))
            fail(Errc::scope_missing_vertex, "vertex " + std::to_string(v) + " has no weight");
    for (const Edge& e : m.edges())
        if (w.edge_sum(e) <= 0)
            return false;
    for (const Edge& e : induced_on(h, span).edges())
        if (!m.contains(e) && w.edge_sum(e) >= 0)
            return false;
    return true;
}

std::optional<WeightCertificate> synthesize_weights(const Hypergraph& h, const Matching& m) {
    if (m.empty())
        return WeightCertificate{};

    const std::set<Vertex> span = m.vertex_span();
    std::vector<Vertex> scope(span.begin(), span.end());
    std::map<Vertex, Eigen::Index> column;
    for (std::size_t i = 0; i < scope.size(); ++i)
        column[scope[i]] = static_cast<Eigen::Index>(i);

    // One row per sign condition, oriented so each reads row . w >= 1:
    // matching edges keep their incidence, induced complement edges are negated.
    EdgeList complement;
    for (const Edge& e : induced_on(h, span).edges())
        if (!m.contains(e))
            complement.push_back(e);

    MatrixXq rows = MatrixXq::Zero(static_cast<Eigen::Index>(m.size() + complement.size()),
                                   static_cast<Eigen::Index>(scope.size()));
    Eigen::Index r = 0;
    for (const Edge& e : m.edges()) {
        for (Vertex v : e)
            rows(r, column[v]) = 1;
        ++r;
    }
    for (const Edge& e : complement) {
        for (Vertex v : e)
            rows(r, column[v]) = -1;
        ++r;
    }

    auto point = feasible_point<Rational>(rows);
    if (!point)
        return std::nullopt;
    WeightCertificate cert;
    for (std::size_t i = 0; i < scope.size(); ++i)
        cert.weights[scope[i]] = (*point)(static_cast<Eigen::Index>(i));
    return cert;
}

namespace {

/// Repeatedly removes matching edges that own a vertex private to them among
/// the edges induced on the current span; positivity is unchanged by each
/// removal, and singletons and the empty matching disappear entirely.
EdgeList strip_private_vertex_edges(const Hypergraph& h, const Matching& m) {
    EdgeList work = m.edges();
    bool changed = true;
    while (changed && !work.empty()) {
        changed = false;
        std::set<Vertex> span;
        for (const Edge& e : work)
            span.insert(e.begin(), e.end());
        const Hypergraph sub = induced_on(h, span);
        std::vector<int> deg(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
        for (const Edge& e : sub.edges())
            for (Vertex v : e)
                ++deg[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < work.size(); ++i) {
            const bool has_private = std::any_of(work[i].begin(), work[i].end(), [&](Vertex v) {
                return deg[static_cast<std::size_t>(v)] == 1;
            });
            if (has_private) {
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return work;
}

} // namespace

bool is_positive_matching(const Hypergraph& h, const Matching& m) {
    const EdgeList core = strip_private_vertex_edges(h, m);
    if (core.empty())
        return true;
    return synthesize_weights(h, Matching(h, core)).has_value();
}

} // namespace pmd
