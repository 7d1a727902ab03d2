#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "pmd/errors.hpp"

namespace pmd {

using Vertex = int;
/// An edge is a strictly ascending list of distinct vertices in 1..n.
using Edge = std::vector<Vertex>;
using EdgeList = std::vector<Edge>;

/// An r-uniform hypergraph on vertices {1,...,n} whose edge set is a clutter.
///
/// Edges are stored sorted ascending internally and the edge list is kept in
/// lexicographic order, so equal hypergraphs compare equal structurally.
/// Edgeless hypergraphs carry an explicitly declared uniformity so recursive
/// searches bottom out cleanly.
class Hypergraph {
public:
    Hypergraph() : n_(0), r_(0) {}

    /// Validating constructor; sorts and deduplicates edges.
    /// Throws VertexOutOfRange, DuplicateVertexInEdge, NonUniform, NotAClutter.
    Hypergraph(int n, EdgeList edges, int declared_uniformity = 0);

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    const EdgeList& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(const Edge& e) const;
    /// Index of e in the lexicographically sorted edge list; -1 if absent.
    int edge_index(const Edge& e) const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && r_ == other.r_ && edges_ == other.edges_;
    }

private:
    int n_;
    int r_;
    EdgeList edges_;
};

Hypergraph make_hypergraph(int n, const EdgeList& edges, int declared_uniformity = 0);

/// All r-subsets of {1,...,n}. Throws InvalidUniformity unless 1 <= r <= n.
Hypergraph complete_uniform(int n, int r);

/// Loose cycle C_{(r-1)m}: m edges of size r on n=(r-1)m vertices, consecutive
/// edges sharing exactly one vertex, the last edge wrapping back to vertex 1.
/// Throws InvalidParameters unless r > 2 and m > 1.
Hypergraph loose_cycle(int r, int m);

/// True iff every pair of distinct edges meets in at most one vertex.
bool is_linear(const Hypergraph& h);

int degree(const Hypergraph& h, Vertex v);
int max_degree(const Hypergraph& h);

/// Induced subhypergraph (a, { e in E : e subseteq a }); labels preserved.
Hypergraph induced_on(const Hypergraph& h, const std::set<Vertex>& a);

/// An ordering e_1,...,e_m with |(e_1 u ... u e_i) n e_{i+1}| <= 1 at every
/// step, or nullopt if none exists. Among valid orderings returns the
/// lexicographically smallest sequence of edge indices.
std::optional<std::vector<int>> good_forest_order(const Hypergraph& h);

/// A pendant edge to attach: {anchor} u fresh, with fresh vertices of degree 1.
struct PendantSpec {
    Vertex anchor;
    std::vector<Vertex> fresh;
};

/// Attaches one new edge per spec; fresh labels must avoid {1..n} and each
/// other. Throws AnchorNotInHost, FreshVertexCollision.
Hypergraph attach_pendants(const Hypergraph& h, const std::vector<PendantSpec>& specs);

/// Random linear r-uniform hypergraph on n vertices with up to edge_target
/// edges, drawn with rejection from a seeded mt19937_64. Reproducible across
/// platforms (no distribution objects involved).
Hypergraph random_linear_uniform(int n, int r, int edge_target, std::uint64_t seed);

/// A set of pairwise-disjoint edges of a host hypergraph.
class Matching {
public:
    Matching() = default;

    /// Validates membership in the host and pairwise disjointness.
    Matching(const Hypergraph& host, EdgeList edges);

    const EdgeList& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    /// V_M, the union of all member edges.
    std::set<Vertex> vertex_span() const;

    bool contains(const Edge& e) const;

private:
    EdgeList edges_;
};

} // namespace pmd
