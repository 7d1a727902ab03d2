#include "pmd/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <unordered_set>

namespace pmd {

namespace {

Edge normalized_edge(const Edge& input, int n) {
    if (input.empty())
        fail(Errc::invalid_parameters, "empty edge");
    Edge e = input;
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n)
            fail(Errc::vertex_out_of_range,
                 "vertex " + std::to_string(e[i]) + " outside 1.." + std::to_string(n));
        if (i > 0 && e[i] == e[i - 1])
            fail(Errc::duplicate_vertex_in_edge,
                 "vertex " + std::to_string(e[i]) + " repeated in edge");
    }
    return e;
}

} // namespace

Hypergraph::Hypergraph(int n, EdgeList edges, int declared_uniformity) : n_(n), r_(0) {
    if (n < 0)
        fail(Errc::invalid_parameters, "negative vertex count");
    for (Edge& e : edges)
        e = normalized_edge(e, n);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    if (edges.empty()) {
        r_ = declared_uniformity;
        if (r_ < 0)
            fail(Errc::invalid_uniformity, "negative uniformity");
        return;
    }
    r_ = static_cast<int>(edges.front().size());
    for (const Edge& e : edges)
        if (static_cast<int>(e.size()) != r_)
            fail(Errc::non_uniform, "edges of sizes " + std::to_string(r_) + " and " +
                                        std::to_string(e.size()) + " mixed");
    if (declared_uniformity != 0 && declared_uniformity != r_)
        fail(Errc::non_uniform, "declared uniformity disagrees with edges");
    // Distinct edges of equal size are incomparable, so uniformity already
    // forces the clutter property; nothing further to scan.
    edges_ = std::move(edges);
}

bool Hypergraph::has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Hypergraph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return -1;
    return static_cast<int>(it - edges_.begin());
}

Hypergraph make_hypergraph(int n, const EdgeList& edges, int declared_uniformity) {
    if (n < 1)
        fail(Errc::invalid_parameters, "vertex count must be positive");
    return Hypergraph(n, edges, declared_uniformity);
}

Hypergraph complete_uniform(int n, int r) {
    if (r < 1 || r > n)
        fail(Errc::invalid_uniformity,
             "need 1 <= r <= n, got r=" + std::to_string(r) + ", n=" + std::to_string(n));
    EdgeList edges;
    Edge current(r);
    std::iota(current.begin(), current.end(), 1);
    while (true) {
        edges.push_back(current);
        int i = r - 1;
        while (i >= 0 && current[i] == n - (r - 1 - i))
            --i;
        if (i < 0)
            break;
        ++current[i];
        for (int j = i + 1; j < r; ++j)
            current[j] = current[j - 1] + 1;
    }
    return Hypergraph(n, std::move(edges), r);
}

Hypergraph loose_cycle(int r, int m) {
    if (r <= 2 || m <= 1)
        fail(Errc::invalid_parameters,
             "loose cycle needs r > 2 and m > 1, got r=" + std::to_string(r) +
                 ", m=" + std::to_string(m));
    const int n = (r - 1) * m;
    EdgeList edges;
    for (int k = 0; k < m; ++k) {
        Edge e;
        for (int j = 0; j < r; ++j) {
            int v = (r - 1) * k + 1 + j;
            e.push_back(v > n ? v - n : v); // the final edge wraps to vertex 1
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges), r);
}

bool is_linear(const Hypergraph& h) {
    const EdgeList& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            Edge common;
            std::set_intersection(edges[i].begin(), edges[i].end(), edges[j].begin(),
                                  edges[j].end(), std::back_inserter(common));
            if (common.size() > 1)
                return false;
        }
    return true;
}

int degree(const Hypergraph& h, Vertex v) {
    if (v < 1 || v > h.vertex_count())
        fail(Errc::vertex_out_of_range, "vertex " + std::to_string(v));
    int d = 0;
    for (const Edge& e : h.edges())
        if (std::binary_search(e.begin(), e.end(), v))
            ++d;
    return d;
}

int max_degree(const Hypergraph& h) {
    std::vector<int> deg(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
    int best = 0;
    for (const Edge& e : h.edges())
        for (Vertex v : e)
            best = std::max(best, ++deg[static_cast<std::size_t>(v)]);
    return best;
}

Hypergraph induced_on(const Hypergraph& h, const std::set<Vertex>& a) {
    for (Vertex v : a)
        if (v < 1 || v > h.vertex_count())
            fail(Errc::vertex_out_of_range, "vertex " + std::to_string(v));
    EdgeList kept;
    for (const Edge& e : h.edges())
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return a.count(v) > 0; }))
            kept.push_back(e);
    return Hypergraph(h.vertex_count(), std::move(kept), h.uniformity());
}

std::optional<std::vector<int>> good_forest_order(const Hypergraph& h) {
    const EdgeList& edges = h.edges();
    const int m = static_cast<int>(edges.size());
    if (m == 0)
        return std::vector<int>{};
    if (m > 63)
        fail(Errc::search_budget_exceeded, "good-forest search supports at most 63 edges");

    // Depth-first over edge orderings, smallest index first, so the first
    // complete ordering found is lexicographically least. Dead prefixes are
    // memoized by their placed-edge set: the feasibility of the rest depends
    // only on the union of placed vertices, which the set determines.
    std::unordered_set<std::uint64_t> dead;
    std::vector<int> order;
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    std::vector<char> covered(static_cast<std::size_t>(h.vertex_count()) + 1, 0);

    auto extend = [&](auto&& self, std::uint64_t mask, int placed) -> bool {
        if (placed == m)
            return true;
        if (dead.count(mask))
            return false;
        for (int i = 0; i < m; ++i) {
            if (used[static_cast<std::size_t>(i)])
                continue;
            int overlap = 0;
            for (Vertex v : edges[static_cast<std::size_t>(i)])
                overlap += covered[static_cast<std::size_t>(v)];
            if (placed > 0 && overlap > 1)
                continue;
            used[static_cast<std::size_t>(i)] = 1;
            order.push_back(i);
            for (Vertex v : edges[static_cast<std::size_t>(i)])
                ++covered[static_cast<std::size_t>(v)];
            if (self(self, mask | (std::uint64_t{1} << i), placed + 1))
                return true;
            for (Vertex v : edges[static_cast<std::size_t>(i)])
                --covered[static_cast<std::size_t>(v)];
            order.pop_back();
            used[static_cast<std::size_t>(i)] = 0;
        }
        dead.insert(mask);
        return false;
    };
    if (extend(extend, 0, 0))
        return order;
    return std::nullopt;
}

Hypergraph attach_pendants(const Hypergraph& h, const std::vector<PendantSpec>& specs) {
    if (specs.empty())
        return h;
    const int r = h.uniformity();
    if (r < 2)
        fail(Errc::invalid_parameters, "host uniformity must be at least 2");
    std::set<Vertex> taken;
    int n = h.vertex_count();
    EdgeList edges = h.edges();
    for (const PendantSpec& spec : specs) {
        if (spec.anchor < 1 || spec.anchor > h.vertex_count())
            fail(Errc::anchor_not_in_host, "anchor " + std::to_string(spec.anchor));
        if (static_cast<int>(spec.fresh.size()) != r - 1)
            fail(Errc::invalid_parameters, "pendant needs exactly r-1 fresh vertices");
        Edge e{spec.anchor};
        for (Vertex v : spec.fresh) {
            if (v <= h.vertex_count() || !taken.insert(v).second)
                fail(Errc::fresh_vertex_collision, "fresh vertex " + std::to_string(v));
            n = std::max(n, v);
            e.push_back(v);
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges), r);
}

Hypergraph random_linear_uniform(int n, int r, int edge_target, std::uint64_t seed) {
    if (r < 2 || n < r || edge_target < 0)
        fail(Errc::invalid_parameters, "need n >= r >= 2 and a nonnegative edge target");
    std::mt19937_64 rng(seed);
    EdgeList edges;
    const int attempts = 60 * (edge_target + 1);
    for (int tries = 0; tries < attempts && static_cast<int>(edges.size()) < edge_target;
         ++tries) {
        std::set<Vertex> picked;
        while (static_cast<int>(picked.size()) < r)
            picked.insert(1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)));
        Edge candidate(picked.begin(), picked.end());
        bool ok = true;
        for (const Edge& e : edges) {
            Edge common;
            std::set_intersection(e.begin(), e.end(), candidate.begin(), candidate.end(),
                                  std::back_inserter(common));
            if (common.size() > 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            edges.push_back(std::move(candidate));
    }
    return Hypergraph(n, std::move(edges), r);
}

Matching::Matching(const Hypergraph& host, EdgeList edges) {
    for (Edge& e : edges)
        std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::set<Vertex> seen;
    for (const Edge& e : edges) {
        if (!host.has_edge(e))
            fail(Errc::invalid_parameters, "matching member is not a host edge");
        for (Vertex v : e)
            if (!seen.insert(v).second)
                fail(Errc::invalid_parameters, "matching edges are not pairwise disjoint");
    }
    edges_ = std::move(edges);
}

std::set<Vertex> Matching::vertex_span() const {
    std::set<Vertex> span;
    for (const Edge& e : edges_)
        span.insert(e.begin(), e.end());
    return span;
}

bool Matching::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

} // namespace pmd
