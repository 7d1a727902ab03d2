#include "pmd/pmd_search.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "pmd/walks.hpp"

namespace pmd {

namespace {

using Mask = std::uint64_t;

Part plain_part(EdgeList edges) {
    std::sort(edges.begin(), edges.end());
    return Part{{}, std::move(edges)};
}

/// Positivity routed through the walk characterization when it applies.
bool positive_part(const Hypergraph& host, const Matching& m) {
    if (is_linear(induced_on(host, m.vertex_span())))
        return positive_by_walks(host, m).positive;
    return is_positive_matching(host, m);
}

struct ExactSearch {
    const Hypergraph* h;
    EdgeList edges;
    std::vector<Mask> conflict; // edges sharing a vertex
    std::unordered_map<Mask, int> memo;
    std::map<std::pair<Mask, Mask>, bool> positive_cache;
    std::uint64_t nodes = 0;
    std::uint64_t node_budget = 0;

    Hypergraph subgraph(Mask mask) const {
        EdgeList kept;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask & (Mask{1} << i))
                kept.push_back(edges[i]);
        return Hypergraph(h->vertex_count(), std::move(kept), h->uniformity());
    }

    bool is_positive(Mask remainder, Mask part) {
        const auto key = std::make_pair(remainder, part);
        auto it = positive_cache.find(key);
        if (it != positive_cache.end())
            return it->second;
        const Hypergraph sub = subgraph(remainder);
        EdgeList members;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (part & (Mask{1} << i))
                members.push_back(edges[i]);
        const bool result = positive_part(sub, Matching(sub, members));
        positive_cache.emplace(key, result);
        return result;
    }

    /// All matchings within the remainder, largest first then lexicographic
    /// by ascending edge-index sequence.
    std::vector<Mask> candidate_matchings(Mask remainder) const {
        std::vector<Mask> found;
        std::vector<std::size_t> chosen;
        auto grow = [&](auto&& self, std::size_t start, Mask used) -> void {
            for (std::size_t i = start; i < edges.size(); ++i) {
                const Mask bit = Mask{1} << i;
                if (!(remainder & bit) || (used & conflict[i]))
                    continue;
                found.push_back(used | bit);
                self(self, i + 1, used | bit);
            }
        };
        grow(grow, 0, 0);
        std::stable_sort(found.begin(), found.end(), [](Mask a, Mask b) {
            const int ca = std::popcount(a);
            const int cb = std::popcount(b);
            if (ca != cb)
                return ca > cb;
            return a < b; // smaller mask = lexicographically earlier index set
        });
        return found;
    }

    int lower_bound(Mask remainder) const {
        std::map<Vertex, int> deg;
        int best = 0;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (remainder & (Mask{1} << i))
                for (Vertex v : edges[i])
                    best = std::max(best, ++deg[v]);
        return best;
    }

    int solve(Mask remainder) {
        if (remainder == 0)
            return 0;
        auto it = memo.find(remainder);
        if (it != memo.end())
            return it->second;
        if (++nodes > node_budget)
            fail(Errc::budget_exceeded,
                 "explored more than " + std::to_string(node_budget) + " states");

        int best = std::popcount(remainder); // singleton parts always work
        for (Mask part : candidate_matchings(remainder)) {
            if (1 + lower_bound(remainder & ~part) >= best)
                continue;
            if (!is_positive(remainder, part))
                continue;
            best = std::min(best, 1 + solve(remainder & ~part));
        }
        memo.emplace(remainder, best);
        return best;
    }

    /// First candidate (in enumeration order) achieving the optimum.
    Mask pick_part(Mask remainder) {
        const int target = solve(remainder);
        for (Mask part : candidate_matchings(remainder))
            if (is_positive(remainder, part) && 1 + solve(remainder & ~part) == target)
                return part;
        fail(Errc::budget_exceeded, "witness reconstruction lost the optimum");
    }
};

CertifiedPart certify_stage(const Hypergraph& stage, EdgeList part_edges) {
    const Matching m(stage, part_edges);
    auto cert = synthesize_weights(stage, m);
    if (!cert || !verify_certificate(stage, m, *cert))
        fail(Errc::certificate_unobtainable, "stage certificate failed to synthesize");
    const Provenance prov =
        part_edges.size() == 1 ? Provenance::singleton : Provenance::lp_fallback;
    return CertifiedPart{plain_part(std::move(part_edges)), std::move(*cert), prov};
}

} // namespace

std::optional<std::pair<int, PmDecomposition>> pmd_exact(const Hypergraph& h, int part_budget,
                                                         std::uint64_t node_budget) {
    if (part_budget < 0)
        fail(Errc::invalid_parameters, "part budget must be nonnegative");
    if (h.edge_count() > 62)
        fail(Errc::budget_exceeded, "exact search supports at most 62 edges");

    PmDecomposition witness;
    witness.host = h;
    if (h.edge_count() == 0)
        return std::make_pair(0, std::move(witness));

    ExactSearch search;
    search.h = &h;
    search.edges = h.edges();
    search.node_budget = node_budget;
    search.conflict.assign(search.edges.size(), 0);
    for (std::size_t i = 0; i < search.edges.size(); ++i)
        for (std::size_t j = 0; j < search.edges.size(); ++j) {
            if (i == j)
                continue;
            Edge common;
            std::set_intersection(search.edges[i].begin(), search.edges[i].end(),
                                  search.edges[j].begin(), search.edges[j].end(),
                                  std::back_inserter(common));
            if (!common.empty())
                search.conflict[i] |= Mask{1} << j;
        }

    const Mask full = (search.edges.size() == 64) ? ~Mask{0}
                                                  : ((Mask{1} << search.edges.size()) - 1);
    const int value = search.solve(full);
    if (value > part_budget)
        return std::nullopt;

    Mask remainder = full;
    while (remainder != 0) {
        const Mask part = search.pick_part(remainder);
        EdgeList part_edges;
        for (std::size_t i = 0; i < search.edges.size(); ++i)
            if (part & (Mask{1} << i))
                part_edges.push_back(search.edges[i]);
        witness.parts.push_back(certify_stage(search.subgraph(remainder), std::move(part_edges)));
        remainder &= ~part;
    }
    return std::make_pair(value, std::move(witness));
}

PmDecomposition pmd_greedy(const Hypergraph& h) {
    PmDecomposition result;
    result.host = h;
    EdgeList remaining = h.edges();
    while (!remaining.empty()) {
        const Hypergraph stage(h.vertex_count(), remaining, h.uniformity());
        EdgeList part;
        std::set<Vertex> used;
        for (const Edge& e : remaining) {
            if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used.count(v) > 0; }))
                continue;
            EdgeList attempt = part;
            attempt.push_back(e);
            if (positive_part(stage, Matching(stage, attempt))) {
                part = std::move(attempt);
                used.insert(e.begin(), e.end());
            }
        }
        result.parts.push_back(certify_stage(stage, part));
        EdgeList next;
        for (const Edge& e : remaining)
            if (std::find(part.begin(), part.end(), e) == part.end())
                next.push_back(e);
        remaining = std::move(next);
    }
    return result;
}

namespace {

std::vector<int> degree_table(const Hypergraph& h) {
    std::vector<int> deg(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
    for (const Edge& e : h.edges())
        for (Vertex v : e)
            ++deg[static_cast<std::size_t>(v)];
    return deg;
}

bool is_loose_cycle(const Hypergraph& h) {
    const int r = h.uniformity();
    const int m = static_cast<int>(h.edge_count());
    if (r <= 2 || m < 2)
        return false;
    const std::vector<int> deg = degree_table(h);
    int covered = 0;
    int joints = 0;
    for (int d : deg) {
        if (d > 2)
            return false;
        covered += d > 0;
        joints += d == 2;
    }
    if (covered != (r - 1) * m || joints != m)
        return false;

    const EdgeList& edges = h.edges();
    if (m == 2) {
        Edge common;
        std::set_intersection(edges[0].begin(), edges[0].end(), edges[1].begin(), edges[1].end(),
                              std::back_inserter(common));
        return common.size() == 2;
    }
    // Each edge must meet exactly two others, in one vertex each, and the
    // meeting relation must form a single cycle.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Edge common;
            std::set_intersection(edges[static_cast<std::size_t>(i)].begin(),
                                  edges[static_cast<std::size_t>(i)].end(),
                                  edges[static_cast<std::size_t>(j)].begin(),
                                  edges[static_cast<std::size_t>(j)].end(),
                                  std::back_inserter(common));
            if (common.size() > 1)
                return false;
            if (common.size() == 1) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    for (const auto& nbrs : adj)
        if (nbrs.size() != 2)
            return false;
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    int at = 0;
    int prev = -1;
    for (int steps = 0; steps < m; ++steps) {
        seen[static_cast<std::size_t>(at)] = 1;
        const auto& nbrs = adj[static_cast<std::size_t>(at)];
        const int next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
        prev = at;
        at = next;
    }
    return at == 0 && std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

} // namespace

std::optional<PmdFormula> pmd_formula(const Hypergraph& h) {
    if (good_forest_order(h))
        return PmdFormula{max_degree(h), "good-forest"};
    if (is_loose_cycle(h))
        return PmdFormula{h.edge_count() % 2 == 0 ? 2 : 3, "loose-cycle"};

    // Strip pendant edges (r-1 vertices of degree one) and resolve the core.
    const std::vector<int> deg = degree_table(h);
    EdgeList core;
    bool stripped = false;
    for (const Edge& e : h.edges()) {
        int leaves = 0;
        for (Vertex v : e)
            leaves += deg[static_cast<std::size_t>(v)] == 1;
        if (leaves == h.uniformity() - 1)
            stripped = true;
        else
            core.push_back(e);
    }
    if (!stripped)
        return std::nullopt;
    const auto inner = pmd_formula(Hypergraph(h.vertex_count(), core, h.uniformity()));
    if (!inner)
        return std::nullopt;
    return PmdFormula{std::max(inner->value, max_degree(h)), "pendant"};
}

} // namespace pmd
