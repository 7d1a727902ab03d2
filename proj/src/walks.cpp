#include "pmd/walks.hpp"

#include <algorithm>
#include <map>

namespace pmd {

Vertex WalkWitness::exit_of(std::size_t i) const {
    return steps[(i + 1) % steps.size()].entry;
}

std::vector<Vertex> WalkWitness::interior_of(std::size_t i) const {
    const Vertex in = steps[i].entry;
    const Vertex out = exit_of(i);
    std::vector<Vertex> interior;
    for (Vertex v : steps[i].edge)
        if (v != in && v != out)
            interior.push_back(v);
    return interior;
}

bool RegularWitness::uniform_degree() const {
    return std::adjacent_find(degrees.begin(), degrees.end(), std::not_equal_to<>()) ==
           degrees.end();
}

bool is_alternate_closed_walk(const Hypergraph& h, const Matching& m, const WalkWitness& w) {
    const std::size_t len = w.steps.size();
    if (len == 0 || len % 2 != 0)
        return false;
    const Hypergraph sub = induced_on(h, m.vertex_span());
    for (std::size_t i = 0; i < len; ++i) {
        const WalkStep& step = w.steps[i];
        if (!sub.has_edge(step.edge))
            return false;
        if (step.in_matching != m.contains(step.edge))
            return false;
        if (step.in_matching != (i % 2 == 0))
            return false; // must start on a matching edge and alternate
        const Vertex out = w.exit_of(i);
        if (step.entry == out)
            return false;
        if (!std::binary_search(step.edge.begin(), step.edge.end(), step.entry) ||
            !std::binary_search(step.edge.begin(), step.edge.end(), out))
            return false;
    }
    return true;
}

bool has_balanced_interiors(const WalkWitness& w) {
    std::map<Vertex, int> balance;
    for (std::size_t i = 0; i < w.steps.size(); ++i)
        for (Vertex v : w.interior_of(i))
            balance[v] += w.steps[i].in_matching ? 1 : -1;
    return std::all_of(balance.begin(), balance.end(),
                       [](const auto& kv) { return kv.second == 0; });
}

bool replay_walk_witness(const Hypergraph& h, const Matching& m, const WalkWitness& w) {
    return is_alternate_closed_walk(h, m, w) && has_balanced_interiors(w);
}

namespace {

struct WalkSearch {
    const Hypergraph* sub = nullptr;
    EdgeList matched;
    EdgeList complement;
    std::map<Vertex, int> matched_at;           // vertex -> index into matched
    std::map<Vertex, std::vector<int>> comp_at; // vertex -> indices into complement
    std::vector<int> quota;                     // vertex -> 2(deg-1)

    void build(const Hypergraph& h, const Matching& m) {
        const std::set<Vertex> span = m.vertex_span();
        const Hypergraph induced = induced_on(h, span);
        sub_storage = induced;
        sub = &sub_storage;
        for (const Edge& e : sub->edges())
            (m.contains(e) ? matched : complement).push_back(e);
        for (std::size_t i = 0; i < matched.size(); ++i)
            for (Vertex v : matched[i])
                matched_at[v] = static_cast<int>(i);
        for (std::size_t i = 0; i < complement.size(); ++i)
            for (Vertex v : complement[i])
                comp_at[v].push_back(static_cast<int>(i));
        quota.assign(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
        for (Vertex v : span)
            quota[static_cast<std::size_t>(v)] = 2 * (degree(*sub, v) - 1);
    }

    Hypergraph sub_storage;
};

/// Shared depth-first expansion of the alternate rooted tree. The visitor is
/// called once per created node with the walk so far and whether the node is a
/// leaf; returning false aborts the whole search.
class TreeWalker {
public:
    TreeWalker(const WalkSearch& ctx, Vertex root, std::uint64_t node_budget)
        : ctx_(ctx), root_(root), budget_(node_budget) {
        counts_.assign(ctx.quota.size(), 0);
        used_comp_.assign(ctx.complement.size(), 0);
    }

    template <typename Visitor>
    bool run(Visitor&& visit) {
        if (budget_ == 0)
            return true;
        ++nodes_;
        counts_[static_cast<std::size_t>(root_)] = 1;
        return expand(root_, true, visit);
    }

    std::uint64_t nodes_created() const { return nodes_; }

private:
    template <typename Visitor>
    bool expand(Vertex at, bool matching_next, Visitor&& visit) {
        bool leaf = true;
        // The root's first edge is taken unconditionally; the occurrence
        // quota gates every later expansion.
        const bool within_quota =
            steps_.empty() ||
            counts_[static_cast<std::size_t>(at)] < ctx_.quota[static_cast<std::size_t>(at)];
        if (within_quota && nodes_ < budget_) {
            if (matching_next) {
                auto it = ctx_.matched_at.find(at);
                if (it != ctx_.matched_at.end()) {
                    leaf = false;
                    if (!step(ctx_.matched[static_cast<std::size_t>(it->second)], -1, at, true,
                              visit))
                        return false;
                }
            } else {
                for (int idx : lookup(ctx_.comp_at, at)) {
                    if (used_comp_[static_cast<std::size_t>(idx)])
                        continue;
                    leaf = false;
                    used_comp_[static_cast<std::size_t>(idx)] = 1;
                    const bool keep =
                        step(ctx_.complement[static_cast<std::size_t>(idx)], idx, at, false, visit);
                    used_comp_[static_cast<std::size_t>(idx)] = 0;
                    if (!keep)
                        return false;
                }
            }
        }
        if (leaf)
            return visit(steps_, at, true);
        return true;
    }

    template <typename Visitor>
    bool step(const Edge& edge, int comp_index, Vertex at, bool in_matching, Visitor&& visit) {
        (void)comp_index;
        for (Vertex exit : edge) {
            if (exit == at)
                continue;
            if (nodes_ >= budget_)
                break;
            ++nodes_;
            steps_.push_back(WalkStep{at, edge, in_matching});
            for (Vertex v : edge)
                if (v != at)
                    ++counts_[static_cast<std::size_t>(v)];
            // interiors and the exit each appear once in the walk sequence
            bool keep = visit(steps_, exit, false);
            if (keep)
                keep = expand(exit, !in_matching, visit);
            for (Vertex v : edge)
                if (v != at)
                    --counts_[static_cast<std::size_t>(v)];
            steps_.pop_back();
            if (!keep)
                return false;
        }
        return true;
    }

    static const std::vector<int>& lookup(const std::map<Vertex, std::vector<int>>& m, Vertex v) {
        static const std::vector<int> none;
        auto it = m.find(v);
        return it == m.end() ? none : it->second;
    }

    const WalkSearch& ctx_;
    Vertex root_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> counts_;
    std::vector<char> used_comp_;
    std::vector<WalkStep> steps_;
};

bool interiors_balance(const std::vector<WalkStep>& steps, Vertex root) {
    std::map<Vertex, int> balance;
    const std::size_t len = steps.size();
    for (std::size_t i = 0; i < len; ++i) {
        const Vertex out = (i + 1 < len) ? steps[i + 1].entry : root;
        for (Vertex v : steps[i].edge)
            if (v != steps[i].entry && v != out)
                balance[v] += steps[i].in_matching ? 1 : -1;
    }
    return std::all_of(balance.begin(), balance.end(),
                       [](const auto& kv) { return kv.second == 0; });
}

void require_linear_induced(const Hypergraph& h, const Matching& m) {
    if (!is_linear(induced_on(h, m.vertex_span())))
        fail(Errc::not_linear, "induced subhypergraph has two edges sharing two vertices");
}

} // namespace

std::optional<WalkWitness> find_strong_closed_walk(const Hypergraph& h, const Matching& m,
                                                   std::uint64_t node_budget) {
    require_linear_induced(h, m);
    if (m.size() < 2)
        return std::nullopt;

    WalkSearch ctx;
    ctx.build(h, m);
    if (ctx.complement.empty())
        return std::nullopt;

    std::optional<WalkWitness> found;
    for (Vertex root : m.vertex_span()) {
        TreeWalker walker(ctx, root, node_budget);
        walker.run([&](const std::vector<WalkStep>& steps, Vertex at, bool) {
            if (at == root && !steps.empty() && !steps.back().in_matching &&
                interiors_balance(steps, root)) {
                found = WalkWitness{steps};
                return false;
            }
            return true;
        });
        if (found)
            return found;
        // A truncated tree must never pass for "no witness".
        if (walker.nodes_created() >= node_budget)
            fail(Errc::search_budget_exceeded,
                 "walk search exceeded " + std::to_string(node_budget) + " tree nodes");
    }
    return std::nullopt;
}

std::optional<RegularWitness> find_regular_witness(const Hypergraph& h, const Matching& m,
                                                   std::uint64_t max_subsets) {
    const EdgeList member = m.edges();
    const std::size_t k = member.size();
    if (k == 0)
        return std::nullopt;
    if (k > 20)
        fail(Errc::search_budget_exceeded, "matching too large for exhaustive witness search");

    std::uint64_t examined = 0;

    // Subsets of the matching in (cardinality, lexicographic) order.
    for (std::size_t size = 1; size <= k; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i)
            pick[i] = i;
        while (true) {
            EdgeList inner;
            for (std::size_t i : pick)
                inner.push_back(member[i]);
            std::set<Vertex> span;
            for (const Edge& e : inner)
                span.insert(e.begin(), e.end());

            EdgeList candidates;
            for (const Edge& e : induced_on(h, span).edges())
                if (std::find(inner.begin(), inner.end(), e) == inner.end())
                    candidates.push_back(e);

            if (candidates.size() <= 62) {
                const std::uint64_t total = std::uint64_t{1} << candidates.size();
                for (std::uint64_t chosen = 0; chosen < total; ++chosen) {
                    if (++examined > max_subsets)
                        fail(Errc::search_budget_exceeded,
                             "explored " + std::to_string(max_subsets) + " candidate subgraphs");
                    std::map<Vertex, int> deg;
                    for (std::size_t i = 0; i < candidates.size(); ++i)
                        if (chosen & (std::uint64_t{1} << i))
                            for (Vertex v : candidates[i])
                                ++deg[v];
                    bool ok = true;
                    std::vector<int> degrees;
                    for (const Edge& e : inner) {
                        const int d = 1 + deg[e.front()];
                        for (Vertex v : e)
                            if (1 + deg[v] != d) {
                                ok = false;
                                break;
                            }
                        if (!ok || d < 2) {
                            ok = false;
                            break;
                        }
                        degrees.push_back(d);
                    }
                    if (ok) {
                        EdgeList outer = inner;
                        for (std::size_t i = 0; i < candidates.size(); ++i)
                            if (chosen & (std::uint64_t{1} << i))
                                outer.push_back(candidates[i]);
                        std::sort(outer.begin(), outer.end());
                        return RegularWitness{inner, outer, degrees};
                    }
                }
            } else {
                fail(Errc::search_budget_exceeded,
                     "induced complement too large for exhaustive witness search");
            }

            // next combination
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == k - size + (i - 1))
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::vector<AlternatingWalk> alternate_rooted_tree(const Hypergraph& h, const Matching& n_set,
                                                   Vertex root, std::uint64_t node_budget) {
    const std::set<Vertex> span = n_set.vertex_span();
    if (span.count(root) == 0)
        fail(Errc::root_not_matched, "root " + std::to_string(root) + " is not covered");
    require_linear_induced(h, n_set);

    WalkSearch ctx;
    ctx.build(h, n_set);
    std::vector<AlternatingWalk> walks;
    TreeWalker walker(ctx, root, node_budget);
    walker.run([&](const std::vector<WalkStep>& steps, Vertex at, bool leaf) {
        if (leaf)
            walks.push_back(AlternatingWalk{steps, at});
        return true;
    });
    return walks;
}

WalkPositivity positive_by_walks(const Hypergraph& h, const Matching& m) {
    auto witness = find_strong_closed_walk(h, m);
    if (witness)
        return WalkPositivity{false, std::move(witness)};
    return WalkPositivity{true, std::nullopt};
}

} // namespace pmd
