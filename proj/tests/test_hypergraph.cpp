#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "pmd/hypergraph.hpp"

using namespace pmd;

namespace {

/// Independent good-forest oracle: try every edge permutation.
bool good_forest_by_permutations(const Hypergraph& h) {
    const EdgeList& edges = h.edges();
    std::vector<int> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    do {
        std::set<Vertex> covered;
        bool ok = true;
        for (std::size_t i = 0; i < order.size() && ok; ++i) {
            const Edge& e = edges[static_cast<std::size_t>(order[i])];
            int overlap = 0;
            for (Vertex v : e)
                overlap += covered.count(v) > 0;
            if (i > 0 && overlap > 1)
                ok = false;
            covered.insert(e.begin(), e.end());
        }
        if (ok)
            return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

} // namespace

TEST_CASE("make_hypergraph validates and canonicalizes") {
    const Hypergraph h = make_hypergraph(4, {{3, 2, 1}, {2, 3, 4}});
    CHECK(h.vertex_count() == 4);
    CHECK(h.uniformity() == 3);
    CHECK(h.edge_count() == 2);
    CHECK(h.edges()[0] == Edge{1, 2, 3});
    CHECK(h.edges()[1] == Edge{2, 3, 4});

    CHECK_THROWS_AS(make_hypergraph(3, {{1, 2}, {1, 2, 3}}), Error);
    try {
        make_hypergraph(3, {{1, 2}, {1, 2, 3}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_uniform);
    }
    CHECK_THROWS_AS(make_hypergraph(3, {{1, 4, 2}}), Error);
    CHECK_THROWS_AS(make_hypergraph(3, {{1, 1, 2}}), Error);
    CHECK_THROWS_AS(make_hypergraph(0, {}), Error);

    // duplicates collapse
    CHECK(make_hypergraph(4, {{1, 2, 3}, {3, 2, 1}}).edge_count() == 1);
}

TEST_CASE("the nine-vertex two-regular example") {
    const Hypergraph h =
        make_hypergraph(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9}});
    CHECK(h.edge_count() == 6);
    for (Vertex v = 1; v <= 9; ++v)
        CHECK(degree(h, v) == 2);
    CHECK(is_linear(h));
    CHECK(max_degree(h) == 2);

    const Hypergraph sub = induced_on(h, {1, 2, 3, 4, 5, 6});
    CHECK(sub.edges() == EdgeList{{1, 2, 3}, {4, 5, 6}});
}

TEST_CASE("complete_uniform counts and degrees") {
    CHECK(complete_uniform(4, 3).edge_count() == 4);
    CHECK(complete_uniform(6, 3).edge_count() == 20);
    CHECK(complete_uniform(5, 5).edge_count() == 1);
    CHECK(complete_uniform(5, 5).edges()[0] == Edge{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(complete_uniform(3, 4), Error);
    CHECK_THROWS_AS(complete_uniform(3, 0), Error);

    for (int n = 3; n <= 8; ++n)
        for (int r = 2; r <= n; ++r) {
            const Hypergraph h = complete_uniform(n, r);
            // every vertex degree is binomial(n-1, r-1)
            long long expect = 1;
            for (int i = 1; i <= r - 1; ++i)
                expect = expect * (n - 1 - (r - 1) + i) / i;
            for (Vertex v = 1; v <= n; ++v)
                CHECK(degree(h, v) == expect);
        }
    CHECK(degree(complete_uniform(5, 3), 2) == 6);
}

TEST_CASE("loose cycles unroll the definition") {
    const Hypergraph c32 = loose_cycle(3, 2);
    CHECK(c32.vertex_count() == 4);
    CHECK(c32.edges() == EdgeList{{1, 2, 3}, {1, 3, 4}});

    const Hypergraph c33 = loose_cycle(3, 3);
    CHECK(c33.vertex_count() == 6);
    CHECK(c33.edges() == EdgeList{{1, 2, 3}, {1, 5, 6}, {3, 4, 5}});
    CHECK(is_linear(c33));
    CHECK(max_degree(c33) == 2);

    const Hypergraph c42 = loose_cycle(4, 2);
    CHECK(c42.vertex_count() == 6);
    CHECK(c42.edges() == EdgeList{{1, 2, 3, 4}, {1, 4, 5, 6}});

    CHECK_THROWS_AS(loose_cycle(2, 3), Error);
    CHECK_THROWS_AS(loose_cycle(3, 1), Error);

    for (int r = 3; r <= 5; ++r)
        for (int m = 2; m <= 5; ++m) {
            const Hypergraph c = loose_cycle(r, m);
            CHECK(c.edge_count() == static_cast<std::size_t>(m));
            CHECK(c.vertex_count() == (r - 1) * m);
            CHECK(max_degree(c) == 2);
            if (m > 2)
                CHECK(is_linear(c));
        }
}

TEST_CASE("linearity") {
    CHECK_FALSE(is_linear(complete_uniform(4, 3)));
    CHECK(is_linear(loose_cycle(3, 3)));
    CHECK_FALSE(is_linear(loose_cycle(3, 2))); // the two segments share both joints
}

TEST_CASE("degree errors and edgeless graphs") {
    const Hypergraph h = make_hypergraph(3, {});
    CHECK(h.edge_count() == 0);
    CHECK(max_degree(h) == 0);
    CHECK_THROWS_AS(degree(h, 0), Error);
    CHECK_THROWS_AS(degree(h, 4), Error);
    CHECK(degree(h, 2) == 0);

    const Hypergraph declared(3, {}, 3);
    CHECK(declared.uniformity() == 3);
}

TEST_CASE("induced subhypergraphs keep labels") {
    const Hypergraph k63 = complete_uniform(6, 3);
    const Hypergraph one = induced_on(k63, {1, 4, 5});
    CHECK(one.edges() == EdgeList{{1, 4, 5}});
    CHECK(one.vertex_count() == 6);

    CHECK(induced_on(k63, {}).edge_count() == 0);
    CHECK_THROWS_AS(induced_on(k63, {7}), Error);
}

TEST_CASE("good forest orders replay and match brute force") {
    CHECK_FALSE(good_forest_order(loose_cycle(3, 3)).has_value());
    CHECK_FALSE(good_forest_by_permutations(loose_cycle(3, 3)));

    const Hypergraph path = make_hypergraph(5, {{1, 2, 3}, {3, 4, 5}});
    const auto order = good_forest_order(path);
    REQUIRE(order.has_value());
    CHECK(*order == std::vector<int>{0, 1});

    const auto single = good_forest_order(make_hypergraph(3, {{1, 2, 3}}));
    REQUIRE(single.has_value());
    CHECK(single->size() == 1);

    // presence agrees with the permutation oracle, and returned orders replay
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Hypergraph h = random_linear_uniform(8, 3, 4, seed);
        const auto found = good_forest_order(h);
        CHECK(found.has_value() == good_forest_by_permutations(h));
        if (found) {
            std::set<Vertex> covered;
            for (std::size_t i = 0; i < found->size(); ++i) {
                const Edge& e = h.edges()[static_cast<std::size_t>((*found)[i])];
                int overlap = 0;
                for (Vertex v : e)
                    overlap += covered.count(v) > 0;
                if (i > 0)
                    CHECK(overlap <= 1);
                covered.insert(e.begin(), e.end());
            }
        }
    }
}

TEST_CASE("attach_pendants") {
    const Hypergraph host = loose_cycle(3, 2);
    const Hypergraph grown = attach_pendants(host, {{1, {5, 6}}});
    CHECK(grown.edge_count() == 3);
    CHECK(max_degree(grown) == 3);
    CHECK(degree(grown, 5) == 1);
    CHECK(degree(grown, 6) == 1);

    const Hypergraph tree = attach_pendants(make_hypergraph(3, {{1, 2, 3}}), {{3, {4, 5}}});
    CHECK(tree.edge_count() == 2);
    CHECK(max_degree(tree) == 2);
    CHECK(good_forest_order(tree).has_value());

    CHECK(attach_pendants(host, {}) == host);

    CHECK_THROWS_AS(attach_pendants(host, {{9, {5, 6}}}), Error);
    CHECK_THROWS_AS(attach_pendants(host, {{1, {2, 5}}}), Error);
    CHECK_THROWS_AS(attach_pendants(host, {{1, {5, 5}}}), Error);
    CHECK_THROWS_AS(attach_pendants(host, {{1, {5, 6}}, {2, {6, 7}}}), Error);

    // linearity is preserved for disjoint fresh sets on a linear host
    const Hypergraph c = loose_cycle(3, 3);
    const Hypergraph extended = attach_pendants(c, {{1, {7, 8}}, {4, {9, 10}}});
    CHECK(is_linear(extended));
}

TEST_CASE("clutter invariant holds by direct scan") {
    for (const Hypergraph& h :
         {complete_uniform(6, 3), loose_cycle(4, 3), random_linear_uniform(9, 3, 6, 7)}) {
        for (const Edge& a : h.edges())
            for (const Edge& b : h.edges())
                if (a != b)
                    CHECK_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
}

TEST_CASE("random linear generator is linear and reproducible") {
    const Hypergraph a = random_linear_uniform(10, 3, 7, 42);
    const Hypergraph b = random_linear_uniform(10, 3, 7, 42);
    CHECK(a == b);
    CHECK(is_linear(a));
    CHECK(a.uniformity() == 3);
    const Hypergraph c = random_linear_uniform(10, 3, 7, 43);
    CHECK(is_linear(c));
}
