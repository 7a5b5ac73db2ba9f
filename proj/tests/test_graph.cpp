#include <doctest.h>

#include <numeric>

#include "lantern/graph.hpp"

using namespace lantern;

namespace {

// independent brute-force spanning-tree count: enumerate edge subsets of the
// underlying simple graph, check the tree condition, multiply multiplicities
Int brute_force_trees(const MultiGraph& g) {
    std::vector<std::pair<std::pair<int, int>, long>> simple(g.edges.begin(), g.edges.end());
    const int V = g.vertex_count;
    const std::size_t E = simple.size();
    if (V == 1)
        return 1;
    Int total = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << E); ++mask) {
        if (std::popcount(mask) != static_cast<int>(V - 1))
            continue;
        std::vector<int> parent(V);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        Int weight = 1;
        for (std::size_t e = 0; e < E && acyclic; ++e) {
            if (!(mask & (std::size_t(1) << e)))
                continue;
            int a = find(simple[e].first.first - 1), b = find(simple[e].first.second - 1);
            if (a == b)
                acyclic = false;
            else {
                parent[a] = b;
                weight *= simple[e].second;
            }
        }
        if (acyclic)
            total += weight;
    }
    return total;
}

}  // namespace

TEST_CASE("graph from a model diagram") {
    MultiGraph g1 = graph_from_model(make_model(1, {}, {5}));
    CHECK(g1.vertex_count == 2);
    CHECK(g1.multiplicity(1, 2) == 5);

    MultiGraph g2 = graph_from_model(make_model(2, {1}, {1, 1}));
    CHECK(g2.vertex_count == 3);
    CHECK(g2.multiplicity(1, 2) == 1);
    CHECK(g2.multiplicity(1, 3) == 1);
    CHECK(g2.multiplicity(2, 3) == 1);

    MultiGraph g3 = graph_from_model(make_model(2, {2}, {3, 4}));
    CHECK(g3.multiplicity(1, 2) == 2);
    CHECK(g3.multiplicity(1, 3) == 3);
    CHECK(g3.multiplicity(2, 3) == 4);
}

TEST_CASE("spanning tree counts") {
    MultiGraph bundle;
    bundle.vertex_count = 2;
    bundle.add_edges(1, 2, 5);
    CHECK(spanning_tree_count(bundle) == 5);

    MultiGraph triangle = graph_from_model(make_model(2, {1}, {1, 1}));
    CHECK(spanning_tree_count(triangle) == 3);

    MultiGraph weighted = graph_from_model(make_model(2, {2}, {3, 4}));
    CHECK(spanning_tree_count(weighted) == 2 * 3 + 2 * 4 + 3 * 4);

    MultiGraph disconnected;
    disconnected.vertex_count = 3;
    disconnected.add_edges(1, 2, 2);
    CHECK(spanning_tree_count(disconnected) == 0);
}

TEST_CASE("matrix-tree equals brute force on the model corpus") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<long> p(n - 1, 1), q(n, 1);
        for (;;) {
            MultiGraph g = graph_from_model(make_model(n, p, q));
            CHECK(spanning_tree_count(g) == brute_force_trees(g));
            auto bump = [&](std::vector<long>& v) {
                for (auto& x : v) {
                    if (x < 3) {
                        ++x;
                        return true;
                    }
                    x = 1;
                }
                return false;
            };
            if (!bump(p) && !bump(q))
                break;
        }
    }
}

TEST_CASE("two-vertex bundles multiply by edge count") {
    for (long q = 1; q <= 6; ++q) {
        MultiGraph g;
        g.vertex_count = 2;
        g.add_edges(1, 2, q);
        CHECK(spanning_tree_count(g) == q);
    }
}

TEST_CASE("goeritz matrices") {
    MultiGraph bundle;
    bundle.vertex_count = 2;
    bundle.add_edges(1, 2, 4);
    IntMatrix gm = goeritz_matrix(bundle, 2);
    CHECK(gm == IntMatrix{{-4}});

    MultiGraph triangle = graph_from_model(make_model(2, {1}, {1, 1}));
    IntMatrix tm = goeritz_matrix(triangle, 3);
    CHECK(tm == IntMatrix{{-2, 1}, {1, -2}});
    CHECK(exact_det(tm) == 3);

    MultiGraph disconnected;
    disconnected.vertex_count = 3;
    disconnected.add_edges(1, 2, 1);
    Int d = exact_det(goeritz_matrix(disconnected, 3));
    CHECK(d == 0);

    CHECK_THROWS_AS(goeritz_matrix(triangle, 4), std::invalid_argument);
}

TEST_CASE("goeritz form is negative definite on connected models") {
    MultiGraph g = graph_from_model(make_model(3, {2, 1}, {1, 2, 3}));
    IntMatrix gm = goeritz_matrix(g, 4);
    FramedDiagram d;
    for (std::size_t i = 0; i < gm.size(); ++i)
        d.components.push_back("v" + std::to_string(i + 1));
    d.matrix = gm;
    FormInvariants inv = form_invariants(d);
    CHECK(inv.b2_minus == static_cast<long>(gm.size()));
    CHECK(inv.b2_plus == 0);
    CHECK(inv.b2_zero == 0);
}

TEST_CASE("consistency check examples and grid") {
    ConsistencyReport r5 = consistency_check(make_model(1, {}, {5}));
    CHECK(r5.pass);
    CHECK(r5.det_linking == 5);
    CHECK(r5.tree_count == 5);
    CHECK(r5.det_goeritz == 5);

    ConsistencyReport r3 = consistency_check(make_model(2, {1}, {1, 1}));
    CHECK(r3.pass);
    CHECK(r3.tree_count == 3);

    for (int n = 1; n <= 3; ++n) {
        std::vector<long> p(n - 1, 1), q(n, 1);
        for (;;) {
            CHECK(consistency_check(make_model(n, p, q)).pass);
            auto bump = [&](std::vector<long>& v) {
                for (auto& x : v) {
                    if (x < 3) {
                        ++x;
                        return true;
                    }
                    x = 1;
                }
                return false;
            };
            if (!bump(p) && !bump(q))
                break;
        }
    }
}

TEST_CASE("dot emission") {
    MultiGraph g = graph_from_model(make_model(1, {}, {2}));
    std::string dot = to_dot(g);
    CHECK(dot.find("graph model {") == 0);
    CHECK(dot.find("v1 -- v2") != std::string::npos);
}
