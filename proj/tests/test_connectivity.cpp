#include <doctest.h>

#include <stdexcept>

#include "kconn/connectivity.hpp"
#include "helpers.hpp"

using namespace kconn;
using test::make_graph;

namespace {

CommGraph complete(int n) {
    CommGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

CommGraph cycle(int n) {
    CommGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

}  // namespace

TEST_CASE("is_connected") {
    CHECK(is_connected(make_graph(3, {{0, 1}, {1, 2}})));
    CHECK(!is_connected(make_graph(3, {{0, 1}})));
    CHECK(is_connected(CommGraph(1)));
}

TEST_CASE("is_biconnected") {
    CHECK(is_biconnected(complete(3)));
    CHECK(!is_biconnected(make_graph(3, {{0, 1}, {1, 2}})));
    CHECK(is_biconnected(cycle(4)));
    CHECK(!is_biconnected(CommGraph(2)));  // fewer than 3 vertices
    CHECK(!is_biconnected(make_graph(4, {{0, 1}, {1, 2}, {2, 0}})));  // isolated vertex
}

TEST_CASE("min_vertex_cut") {
    CHECK(min_vertex_cut(make_graph(3, {{0, 1}, {1, 2}}), 0, 2) == 1);
    CHECK(min_vertex_cut(cycle(4), 0, 2) == 2);

    // K_{2,3}: one side {0,1}, other side {2,3,4}; two vertices on the
    // 3-side are joined by exactly two internally disjoint paths.
    const CommGraph k23 =
        make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(min_vertex_cut(k23, 2, 3) == 2);

    CHECK_THROWS_AS(min_vertex_cut(cycle(4), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(min_vertex_cut(cycle(4), 0, 1), std::invalid_argument);  // adjacent
}

TEST_CASE("is_k_connected dispatch and basics") {
    CHECK(is_k_connected(complete(5), 4));
    CHECK(!is_k_connected(cycle(4), 3));
    CHECK(!is_k_connected(make_graph(4, {{0, 1}, {1, 2}, {2, 3}}), 2));
    CHECK(is_k_connected(cycle(5), 2));
    CHECK(!is_k_connected(complete(4), 4));  // needs more than k vertices
    CHECK_THROWS_AS(is_k_connected(complete(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(is_k_connected(complete(5), 3, ConnectivityMethod::DfsSpecialized),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_k_connected(complete(5), 1, ConnectivityMethod::VertexRemovalReduction),
                    std::invalid_argument);
    // Every explicit method agrees on a small fixture.
    const CommGraph wheel =
        make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
    for (int k = 1; k <= 4; ++k) {
        const bool expect = brute_force_k_connected(wheel, k);
        CHECK(is_k_connected(wheel, k, ConnectivityMethod::Auto) == expect);
        CHECK(is_k_connected(wheel, k, ConnectivityMethod::MaxFlow) == expect);
        if (k >= 2)
            CHECK(is_k_connected(wheel, k, ConnectivityMethod::VertexRemovalReduction) == expect);
    }
}

TEST_CASE("brute force oracle") {
    CHECK(brute_force_k_connected(complete(3), 2));
    CommGraph k4_minus = complete(4);
    k4_minus.remove_edge(0, 1);
    CHECK(!brute_force_k_connected(k4_minus, 3));
    CHECK(brute_force_k_connected(k4_minus, 2));
    CHECK(!brute_force_k_connected(complete(4), 4));  // k == n
    CHECK_THROWS_AS(brute_force_k_connected(CommGraph(17), 2), std::invalid_argument);
}

TEST_CASE("vertex_connectivity") {
    CHECK(vertex_connectivity(make_graph(3, {{0, 1}, {1, 2}})) == 1);
    CHECK(vertex_connectivity(cycle(4)) == 2);
    CHECK(vertex_connectivity(complete(5)) == 4);
    CHECK(vertex_connectivity(make_graph(3, {{0, 1}})) == 0);
    CHECK_THROWS_AS(vertex_connectivity(CommGraph(1)), std::invalid_argument);
}

TEST_CASE("oracle equivalence on random graphs") {
    Rng rng(987654321);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + rng.uniform_int(7);  // 4..10
        const double p = 0.15 + 0.75 * rng.uniform();
        const CommGraph g = test::random_graph(n, p, rng);
        for (int k = 1; k <= 4; ++k) {
            CHECK(is_k_connected(g, k) == brute_force_k_connected(g, k));
            ++checked;
        }
    }
    CHECK(checked == 1200);
}

TEST_CASE("monotonicity and Menger consistency") {
    Rng rng(13579);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 5 + rng.uniform_int(6);
        const CommGraph g = test::random_graph(n, 0.5 + 0.4 * rng.uniform(), rng);
        int top = 0;
        for (int k = 1; k <= 4; ++k)
            if (is_k_connected(g, k)) top = k;
        for (int k = 1; k <= top; ++k) CHECK(is_k_connected(g, k));
        if (top >= 1) {
            for (int s = 0; s < n; ++s)
                for (int t = s + 1; t < n; ++t)
                    if (!g.edge(s, t)) CHECK(min_vertex_cut(g, s, t) >= top);
        }
    }
}

TEST_CASE("adding an edge never lowers vertex connectivity") {
    Rng rng(24680);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + rng.uniform_int(6);
        CommGraph g = test::random_graph(n, 0.4, rng);
        if (!is_connected(g)) continue;
        const int before = vertex_connectivity(g);
        // add the first missing edge
        bool added = false;
        for (int i = 0; i < n && !added; ++i)
            for (int j = i + 1; j < n && !added; ++j)
                if (!g.edge(i, j)) {
                    g.add_edge(i, j);
                    added = true;
                }
        if (added) CHECK(vertex_connectivity(g) >= before);
    }
}
