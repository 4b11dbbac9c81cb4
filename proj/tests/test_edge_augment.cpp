#include <doctest.h>

#include <cmath>

#include "kconn/edge_augment.hpp"
#include "kconn/errors.hpp"
#include "helpers.hpp"

using namespace kconn;
using test::make_instance;

TEST_CASE("collinear triple needs exactly the long hop") {
    const Instance inst = make_instance({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, 1.0);
    const AugmentationSet aug = edge_augmentation(inst, 2);
    REQUIRE(aug.edges.size() == 1);
    CHECK(aug.edges[0].i == 0);
    CHECK(aug.edges[0].j == 2);
    CHECK(aug.bottleneck == doctest::Approx(2.0));

    CommGraph g = build_comm_graph(inst);
    g.add_edge(0, 2);
    CHECK(brute_force_k_connected(g, 2));
}

TEST_CASE("already k-connected instance needs nothing") {
    const Instance square =
        make_instance({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, 1.0);
    const AugmentationSet aug = edge_augmentation(square, 2);
    CHECK(aug.edges.empty());
    CHECK(aug.bottleneck == 0.0);
}

TEST_CASE("infeasible sizes are rejected") {
    std::vector<Vec3> pts;
    for (int i = 0; i < 5; ++i) pts.push_back({static_cast<double>(i), 0, 0});
    CHECK_THROWS_AS(edge_augmentation(make_instance(pts, 1.0), 5), Infeasible);
    CHECK_THROWS_AS(bottleneck_threshold(make_instance(pts, 1.0), 5), Infeasible);
}

TEST_CASE("bottleneck threshold fixtures") {
    const Instance line = make_instance({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, 1.0);
    CHECK(bottleneck_threshold(line, 2) == doctest::Approx(2.0));

    const Instance square =
        make_instance({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, 1.0);
    CHECK(bottleneck_threshold(square, 2) == doctest::Approx(1.0));  // already 2-connected
    CHECK(bottleneck_threshold(square, 3) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("verifier flags constructed defects") {
    const Instance inst = make_instance({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, 1.0);
    AugmentationSet aug = edge_augmentation(inst, 2);

    SUBCASE("valid set passes") {
        const AugmentationReport rep = verify_augmentation(inst, 2, aug);
        CHECK(rep.ok());
        CHECK(rep.bottleneck_optimal);
    }
    SUBCASE("missing edge breaks achievability") {
        aug.edges.clear();
        const AugmentationReport rep = verify_augmentation(inst, 2, aug);
        CHECK(!rep.achieves_k);
        CHECK(!rep.ok());
    }
}

TEST_CASE("redundant edge breaks minimality") {
    // Two far-apart pairs: k=1 needs one bridge; adding a second is redundant.
    const Instance inst =
        make_instance({{0, 0, 0}, {1, 0, 0}, {5, 0, 0}, {6, 0, 0}}, 1.0);
    AugmentationSet aug = edge_augmentation(inst, 1);
    REQUIRE(aug.edges.size() == 1);
    aug.edges.push_back({0, 2, distance(inst.positions[0], inst.positions[2])});
    const AugmentationReport rep = verify_augmentation(inst, 1, aug);
    CHECK(rep.achieves_k);
    CHECK(!rep.minimal);
}

TEST_CASE("random instances: achievability, minimality, bottleneck optimality") {
    int optimal = 0, total = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 6 + static_cast<int>(trial % 7);
        const Instance inst = test::random_instance(n, 555000 + trial);
        const int k = 2 + trial % 3;
        if (inst.n() <= k) continue;
        const AugmentationSet aug = edge_augmentation(inst, k);
        const AugmentationReport rep = verify_augmentation(inst, k, aug);
        CHECK(rep.achieves_k);
        CHECK(rep.minimal);
        CHECK(aug.bottleneck <= rep.threshold + kDistEps);
        ++total;
        if (rep.bottleneck_optimal) ++optimal;
    }
    // The greedy sweep is expected to stay at the threshold; report loudly
    // if that ever drifts.
    CHECK(optimal == total);
}

TEST_CASE("determinism") {
    const Instance inst = test::random_instance(12, 4242);
    const AugmentationSet a = edge_augmentation(inst, 3);
    const AugmentationSet b = edge_augmentation(inst, 3);
    CHECK(a.edges == b.edges);
    CHECK(a.bottleneck == b.bottleneck);
}
