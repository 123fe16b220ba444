#include "doctest.h"

#include "dcpa/fixtures.hpp"
#include "dcpa/generate.hpp"
#include "dcpa/klo.hpp"
#include "support/instances.hpp"

using namespace dcpa;

TEST_CASE("mklo on a star covers every leaf in level one") {
    StaticGraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    for (int k = 1; k <= 4; ++k) {
        auto ordering = compute_mklo(star, 0, k);
        REQUIRE(ordering.levels.size() == 2);
        CHECK(ordering.levels[0] == std::vector<NodeId>{0});
        CHECK(ordering.levels[1] == std::vector<NodeId>{1, 2, 3, 4});
        CHECK(ordering.covers_all());
    }
}

TEST_CASE("mklo on K5 with k=3 covers everyone at level one") {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < 5; ++u)
        for (NodeId v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
    auto ordering = compute_mklo(StaticGraph(5, edges), 0, 3);
    REQUIRE(ordering.levels.size() == 2);
    CHECK(ordering.levels[1].size() == 4);
    CHECK(ordering.covers_all());
}

TEST_CASE("mklo leaves the far end of a path uncovered at k=2") {
    StaticGraph path(3, {{0, 1}, {1, 2}});
    auto ordering = compute_mklo(path, 0, 2);
    REQUIRE(ordering.levels.size() == 2);
    CHECK(ordering.levels[0] == std::vector<NodeId>{0});
    CHECK(ordering.levels[1] == std::vector<NodeId>{1});
    CHECK(ordering.uncovered == std::vector<NodeId>{2});
    CHECK_FALSE(ordering.covers_all());

    CHECK_THROWS_AS(compute_mklo(path, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(compute_mklo(path, 0, 0), std::invalid_argument);
}

TEST_CASE("acceptance on the ladder fixture reproduces the known values") {
    auto g = fixtures::five_node_ladder();
    AcceptanceEvaluator accept(g, {0, 2, 0});

    for (Time t = 0; t <= 4; ++t) CHECK(accept(0, t) == 1);  // AK1
    CHECK(accept(1, 0) == 0);
    for (Time t = 1; t <= 4; ++t) CHECK(accept(1, t) == 1);  // AK2 via send at 0
    CHECK(accept(3, 1) == 0);
    CHECK(accept(3, 2) == 1);
    CHECK(accept(2, 3) == 0);
    CHECK(accept(2, 4) == 1);
    CHECK(accept(4, 3) == 0);  // AK3 completes only at 4
    CHECK(accept(4, 4) == 1);
}

TEST_CASE("tmklo of the ladder fixture is the expected partition") {
    auto ordering = compute_tmklo(fixtures::five_node_ladder(), {0, 2, 0});
    REQUIRE(ordering.levels.size() == 4);
    CHECK(ordering.levels[0] == std::pair<Time, std::vector<NodeId>>{0, {0}});
    CHECK(ordering.levels[1] == std::pair<Time, std::vector<NodeId>>{1, {1}});
    CHECK(ordering.levels[2] == std::pair<Time, std::vector<NodeId>>{2, {3}});
    CHECK(ordering.levels[3] == std::pair<Time, std::vector<NodeId>>{4, {2, 4}});
    CHECK(ordering.covers_all());
    CHECK(ordering.last_level_time() == 4);
}

TEST_CASE("tmklo of the trap fixture leaves nodes 3 and 4 uncovered") {
    auto ordering = compute_tmklo(fixtures::five_node_trap(), {0, 2, 0});
    CHECK(ordering.uncovered == std::vector<NodeId>{3, 4});
    CHECK(ordering.time_of(1) == 1);
    CHECK(ordering.time_of(2) == 2);
    CHECK_FALSE(ordering.time_of(4).has_value());
}

TEST_CASE("a later broadcast start forfeits earlier appearances") {
    auto g = fixtures::five_node_ladder();
    // From t_br=1 the source edge to node 1 can no longer complete a
    // crossing, which also costs node 4 its second certificate.
    auto ordering = compute_tmklo(g, {0, 2, 1});
    CHECK(ordering.time_of(0) == 1);
    CHECK(ordering.time_of(3) == 2);
    CHECK(ordering.time_of(2) == 4);
    CHECK(ordering.uncovered == std::vector<NodeId>{1, 4});

    AcceptanceEvaluator accept(g, {0, 2, 1});
    CHECK(accept(1, 4) == 0);
    CHECK(accept(3, 2) == 1);

    auto trace = run(g, {0, 1, 1, "m"}, {{}, 1}, {});
    CHECK(trace.delivery_time(3) == 2);
    CHECK_FALSE(trace.delivery_time(1).has_value());
}

TEST_CASE("broadcast starting at the horizon covers the source alone") {
    auto g = fixtures::five_node_ladder();
    auto ordering = compute_tmklo(g, {0, 1, 4});
    REQUIRE(ordering.levels.size() == 1);
    CHECK(ordering.levels[0] == std::pair<Time, std::vector<NodeId>>{4, {0}});
    CHECK(ordering.uncovered.size() == 4);
    CHECK_THROWS_AS(compute_tmklo(g, {0, 1, 5}), std::invalid_argument);
}

TEST_CASE("tmklo of a single node is its own level") {
    TimeVaryingGraph solo(1, {}, 3);
    auto ordering = compute_tmklo(solo, {0, 2, 1});
    REQUIRE(ordering.levels.size() == 1);
    CHECK(ordering.levels[0] == std::pair<Time, std::vector<NodeId>>{1, {0}});
    CHECK(ordering.covers_all());
}

TEST_CASE("sweep and recursive acceptance agree on random graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto [g, sc] = dcpa::testing::random_instance(seed);
        int k = 1 + static_cast<int>(seed % 3);
        AcceptanceParams params{sc.source, k, sc.t_br};
        auto ordering = compute_tmklo(g, params);
        AcceptanceEvaluator accept(g, params);
        for (NodeId p = 0; static_cast<std::size_t>(p) < g.node_count(); ++p) {
            CAPTURE(seed);
            CAPTURE(p);
            CHECK(ordering.time_of(p) == accept.first_acceptance(p));
        }
    }
}

TEST_CASE("acceptance is monotone in t and coverage is monotone in k") {
    for (std::uint64_t seed = 300; seed < 360; ++seed) {
        auto [g, sc] = dcpa::testing::random_instance(seed);
        AcceptanceEvaluator accept(g, {sc.source, 2, sc.t_br});
        for (NodeId p = 0; static_cast<std::size_t>(p) < g.node_count(); ++p)
            for (Time t = 1; t <= g.horizon(); ++t)
                if (accept(p, t - 1)) CHECK(accept(p, t));

        for (int k = 3; k >= 2; --k) {
            auto high = compute_tmklo(g, {sc.source, k, sc.t_br});
            auto low = compute_tmklo(g, {sc.source, k - 1, sc.t_br});
            if (high.covers_all()) CHECK(low.covers_all());
        }
    }
}

TEST_CASE("an always-present schedule reduces the temporal ordering to the static one") {
    for (std::uint64_t seed = 500; seed < 540; ++seed) {
        auto base = random_connected_graph(2 + seed % 6, 0.4, seed);
        auto g = static_tvg(base, static_cast<Time>(base.node_count()) + 2, 1);
        for (int k = 1; k <= 3; ++k) {
            auto tmklo = compute_tmklo(g, {0, k, 0});
            auto mklo = compute_mklo(base, 0, k);
            CHECK(tmklo.uncovered == mklo.uncovered);
            REQUIRE(tmklo.levels.size() == mklo.levels.size());
            for (std::size_t i = 0; i < mklo.levels.size(); ++i) {
                CHECK(tmklo.levels[i].first == static_cast<Time>(i));
                CHECK(tmklo.levels[i].second == mklo.levels[i]);
            }
        }
    }
}
