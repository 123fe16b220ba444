#include "doctest.h"

#include "dcpa/adversary.hpp"
#include "dcpa/fixtures.hpp"
#include "dcpa/generate.hpp"

using namespace dcpa;

namespace {

StaticGraph k4() {
    return StaticGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("placement validity is the per-node neighbor bound") {
    CHECK(validate_placement(k4(), {{1}, 1}));
    CHECK_FALSE(validate_placement(k4(), {{1, 2}, 1}));
    CHECK(validate_placement(k4(), {{1, 2}, 2}));
    CHECK(validate_placement(fixtures::five_node_trap().underlying_graph(), {{2}, 1}));
    CHECK_THROWS_AS(validate_placement(k4(), {{9}, 1}), std::invalid_argument);
}

TEST_CASE("path enumeration yields all valid subsets, one maximal") {
    StaticGraph path(3, {{0, 1}, {1, 2}});
    auto all = enumerate_placements(path, 1, 0);
    REQUIRE(all.size() == 4);
    CHECK(all[0].byzantine.empty());
    CHECK(all[1].byzantine == std::vector<NodeId>{1});
    CHECK(all[2].byzantine == std::vector<NodeId>{1, 2});
    CHECK(all[3].byzantine == std::vector<NodeId>{2});

    auto maximal = maximal_placements(path, 1, 0);
    REQUIRE(maximal.size() == 1);
    CHECK(maximal[0].byzantine == std::vector<NodeId>{1, 2});
}

TEST_CASE("f=0 admits only the empty placement") {
    auto all = enumerate_placements(k4(), 0, 0);
    REQUIRE(all.size() == 1);
    CHECK(all[0].byzantine.empty());
}

TEST_CASE("K4 maximal placements at f=1 are the three singletons") {
    auto maximal = maximal_placements(k4(), 1, 0);
    REQUIRE(maximal.size() == 3);
    for (NodeId p = 1; p <= 3; ++p) CHECK(maximal[p - 1].byzantine == std::vector<NodeId>{p});
}

TEST_CASE("enumeration matches the definition exhaustively") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_connected_graph(3 + seed % 8, 0.4, seed);
        int f = static_cast<int>(seed % 3);
        auto listed = enumerate_placements(g, f, 0);
        std::size_t expected = 0;
        const std::size_t n = g.node_count();
        for (std::size_t mask = 0; mask < (1u << n); ++mask) {
            if (mask & 1u) continue;  // source is node 0
            std::vector<NodeId> subset;
            for (std::size_t b = 0; b < n; ++b)
                if (mask & (1u << b)) subset.push_back(static_cast<NodeId>(b));
            if (validate_placement(g, {subset, f})) ++expected;
        }
        CHECK(listed.size() == expected);
        for (const auto& p : listed) {
            CHECK(validate_placement(g, p));
            CHECK_FALSE(std::binary_search(p.byzantine.begin(), p.byzantine.end(), 0));
        }
        for (const auto& p : maximal_placements(g, f, 0)) {
            for (NodeId extra = 1; static_cast<std::size_t>(extra) < n; ++extra) {
                if (std::binary_search(p.byzantine.begin(), p.byzantine.end(), extra)) continue;
                auto extended = p.byzantine;
                extended.insert(std::upper_bound(extended.begin(), extended.end(), extra), extra);
                CHECK_FALSE(validate_placement(g, {extended, f}));
            }
        }
    }
}

TEST_CASE("enumeration refuses oversized graphs") {
    auto big = random_connected_graph(12, 0.2, 1);
    CHECK_THROWS_AS(enumerate_placements(big, 1, 0), GuardRefused);
    CHECK_NOTHROW(enumerate_placements(big, 1, 0, 12));
}
