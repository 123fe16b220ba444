#include "doctest.h"

#include "dcpa/fixtures.hpp"
#include "dcpa/generate.hpp"
#include "dcpa/klo.hpp"
#include "dcpa/sim.hpp"
#include "dcpa/sweep.hpp"
#include "support/instances.hpp"

using namespace dcpa;

namespace {

const Placement kNoAdversary{{}, 0};

}  // namespace

TEST_CASE("ladder run with f=0 delivers at the hand-computed instants") {
    auto g = fixtures::five_node_ladder();
    auto trace = run(g, {0, 0, 0, "m"}, kNoAdversary, {});
    CHECK(trace.delivery_time(0) == 0);
    CHECK(trace.delivery_time(1) == 1);
    CHECK(trace.delivery_time(3) == 2);
    CHECK(trace.delivery_time(2) == 4);
    CHECK(trace.delivery_time(4) == 2);  // single relay from node 1 suffices at f=0
    CHECK(broadcast_latency(trace, {0, 0, 0, "m"}, kNoAdversary) == 4);
}

TEST_CASE("ladder run with f=1 delivers node 4 via two distinct relays") {
    auto g = fixtures::five_node_ladder();
    BroadcastScenario sc{0, 0, 1, "m"};
    auto trace = run(g, sc, {{}, 1}, {});
    CHECK(trace.delivery_time(4) == 4);
    CHECK(broadcast_latency(trace, sc, {{}, 1}) == 4);
    bool ac3 = false;
    for (const auto& e : trace.log)
        if (e.receiver == 4 && e.outcome == EventOutcome::Ac3) ac3 = true;
    CHECK(ac3);
}

TEST_CASE("trap run with node 2 Byzantine starves nodes 3 and 4 under every policy") {
    auto g = fixtures::five_node_trap();
    BroadcastScenario sc{0, 0, 1, "m"};
    Placement placement{{2}, 1};
    for (BehaviorKind kind : {BehaviorKind::Silent, BehaviorKind::MuteRelay,
                              BehaviorKind::ForgeContent, BehaviorKind::FloodForge}) {
        auto trace = run(g, sc, placement, uniform_behaviors(placement, kind));
        CHECK(trace.delivery_time(0) == 0);
        CHECK(trace.delivery_time(1) == 1);
        CHECK_FALSE(trace.delivery_time(3).has_value());
        CHECK_FALSE(trace.delivery_time(4).has_value());
        CHECK_FALSE(broadcast_latency(trace, sc, placement).has_value());
        CHECK(count_safety_violations(trace, sc, placement) == 0);
    }
}

TEST_CASE("a source with no channels only delivers to itself") {
    TimeVaryingGraph g(3, {{1, 2, {{0, 5, 1}}}}, 5);
    auto trace = run(g, {0, 0, 0, "m"}, kNoAdversary, {});
    CHECK(trace.delivery_time(0) == 0);
    CHECK_FALSE(trace.delivery_time(1).has_value());
    CHECK_FALSE(trace.delivery_time(2).has_value());
}

TEST_CASE("single-node broadcast has latency zero") {
    TimeVaryingGraph solo(1, {}, 2);
    auto trace = run(solo, {0, 1, 0, "m"}, kNoAdversary, {});
    CHECK(broadcast_latency(trace, {0, 1, 0, "m"}, kNoAdversary) == 0);
}

TEST_CASE("identical inputs give identical traces") {
    for (std::uint64_t seed = 40; seed < 60; ++seed) {
        auto [g, sc] = dcpa::testing::random_instance(seed);
        Placement placement{{}, sc.f};
        auto a = run(g, sc, placement, {});
        auto b = run(g, sc, placement, {});
        CHECK(a == b);
    }
}

TEST_CASE("undisturbed delivery times equal the k=f+1 acceptance times") {
    for (std::uint64_t seed = 700; seed < 800; ++seed) {
        auto [g, sc] = dcpa::testing::random_instance(seed);
        auto trace = run(g, sc, {{}, sc.f}, {});
        auto ordering = compute_tmklo(g, {sc.source, sc.f + 1, sc.t_br});
        for (NodeId p = 0; static_cast<std::size_t>(p) < g.node_count(); ++p) {
            CAPTURE(seed);
            CAPTURE(p);
            CHECK(trace.delivery_time(p) == ordering.time_of(p));
        }
    }
}

TEST_CASE("run rejects inconsistent adversary arguments") {
    auto g = fixtures::five_node_trap();
    BroadcastScenario sc{0, 0, 1, "m"};
    CHECK_THROWS_AS(run(g, sc, {{2}, 1}, {}), std::invalid_argument);  // behavior missing
    CHECK_THROWS_AS(run(g, sc, {{0}, 1}, uniform_behaviors({{0}, 1}, BehaviorKind::Silent)),
                    std::invalid_argument);  // source cannot be Byzantine
    CHECK_THROWS_AS(run(g, sc, {{2}, 0}, uniform_behaviors({{2}, 0}, BehaviorKind::Silent)),
                    std::invalid_argument);  // f mismatch
    Placement p2{{2}, 1};
    auto behaviors = uniform_behaviors(p2, BehaviorKind::Silent);
    behaviors[3] = {BehaviorKind::Silent, ""};
    CHECK_THROWS_AS(run(g, sc, p2, behaviors), std::invalid_argument);  // extra behavior
}

TEST_CASE("byzantine senders still cannot use absent or rcd-failing channels") {
    // Node 1 is Byzantine and floods, but its only channel to node 2 blinks
    // for single instants; nothing may arrive.
    TimeVaryingGraph g(3, {{0, 1, {{0, 8, 1}}}, {1, 2, {{3, 3, 1}, {6, 6, 1}}}}, 8);
    BroadcastScenario sc{0, 0, 1, "m"};
    Placement placement{{1}, 1};
    auto trace = run(g, sc, placement, uniform_behaviors(placement, BehaviorKind::FloodForge));
    CHECK(trace.delivered[2].empty());
    bool dropped = false;
    for (const auto& e : trace.log)
        if (e.sender == 1 && e.receiver == 2 && e.outcome == EventOutcome::Dropped) dropped = true;
    CHECK(dropped);
}

TEST_CASE("corrupting channels break safety on a two-hop path") {
    auto path = static_tvg(StaticGraph(3, {{0, 1}, {1, 2}}), 6, 1);
    BroadcastScenario sc{0, 0, 0, "m"};
    auto trace = run_unreliable(path, sc, kNoAdversary, {}, {5, 1000, 0});
    CHECK(count_safety_violations(trace, sc, kNoAdversary) > 0);
}

TEST_CASE("sender-forging channels let one Byzantine trip the f+1 rule") {
    // Star around node 1; node 2 floods forged content and the channel
    // rewrites senders, so node 1 sees enough distinct vouchers.
    auto star = static_tvg(StaticGraph(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}}), 10, 1);
    BroadcastScenario sc{0, 0, 1, "m"};
    Placement placement{{2}, 1};
    auto trace = run_unreliable(star, sc, placement,
                                uniform_behaviors(placement, BehaviorKind::FloodForge),
                                {11, 0, 1000});
    CHECK(count_safety_violations(trace, sc, placement) > 0);
}

TEST_CASE("zero channel noise reproduces run() exactly") {
    for (std::uint64_t seed = 900; seed < 910; ++seed) {
        auto [g, sc] = dcpa::testing::random_instance(seed);
        Placement placement{{}, sc.f};
        CHECK(run_unreliable(g, sc, placement, {}, {seed, 0, 0}) == run(g, sc, placement, {}));
    }
}
