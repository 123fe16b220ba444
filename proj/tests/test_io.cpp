#include "doctest.h"

#include "dcpa/fixtures.hpp"
#include "dcpa/generate.hpp"
#include "dcpa/io.hpp"
#include "dcpa/klo.hpp"

using namespace dcpa;

TEST_CASE("generated graphs round-trip through the file format") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = generate(RandomTvgSpec{6, 0.4, 12, 1, 3}, seed);
        auto back = parse_tvg(dump_tvg(g));
        CHECK(back == g);
        CHECK(dump_tvg(back) == dump_tvg(g));
    }
    auto tber = generate(TberSpec{random_connected_graph(4, 0.5, 1), 3, 1, 20}, 2);
    CHECK(parse_tvg(dump_tvg(tber)) == tber);
}

TEST_CASE("sparse node ids are normalized and kept as labels") {
    auto g = parse_tvg(R"({"nodes":[10,30,20],
                           "edges":[{"u":10,"v":30,"intervals":[{"start":0,"end":2,"latency":1}]}],
                           "horizon":4})");
    CHECK(g.node_count() == 3);
    CHECK(g.label(0) == 10);
    CHECK(g.label(1) == 20);
    CHECK(g.label(2) == 30);
    CHECK(g.node_by_label(30) == 2);
    CHECK(g.presence(0, 2, 1));
}

TEST_CASE("parser diagnostics name the offending edge") {
    auto overlap = R"({"nodes":[0,1],
        "edges":[{"u":0,"v":1,"intervals":[{"start":0,"end":3,"latency":1},
                                           {"start":2,"end":5,"latency":1}]}],
        "horizon":6})";
    CHECK_THROWS_WITH_AS(parse_tvg(overlap), "edge (0,1): overlapping intervals", ParseError);

    auto self_loop = R"({"nodes":[0,1],
        "edges":[{"u":1,"v":1,"intervals":[{"start":0,"end":1,"latency":1}]}],
        "horizon":2})";
    CHECK_THROWS_WITH_AS(parse_tvg(self_loop), "edge (1,1): self-loop", ParseError);

    CHECK_THROWS_AS(parse_tvg("{"), ParseError);
    CHECK_THROWS_AS(parse_tvg(R"({"nodes":[0,0],"horizon":1})"), ParseError);
    CHECK_THROWS_AS(parse_tvg(R"({"nodes":[0,1],"horizon":1,
        "edges":[{"u":0,"v":2,"intervals":[]}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_tvg(R"({"nodes":[0],"horizon":1,"class":{"kind":"tber"}})"), ParseError);
}

TEST_CASE("scenario and placement files resolve labels") {
    auto g = parse_tvg(R"({"nodes":[5,6,7],
        "edges":[{"u":5,"v":6,"intervals":[{"start":0,"end":4,"latency":1}]},
                 {"u":6,"v":7,"intervals":[{"start":0,"end":4,"latency":1}]}],
        "horizon":4})");
    auto sc = parse_scenario(R"({"source":5,"t_br":1,"f":1,"content":"hello"})", g);
    CHECK(sc.source == 0);
    CHECK(sc.t_br == 1);
    CHECK(sc.content == "hello");
    CHECK_THROWS_AS(parse_scenario(R"({"source":9,"t_br":0,"f":0,"content":"x"})", g), ParseError);

    auto placement = parse_placement(R"({"f":1,"byzantine":[7]})", g);
    CHECK(placement.byzantine == std::vector<NodeId>{2});
    CHECK_THROWS_AS(parse_placement(R"({"f":1,"byzantine":[1]})", g), ParseError);
}

TEST_CASE("ordering reports are byte-stable and print labels") {
    auto g = fixtures::five_node_ladder();
    auto ordering = compute_tmklo(g, {0, 2, 0});
    const std::string golden = R"({
  "k": 2,
  "levels": [
    {
      "nodes": [
        0
      ],
      "time": 0
    },
    {
      "nodes": [
        1
      ],
      "time": 1
    },
    {
      "nodes": [
        3
      ],
      "time": 2
    },
    {
      "nodes": [
        2,
        4
      ],
      "time": 4
    }
  ],
  "source": 0,
  "t_br": 0,
  "type": "tmklo",
  "uncovered": []
}
)";
    CHECK(format_ordering(ordering, g.labels()) == golden);

    auto mklo = compute_mklo(g.underlying_graph(), 0, 2);
    auto static_text = format_ordering(mklo, g.labels());
    CHECK(static_text.find("\"type\": \"mklo\"") != std::string::npos);
}

TEST_CASE("shipped data files stay in sync with the code fixtures") {
    auto ladder = load_tvg(std::string(DCPA_DATA_DIR) + "/five_node_ladder.json");
    CHECK(ladder == fixtures::five_node_ladder());
    auto trap = load_tvg(std::string(DCPA_DATA_DIR) + "/five_node_trap.json");
    CHECK(trap == fixtures::five_node_trap());
}

TEST_CASE("trace export lists events and a summary") {
    auto g = fixtures::five_node_trap();
    BroadcastScenario sc{0, 0, 1, "m"};
    Placement placement{{2}, 1};
    auto trace = run(g, sc, placement, uniform_behaviors(placement, BehaviorKind::Silent));
    auto text = format_trace(trace, g, placement);
    CHECK(text.find("event t=0 outcome=AC1 sender=0 receiver=0") != std::string::npos);
    CHECK(text.find("summary node=3 delivered_at=never") != std::string::npos);
    CHECK(text.find("summary bl=never") != std::string::npos);
}
