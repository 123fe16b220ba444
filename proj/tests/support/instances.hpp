#pragma once

#include <cstdint>

#include "dcpa/generate.hpp"
#include "dcpa/sim.hpp"
#include "dcpa/tvg.hpp"

namespace dcpa::testing {

// Desk-scale randomized instances. Derived draws all come from one engine so
// a single seed pins the whole instance.
struct Instance {
    TimeVaryingGraph graph;
    BroadcastScenario scenario;
};

struct InstanceShape {
    std::size_t max_nodes = 8;
    Time max_horizon = 12;
    int max_f = 2;
    Time min_latency = 1;
    Time max_latency = 2;
};

inline Instance random_instance(std::uint64_t seed, const InstanceShape& shape = {}) {
    std::uint64_t x = seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL;
    auto next = [&x]() {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return x;
    };
    std::size_t n = 2 + next() % (shape.max_nodes - 1);
    Time horizon = 4 + static_cast<Time>(next() % static_cast<std::uint64_t>(shape.max_horizon - 3));
    double p = 0.15 + 0.75 * static_cast<double>(next() % 1000) / 1000.0;
    RandomTvgSpec spec{n, p, horizon, shape.min_latency,
                       shape.min_latency + static_cast<Time>(next() % static_cast<std::uint64_t>(
                                               shape.max_latency - shape.min_latency + 1))};
    TimeVaryingGraph g = generate(spec, next());
    BroadcastScenario sc;
    sc.source = static_cast<NodeId>(next() % n);
    sc.t_br = static_cast<Time>(next() % 3);
    sc.f = static_cast<int>(next() % static_cast<std::uint64_t>(shape.max_f + 1));
    sc.content = "m";
    return {std::move(g), std::move(sc)};
}

}  // namespace dcpa::testing
