#pragma once

#include <cstdint>

#include "dcpa/tvg.hpp"

namespace dcpa {

/// Independent per-instant coin flip for every node pair; presence runs are
/// compressed into intervals, each with its own latency drawn from
/// [min_latency, max_latency].
struct RandomTvgSpec {
    std::size_t node_count = 0;
    double edge_probability = 0.5;
    Time horizon = 0;
    Time min_latency = 1;
    Time max_latency = 1;
};

/// Every edge of `base` reappears with a fixed period and a seeded phase;
/// each appearance stays up long enough for one crossing.
struct ErPeriodicSpec {
    StaticGraph base;
    Time period = 1;
    Time latency = 1;
    Time horizon = 0;
};

/// Every edge of `base` reappears within `delta` of its previous
/// rcd-satisfying send instant, at seeded jittered offsets.
struct TberSpec {
    StaticGraph base;
    Time delta = 1;
    Time latency = 1;
    Time horizon = 0;
};

TimeVaryingGraph generate(const RandomTvgSpec& spec, std::uint64_t seed);
TimeVaryingGraph generate(const ErPeriodicSpec& spec, std::uint64_t seed);
TimeVaryingGraph generate(const TberSpec& spec, std::uint64_t seed);

/// Static graph lifted to a TVG: every edge present over [0, horizon] with a
/// uniform latency.
TimeVaryingGraph static_tvg(const StaticGraph& base, Time horizon, Time latency = 1);

/// Random connected simple graph: a random spanning tree plus independent
/// extra edges. Used to build generator bases for the recurrent classes.
StaticGraph random_connected_graph(std::size_t node_count, double extra_edge_probability,
                                   std::uint64_t seed);

}  // namespace dcpa
