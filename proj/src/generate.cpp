#include "dcpa/generate.hpp"

#include <random>
#include <stdexcept>

namespace dcpa {

namespace {

// std::uniform_int_distribution is implementation-defined; draw directly from
// the engine so that a seed means the same graph on every platform.
Time draw_range(std::mt19937_64& rng, Time lo, Time hi) {
    return lo + static_cast<Time>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool draw_coin(std::mt19937_64& rng, double p) {
    return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
}

// Jittered appearance windows with start gaps in [1, delta]; overlapping or
// touching windows collapse into one interval.
std::vector<PresenceInterval> recurring_windows(std::mt19937_64& rng, Time first_start,
                                                Time gap_lo, Time gap_hi, Time latency,
                                                Time horizon, bool jitter) {
    std::vector<PresenceInterval> out;
    Time start = first_start;
    while (start + latency <= horizon) {
        if (!out.empty() && start <= out.back().end + 1)
            out.back().end = std::max(out.back().end, start + latency);
        else
            out.push_back({start, start + latency, latency});
        start += jitter ? draw_range(rng, gap_lo, gap_hi) : gap_hi;
    }
    return out;
}

}  // namespace

TimeVaryingGraph generate(const RandomTvgSpec& spec, std::uint64_t seed) {
    if (spec.node_count == 0) throw std::invalid_argument("generate: node count must be positive");
    if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0)
        throw std::invalid_argument("generate: edge probability must be in [0,1]");
    if (spec.horizon < 0) throw std::invalid_argument("generate: horizon must be non-negative");
    if (spec.min_latency < 1 || spec.min_latency > spec.max_latency)
        throw std::invalid_argument("generate: bad latency range");
    std::mt19937_64 rng(seed);
    std::vector<EdgeSchedule> edges;
    for (NodeId u = 0; static_cast<std::size_t>(u) < spec.node_count; ++u) {
        for (NodeId v = u + 1; static_cast<std::size_t>(v) < spec.node_count; ++v) {
            EdgeSchedule e{u, v, {}};
            Time run_start = -1;
            for (Time t = 0; t <= spec.horizon; ++t) {
                bool up = draw_coin(rng, spec.edge_probability);
                if (up && run_start < 0) run_start = t;
                if (!up && run_start >= 0) {
                    e.intervals.push_back(
                        {run_start, t - 1, draw_range(rng, spec.min_latency, spec.max_latency)});
                    run_start = -1;
                }
            }
            if (run_start >= 0)
                e.intervals.push_back(
                    {run_start, spec.horizon, draw_range(rng, spec.min_latency, spec.max_latency)});
            if (!e.intervals.empty()) edges.push_back(std::move(e));
        }
    }
    return TimeVaryingGraph(spec.node_count, std::move(edges), spec.horizon);
}

TimeVaryingGraph generate(const ErPeriodicSpec& spec, std::uint64_t seed) {
    if (spec.period < 1) throw std::invalid_argument("generate: period must be positive");
    if (spec.latency < 1) throw std::invalid_argument("generate: latency must be positive");
    if (spec.horizon < spec.period + spec.latency)
        throw std::invalid_argument("generate: horizon too small for one recurrence");
    std::mt19937_64 rng(seed);
    std::vector<EdgeSchedule> edges;
    for (const auto& [u, v] : spec.base.edges()) {
        Time phase = draw_range(rng, 0, spec.period - 1);
        auto windows = recurring_windows(rng, phase, spec.period, spec.period, spec.latency,
                                         spec.horizon, false);
        edges.push_back({u, v, std::move(windows)});
    }
    return TimeVaryingGraph(spec.base.node_count(), std::move(edges), spec.horizon,
                            {TvgClassKind::Er, spec.period}, spec.base.labels());
}

TimeVaryingGraph generate(const TberSpec& spec, std::uint64_t seed) {
    if (spec.delta < 1) throw std::invalid_argument("generate: delta must be positive");
    if (spec.latency < 1) throw std::invalid_argument("generate: latency must be positive");
    if (spec.horizon < spec.delta + spec.latency)
        throw std::invalid_argument("generate: horizon too small for one recurrence");
    std::mt19937_64 rng(seed);
    std::vector<EdgeSchedule> edges;
    for (const auto& [u, v] : spec.base.edges()) {
        Time first = draw_range(rng, 0, spec.delta - 1);
        auto windows = recurring_windows(rng, first, 1, spec.delta, spec.latency, spec.horizon, true);
        edges.push_back({u, v, std::move(windows)});
    }
    return TimeVaryingGraph(spec.base.node_count(), std::move(edges), spec.horizon,
                            {TvgClassKind::Tber, spec.delta}, spec.base.labels());
}

TimeVaryingGraph static_tvg(const StaticGraph& base, Time horizon, Time latency) {
    std::vector<EdgeSchedule> edges;
    for (const auto& [u, v] : base.edges()) edges.push_back({u, v, {{0, horizon, latency}}});
    return TimeVaryingGraph(base.node_count(), std::move(edges), horizon, {}, base.labels());
}

StaticGraph random_connected_graph(std::size_t node_count, double extra_edge_probability,
                                   std::uint64_t seed) {
    if (node_count == 0) throw std::invalid_argument("random_connected_graph: empty node set");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v = 1; static_cast<std::size_t>(v) < node_count; ++v)
        edges.emplace_back(static_cast<NodeId>(draw_range(rng, 0, v - 1)), v);
    for (NodeId u = 0; static_cast<std::size_t>(u) < node_count; ++u)
        for (NodeId v = u + 1; static_cast<std::size_t>(v) < node_count; ++v)
            if (draw_coin(rng, extra_edge_probability)) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return StaticGraph(node_count, std::move(edges));
}

}  // namespace dcpa
