#pragma once

#include <optional>
#include <vector>

#include "dcpa/tvg.hpp"

namespace dcpa {

struct AcceptanceParams {
    NodeId source = 0;
    int k = 1;
    Time t_br = 0;
};

/// Static minimum k-level ordering from a source: level 0 is the source,
/// level 1 its neighbors, and a node joins level i > 1 once at least k of its
/// neighbors sit in earlier levels. Nodes that never get there are uncovered.
struct StaticLevelOrdering {
    NodeId source = 0;
    int k = 1;
    std::vector<std::vector<NodeId>> levels;  // sorted node lists
    std::vector<NodeId> uncovered;            // sorted

    bool covers_all() const { return uncovered.empty(); }
    std::optional<std::size_t> level_of(NodeId node) const;

    friend bool operator==(const StaticLevelOrdering&, const StaticLevelOrdering&) = default;
};

/// Temporal minimum k-level ordering: each covered node keyed by the earliest
/// instant at which the k-acceptance function turns 1.
struct TemporalLevelOrdering {
    NodeId source = 0;
    int k = 1;
    Time t_br = 0;
    std::vector<std::pair<Time, std::vector<NodeId>>> levels;  // ascending times, sorted nodes
    std::vector<NodeId> uncovered;                             // sorted

    bool covers_all() const { return uncovered.empty(); }
    std::optional<Time> time_of(NodeId node) const;
    std::optional<Time> last_level_time() const;

    friend bool operator==(const TemporalLevelOrdering&, const TemporalLevelOrdering&) = default;
};

StaticLevelOrdering compute_mklo(const StaticGraph& g, NodeId source, int k);

/// Literal tabulation of the k-acceptance function over every (node, instant)
/// pair. Each cell is evaluated straight from the three clauses:
///   AK1  the node is the source and t >= t_br;
///   AK2  some rcd-true send instant t' >= t_br on the source edge has
///        t' + latency <= t;
///   AK3  k distinct neighbors were accepted by send instants t' whose
///        rcd-true transmissions complete by t.
/// Deliberately independent of the sweep in compute_tmklo so the two can
/// cross-check each other.
class AcceptanceEvaluator {
public:
    AcceptanceEvaluator(const TimeVaryingGraph& g, AcceptanceParams params);

    int operator()(NodeId node, Time t) const;
    std::optional<Time> first_acceptance(NodeId node) const;
    const AcceptanceParams& params() const { return params_; }

private:
    AcceptanceParams params_;
    Time horizon_;
    std::vector<std::vector<char>> table_;  // [node][t]
};

int acceptance(const TimeVaryingGraph& g, const AcceptanceParams& params, NodeId node, Time t);

/// Forward sweep over the instants t_br..horizon. Covered endpoints hand a
/// certificate to the far endpoint of every edge whose rcd holds at the send
/// instant; a node is covered at the first arrival from the source, or once
/// certificates from k distinct neighbors have arrived. O(|V| + T*|E|).
TemporalLevelOrdering compute_tmklo(const TimeVaryingGraph& g, const AcceptanceParams& params);

}  // namespace dcpa
