#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dcpa {

using NodeId = int;
using Time = std::int64_t;

/// One presence window of an edge. Closed on both ends: the edge is up at
/// every integer instant in [start, end]. Latency is constant inside the
/// window and must be >= 1.
struct PresenceInterval {
    Time start = 0;
    Time end = 0;
    Time latency = 1;

    friend bool operator==(const PresenceInterval&, const PresenceInterval&) = default;
};

/// Presence/latency schedule of one undirected edge. Endpoints are
/// normalized so that u < v; intervals are sorted and pairwise disjoint
/// (adjacent windows are allowed, they model a latency change without a gap).
struct EdgeSchedule {
    NodeId u = 0;
    NodeId v = 0;
    std::vector<PresenceInterval> intervals;

    friend bool operator==(const EdgeSchedule&, const EdgeSchedule&) = default;
};

enum class TvgClassKind { Generic, Er, Tber };

/// Declared evolution class of a graph. Recurrence is a promise about the
/// world beyond the modeled window; within the window it can be audited with
/// validate_tber but not proven.
struct TvgClass {
    TvgClassKind kind = TvgClassKind::Generic;
    std::optional<Time> delta;  // recurrence bound, TBER (and ER generators) only

    friend bool operator==(const TvgClass&, const TvgClass&) = default;
};

/// Simple undirected graph, no self-loops. Node ids are dense [0, n); the
/// original ids from an input file are kept as labels for reporting.
class StaticGraph {
public:
    StaticGraph() = default;
    StaticGraph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges,
                std::vector<std::int64_t> labels = {});

    std::size_t node_count() const { return adjacency_.size(); }
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
    const std::vector<NodeId>& neighbors(NodeId node) const;
    bool has_edge(NodeId a, NodeId b) const;
    std::int64_t label(NodeId node) const;
    const std::vector<std::int64_t>& labels() const { return labels_; }

    /// Subgraph on the nodes not listed in `removed`, ids remapped to stay
    /// dense, labels carried over.
    StaticGraph induced_without(const std::vector<NodeId>& removed) const;

    friend bool operator==(const StaticGraph&, const StaticGraph&) = default;

private:
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::int64_t> labels_;
};

/// Time-varying graph over a discrete clock 0..horizon. Immutable after
/// construction; construction validates every schedule invariant.
class TimeVaryingGraph {
public:
    TimeVaryingGraph() = default;
    TimeVaryingGraph(std::size_t node_count, std::vector<EdgeSchedule> edges, Time horizon,
                     TvgClass cls = {}, std::vector<std::int64_t> labels = {});

    std::size_t node_count() const { return incident_.size(); }
    Time horizon() const { return horizon_; }
    const TvgClass& declared_class() const { return class_; }
    const std::vector<EdgeSchedule>& edges() const { return edges_; }
    std::int64_t label(NodeId node) const;
    const std::vector<std::int64_t>& labels() const { return labels_; }
    std::optional<NodeId> node_by_label(std::int64_t label) const;

    /// True iff the pair's schedule has a window containing t. Unknown node
    /// ids throw std::invalid_argument; an absent schedule is just `false`.
    bool presence(NodeId a, NodeId b, Time t) const;

    /// Crossing time for a message entering the edge at t; empty when the
    /// edge is not present at t.
    std::optional<Time> latency(NodeId a, NodeId b, Time t) const;

    /// Reliable channel delivery: the edge stays up throughout the whole
    /// transit window [t, t + latency(t)].
    bool rcd(NodeId a, NodeId b, Time t) const;

    StaticGraph snapshot(Time t) const;
    StaticGraph underlying_graph() const;

    /// Largest latency anywhere in the schedule (1 for an edgeless graph).
    Time max_latency() const;

    TimeVaryingGraph induced_without(const std::vector<NodeId>& removed) const;

    // Indexed access used by the sweep algorithms.
    std::size_t edge_count() const { return edges_.size(); }
    const EdgeSchedule& edge(std::size_t index) const { return edges_[index]; }
    std::optional<std::size_t> edge_index(NodeId a, NodeId b) const;
    const std::vector<std::size_t>& incident_edges(NodeId node) const;

    /// Index of the interval containing t, if any.
    std::optional<std::size_t> interval_at(std::size_t edge_index, Time t) const;
    /// Last instant of the contiguous presence run the interval belongs to
    /// (adjacent windows merged).
    Time run_end(std::size_t edge_index, std::size_t interval_index) const;
    bool rcd_at(std::size_t edge_index, Time t) const;

    friend bool operator==(const TimeVaryingGraph&, const TimeVaryingGraph&) = default;

private:
    void check_node(NodeId node, const char* what) const;

    std::vector<EdgeSchedule> edges_;
    std::vector<std::vector<Time>> run_ends_;        // parallel to edges_ / intervals
    std::vector<std::vector<std::size_t>> incident_;
    Time horizon_ = 0;
    TvgClass class_;
    std::vector<std::int64_t> labels_;
};

/// Send instants t on edge `edge_index` with rcd true, ascending.
std::vector<Time> rcd_send_instants(const TimeVaryingGraph& g, std::size_t edge_index);

/// Audit of the declared TBER recurrence bound over the modeled window:
/// every underlying edge offers rcd-true send instants whose first occurrence
/// is within delta of the origin, whose consecutive gaps never exceed delta,
/// and whose last occurrence leaves no silent tail longer than delta plus the
/// final transit time. Says nothing about the world past the horizon.
bool validate_tber(const TimeVaryingGraph& g, Time delta);

}  // namespace dcpa
