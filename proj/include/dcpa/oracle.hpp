#pragma once

#include <optional>
#include <variant>

#include "dcpa/adversary.hpp"
#include "dcpa/klo.hpp"
#include "dcpa/sim.hpp"
#include "dcpa/tvg.hpp"

namespace dcpa {

enum class OracleKind { Fko, Pko, Sko };

/// What the analysis is allowed to see: the whole schedule (FKO), only the
/// underlying graph (PKO), or only the node count (SKO).
class OracleView {
public:
    static OracleView full(TimeVaryingGraph g);
    static OracleView partial(const TimeVaryingGraph& g);
    static OracleView size_only(const TimeVaryingGraph& g);
    static OracleView partial_graph(StaticGraph g);
    static OracleView size_count(std::size_t node_count);

    OracleKind kind() const { return kind_; }
    const TimeVaryingGraph& tvg() const;
    const StaticGraph& static_graph() const;
    std::size_t node_count() const;

private:
    OracleKind kind_ = OracleKind::Sko;
    std::variant<TimeVaryingGraph, StaticGraph, std::size_t> payload_;
};

enum class TerminationStatus { GuaranteedSufficient, GuaranteedStrict, Impossible, Unknown };

const char* termination_status_name(TerminationStatus status);

struct TerminationVerdict {
    TerminationStatus status = TerminationStatus::Unknown;
    /// Covering k=2f+1 ordering for GuaranteedSufficient, or the non-covering
    /// k=f+1 ordering for Impossible (on the full graph or on the failing
    /// placement's subgraph).
    std::optional<TemporalLevelOrdering> tmklo_witness;
    std::optional<StaticLevelOrdering> mklo_witness;
    /// Labels interpreting the witness ordering's node ids (the strict phase
    /// computes witnesses on node-deleted subgraphs).
    std::vector<std::int64_t> witness_labels;
    std::size_t placements_checked = 0;
    std::optional<Placement> failing_placement;
};

/// Full-knowledge decision ladder: the k=f+1 ordering failing to cover is
/// Impossible; a covering k=2f+1 ordering is GuaranteedSufficient; otherwise
/// the k=f+1 ordering is recomputed on the graph minus each maximal Byzantine
/// placement (GuaranteedStrict when all of them cover, Impossible on the
/// first that does not). Graphs larger than strict_max_n stop at Unknown
/// rather than entering the exponential phase.
TerminationVerdict conscious_termination_fko(const TimeVaryingGraph& g,
                                             const BroadcastScenario& scenario,
                                             std::size_t strict_max_n = 10);

/// Same ladder on the underlying graph alone. Sound only when the real
/// schedule keeps every edge recurring with rcd satisfied over and over
/// (a declared property; it cannot be read off the static view).
TerminationVerdict conscious_termination_pko_er(const OracleView& view,
                                                const BroadcastScenario& scenario,
                                                std::size_t strict_max_n = 10);

enum class BoundMethod { FkoTmklo, TberSko, TberPko };

const char* bound_method_name(BoundMethod method);

struct LatencyBounds {
    std::optional<Time> lower;
    std::optional<Time> upper;
    BoundMethod method = BoundMethod::FkoTmklo;
    /// TberPko only: levels in the k=2f+1 static ordering (the S used for the
    /// bound) and the covered node count, the looser alternative reading.
    std::optional<std::size_t> s_levels;
    std::optional<std::size_t> s_nodes;
};

/// Last-level times of the k=f+1 and k=2f+1 temporal orderings, relative to
/// t_br. A side is left empty when its ordering does not cover every node.
LatencyBounds bl_bounds_fko(const TimeVaryingGraph& g, const BroadcastScenario& scenario);

struct TberParams {
    Time delta = 1;        // recurrence bound
    Time max_latency = 1;  // largest crossing time anywhere in the schedule
};

/// Completion-time ceilings for time-bounded recurrent graphs:
/// node_count * (max_latency + delta) from the size oracle, or
/// levels(MKLO, k=2f+1) * (max_latency + delta) from the partial oracle when
/// that ordering covers. No lower bound is available from these oracles.
LatencyBounds bl_bound_tber(const OracleView& view, const TberParams& params,
                            const BroadcastScenario& scenario,
                            const std::optional<StaticLevelOrdering>& mklo = std::nullopt);

}  // namespace dcpa
