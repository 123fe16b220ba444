#pragma once

#include <vector>

#include "dcpa/oracle.hpp"
#include "dcpa/sim.hpp"

namespace dcpa {

struct SweepRun {
    Placement placement;
    BehaviorKind behavior = BehaviorKind::Silent;
    std::optional<Time> bl;  // empty when some correct node never delivered
    bool all_correct_delivered = false;
    std::size_t safety_violations = 0;
    std::uint64_t messages_sent = 0;
};

/// Aggregate over the placement/behavior cross product. The placement set is
/// the empty placement plus every inclusion-maximal valid one; behaviors are
/// all four policies.
struct SweepReport {
    TemporalLevelOrdering necessary;   // k = f+1
    TemporalLevelOrdering sufficient;  // k = 2f+1
    LatencyBounds bounds;
    std::vector<SweepRun> runs;

    /// No correct node delivered anything but the scenario message.
    bool safety_ok = true;
    /// With a covering k=2f+1 ordering, every run finished by its last level
    /// time. Vacuously true otherwise.
    bool sufficiency_ok = true;
    /// If every all-silent run delivered everywhere, the k=f+1 ordering
    /// covers.
    bool necessity_ok = true;
    /// When both bounds exist: every run's BL is at most the upper bound, the
    /// undisturbed run's BL equals the lower bound, and the worst run's BL
    /// lies inside [lower, upper].
    bool bounds_ok = true;
    std::optional<Time> worst_bl;
};

/// Count of (source = claimed author, payload != scenario payload) deliveries
/// at correct nodes.
std::size_t count_safety_violations(const SimTrace& trace, const BroadcastScenario& scenario,
                                    const Placement& placement);

SweepReport sweep(const TimeVaryingGraph& g, const BroadcastScenario& scenario,
                  std::size_t max_n = 10);

}  // namespace dcpa
