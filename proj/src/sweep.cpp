#include "dcpa/sweep.hpp"

#include <algorithm>

namespace dcpa {

std::size_t count_safety_violations(const SimTrace& trace, const BroadcastScenario& scenario,
                                    const Placement& placement) {
    std::size_t violations = 0;
    for (NodeId p = 0; static_cast<std::size_t>(p) < trace.delivered.size(); ++p) {
        if (std::binary_search(placement.byzantine.begin(), placement.byzantine.end(), p)) continue;
        for (const auto& [key, when] : trace.delivered[static_cast<std::size_t>(p)]) {
            (void)when;
            if (key.first != scenario.source || key.second != scenario.content) ++violations;
        }
    }
    return violations;
}

SweepReport sweep(const TimeVaryingGraph& g, const BroadcastScenario& scenario,
                  std::size_t max_n) {
    SweepReport report;
    report.necessary = compute_tmklo(g, {scenario.source, scenario.f + 1, scenario.t_br});
    report.sufficient = compute_tmklo(g, {scenario.source, 2 * scenario.f + 1, scenario.t_br});
    report.bounds = bl_bounds_fko(g, scenario);

    auto placements = maximal_placements(g.underlying_graph(), scenario.f, scenario.source, max_n);
    if (std::none_of(placements.begin(), placements.end(),
                     [](const Placement& p) { return p.byzantine.empty(); }))
        placements.insert(placements.begin(), Placement{{}, scenario.f});

    const BehaviorKind behaviors[] = {BehaviorKind::Silent, BehaviorKind::MuteRelay,
                                      BehaviorKind::ForgeContent, BehaviorKind::FloodForge};
    bool all_silent_runs_complete = true;
    std::optional<Time> undisturbed_bl;

    for (const auto& placement : placements) {
        for (BehaviorKind behavior : behaviors) {
            auto trace = run(g, scenario, placement, uniform_behaviors(placement, behavior));
            SweepRun entry;
            entry.placement = placement;
            entry.behavior = behavior;
            entry.bl = broadcast_latency(trace, scenario, placement);
            entry.all_correct_delivered = entry.bl.has_value();
            entry.safety_violations = count_safety_violations(trace, scenario, placement);
            entry.messages_sent = trace.messages_sent;

            if (entry.safety_violations > 0) report.safety_ok = false;
            if (report.sufficient.covers_all()) {
                Time deadline = *report.sufficient.last_level_time();
                if (!entry.bl || scenario.t_br + *entry.bl > deadline)
                    report.sufficiency_ok = false;
            }
            if (behavior == BehaviorKind::Silent && !entry.all_correct_delivered)
                all_silent_runs_complete = false;
            if (placement.byzantine.empty() && behavior == BehaviorKind::Silent)
                undisturbed_bl = entry.bl;
            if (entry.bl && (!report.worst_bl || *entry.bl > *report.worst_bl))
                report.worst_bl = entry.bl;
            report.runs.push_back(std::move(entry));
        }
    }

    if (all_silent_runs_complete && !report.necessary.covers_all()) report.necessity_ok = false;

    if (report.bounds.lower && report.bounds.upper) {
        for (const auto& entry : report.runs)
            if (!entry.bl || *entry.bl > *report.bounds.upper) report.bounds_ok = false;
        if (!undisturbed_bl || *undisturbed_bl != *report.bounds.lower) report.bounds_ok = false;
        if (!report.worst_bl || *report.worst_bl < *report.bounds.lower ||
            *report.worst_bl > *report.bounds.upper)
            report.bounds_ok = false;
    }
    return report;
}

}  // namespace dcpa
