#include "dcpa/oracle.hpp"

#include <stdexcept>

namespace dcpa {

OracleView OracleView::full(TimeVaryingGraph g) {
    OracleView v;
    v.kind_ = OracleKind::Fko;
    v.payload_ = std::move(g);
    return v;
}

OracleView OracleView::partial(const TimeVaryingGraph& g) { return partial_graph(g.underlying_graph()); }

OracleView OracleView::size_only(const TimeVaryingGraph& g) { return size_count(g.node_count()); }

OracleView OracleView::partial_graph(StaticGraph g) {
    OracleView v;
    v.kind_ = OracleKind::Pko;
    v.payload_ = std::move(g);
    return v;
}

OracleView OracleView::size_count(std::size_t node_count) {
    OracleView v;
    v.kind_ = OracleKind::Sko;
    v.payload_ = node_count;
    return v;
}

const TimeVaryingGraph& OracleView::tvg() const {
    if (kind_ != OracleKind::Fko) throw std::invalid_argument("oracle view holds no schedule");
    return std::get<TimeVaryingGraph>(payload_);
}

const StaticGraph& OracleView::static_graph() const {
    if (kind_ != OracleKind::Pko) throw std::invalid_argument("oracle view holds no static graph");
    return std::get<StaticGraph>(payload_);
}

std::size_t OracleView::node_count() const {
    switch (kind_) {
        case OracleKind::Fko: return std::get<TimeVaryingGraph>(payload_).node_count();
        case OracleKind::Pko: return std::get<StaticGraph>(payload_).node_count();
        case OracleKind::Sko: return std::get<std::size_t>(payload_);
    }
    return 0;
}

const char* termination_status_name(TerminationStatus status) {
    switch (status) {
        case TerminationStatus::GuaranteedSufficient: return "guaranteed-sufficient";
        case TerminationStatus::GuaranteedStrict: return "guaranteed-strict";
        case TerminationStatus::Impossible: return "impossible";
        case TerminationStatus::Unknown: return "unknown";
    }
    return "?";
}

const char* bound_method_name(BoundMethod method) {
    switch (method) {
        case BoundMethod::FkoTmklo: return "fko-tmklo";
        case BoundMethod::TberSko: return "tber-sko";
        case BoundMethod::TberPko: return "tber-pko";
    }
    return "?";
}

TerminationVerdict conscious_termination_fko(const TimeVaryingGraph& g,
                                             const BroadcastScenario& scenario,
                                             std::size_t strict_max_n) {
    TerminationVerdict verdict;
    AcceptanceParams necessary{scenario.source, scenario.f + 1, scenario.t_br};
    auto necessary_ordering = compute_tmklo(g, necessary);
    if (!necessary_ordering.covers_all()) {
        verdict.status = TerminationStatus::Impossible;
        verdict.tmklo_witness = std::move(necessary_ordering);
        verdict.witness_labels = g.labels();
        return verdict;
    }
    AcceptanceParams sufficient{scenario.source, 2 * scenario.f + 1, scenario.t_br};
    auto sufficient_ordering = compute_tmklo(g, sufficient);
    if (sufficient_ordering.covers_all()) {
        verdict.status = TerminationStatus::GuaranteedSufficient;
        verdict.tmklo_witness = std::move(sufficient_ordering);
        verdict.witness_labels = g.labels();
        return verdict;
    }
    if (g.node_count() > strict_max_n) {
        verdict.status = TerminationStatus::Unknown;
        return verdict;
    }
    auto placements = maximal_placements(g.underlying_graph(), scenario.f, scenario.source,
                                         strict_max_n);
    for (const auto& placement : placements) {
        ++verdict.placements_checked;
        auto sub = g.induced_without(placement.byzantine);
        NodeId sub_source = *sub.node_by_label(g.label(scenario.source));
        auto ordering = compute_tmklo(sub, {sub_source, scenario.f + 1, scenario.t_br});
        if (!ordering.covers_all()) {
            verdict.status = TerminationStatus::Impossible;
            verdict.tmklo_witness = std::move(ordering);
            verdict.witness_labels = sub.labels();
            verdict.failing_placement = placement;
            return verdict;
        }
    }
    verdict.status = TerminationStatus::GuaranteedStrict;
    return verdict;
}

TerminationVerdict conscious_termination_pko_er(const OracleView& view,
                                                const BroadcastScenario& scenario,
                                                std::size_t strict_max_n) {
    const StaticGraph& g = view.static_graph();
    TerminationVerdict verdict;
    auto necessary_ordering = compute_mklo(g, scenario.source, scenario.f + 1);
    if (!necessary_ordering.covers_all()) {
        verdict.status = TerminationStatus::Impossible;
        verdict.mklo_witness = std::move(necessary_ordering);
        verdict.witness_labels = g.labels();
        return verdict;
    }
    auto sufficient_ordering = compute_mklo(g, scenario.source, 2 * scenario.f + 1);
    if (sufficient_ordering.covers_all()) {
        verdict.status = TerminationStatus::GuaranteedSufficient;
        verdict.mklo_witness = std::move(sufficient_ordering);
        verdict.witness_labels = g.labels();
        return verdict;
    }
    if (g.node_count() > strict_max_n) {
        verdict.status = TerminationStatus::Unknown;
        return verdict;
    }
    auto placements = maximal_placements(g, scenario.f, scenario.source, strict_max_n);
    for (const auto& placement : placements) {
        ++verdict.placements_checked;
        auto sub = g.induced_without(placement.byzantine);
        NodeId sub_source = scenario.source;
        for (NodeId b : placement.byzantine)
            if (b < scenario.source) --sub_source;
        auto ordering = compute_mklo(sub, sub_source, scenario.f + 1);
        if (!ordering.covers_all()) {
            verdict.status = TerminationStatus::Impossible;
            verdict.mklo_witness = std::move(ordering);
            verdict.witness_labels = sub.labels();
            verdict.failing_placement = placement;
            return verdict;
        }
    }
    verdict.status = TerminationStatus::GuaranteedStrict;
    return verdict;
}

LatencyBounds bl_bounds_fko(const TimeVaryingGraph& g, const BroadcastScenario& scenario) {
    LatencyBounds bounds;
    bounds.method = BoundMethod::FkoTmklo;
    auto necessary = compute_tmklo(g, {scenario.source, scenario.f + 1, scenario.t_br});
    if (necessary.covers_all()) bounds.lower = *necessary.last_level_time() - scenario.t_br;
    auto sufficient = compute_tmklo(g, {scenario.source, 2 * scenario.f + 1, scenario.t_br});
    if (sufficient.covers_all()) bounds.upper = *sufficient.last_level_time() - scenario.t_br;
    return bounds;
}

LatencyBounds bl_bound_tber(const OracleView& view, const TberParams& params,
                            const BroadcastScenario& scenario,
                            const std::optional<StaticLevelOrdering>& mklo) {
    if (params.delta < 1) throw std::invalid_argument("bl_bound_tber: delta must be positive");
    if (params.max_latency < 1)
        throw std::invalid_argument("bl_bound_tber: max latency must be positive");
    LatencyBounds bounds;
    if (view.kind() == OracleKind::Pko || (mklo && view.kind() != OracleKind::Sko)) {
        bounds.method = BoundMethod::TberPko;
        std::optional<StaticLevelOrdering> ordering = mklo;
        if (!ordering)
            ordering = compute_mklo(view.static_graph(), scenario.source, 2 * scenario.f + 1);
        if (ordering->k != 2 * scenario.f + 1)
            throw std::invalid_argument("bl_bound_tber: ordering computed for a different k");
        if (ordering->covers_all()) {
            std::size_t levels = ordering->levels.size();
            std::size_t nodes = 0;
            for (const auto& level : ordering->levels) nodes += level.size();
            bounds.s_levels = levels;
            bounds.s_nodes = nodes;
            bounds.upper = static_cast<Time>(levels) * (params.max_latency + params.delta);
        }
    } else {
        bounds.method = BoundMethod::TberSko;
        bounds.upper = static_cast<Time>(view.node_count()) * (params.max_latency + params.delta);
    }
    return bounds;
}

}  // namespace dcpa
