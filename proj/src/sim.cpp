#include "dcpa/sim.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace dcpa {

const char* outcome_name(EventOutcome outcome) {
    switch (outcome) {
        case EventOutcome::Ac1: return "AC1";
        case EventOutcome::Ac2: return "AC2";
        case EventOutcome::Ac3: return "AC3";
        case EventOutcome::Buffered: return "buffered";
        case EventOutcome::Dropped: return "dropped";
    }
    return "?";
}

std::optional<Time> SimTrace::delivery_time(NodeId node) const {
    const auto& keys = delivered.at(static_cast<std::size_t>(node));
    auto it = keys.find({source, content});
    if (it == keys.end()) return std::nullopt;
    return it->second;
}

std::map<NodeId, BehaviorPolicy> uniform_behaviors(const Placement& placement, BehaviorKind kind,
                                                   const std::string& forged_content) {
    std::map<NodeId, BehaviorPolicy> out;
    for (NodeId b : placement.byzantine) out[b] = {kind, forged_content};
    return out;
}

namespace {

struct Envelope {
    NodeId sender;
    NodeId receiver;
    NodeId source;
    std::string content;
};

SimTrace run_impl(const TimeVaryingGraph& g, const BroadcastScenario& scenario,
                  const Placement& placement, const std::map<NodeId, BehaviorPolicy>& behaviors,
                  const UnreliableChannel* channel, std::optional<Time> horizon_opt) {
    const std::size_t n = g.node_count();
    if (scenario.source < 0 || static_cast<std::size_t>(scenario.source) >= n)
        throw std::invalid_argument("run: unknown source");
    if (scenario.f < 0) throw std::invalid_argument("run: f must be non-negative");
    const Time horizon = horizon_opt.value_or(g.horizon());
    if (scenario.t_br < 0 || scenario.t_br > horizon)
        throw std::invalid_argument("run: t_br outside modeled window");

    std::vector<char> byzantine(n, 0);
    for (NodeId b : placement.byzantine) {
        if (b < 0 || static_cast<std::size_t>(b) >= n)
            throw std::invalid_argument("run: placement names unknown node");
        byzantine[b] = 1;
    }
    if (byzantine[scenario.source]) throw std::invalid_argument("run: source cannot be Byzantine");
    if (placement.f != scenario.f)
        throw std::invalid_argument("run: placement bound differs from scenario f");
    if (!validate_placement(g.underlying_graph(), placement))
        throw std::invalid_argument("run: placement violates the f-local bound");
    for (NodeId b : placement.byzantine)
        if (!behaviors.count(b))
            throw std::invalid_argument("run: no behavior for Byzantine node " + std::to_string(b));
    for (const auto& [node, policy] : behaviors) {
        (void)policy;
        if (node < 0 || static_cast<std::size_t>(node) >= n || !byzantine[node])
            throw std::invalid_argument("run: behavior given for a non-Byzantine node");
    }

    SimTrace trace;
    trace.source = scenario.source;
    trace.t_br = scenario.t_br;
    trace.content = scenario.content;
    trace.horizon = horizon;
    trace.delivered.resize(n);

    std::vector<std::map<MessageKey, std::set<NodeId>>> evidence(n);
    std::vector<std::vector<Envelope>> in_flight(static_cast<std::size_t>(horizon) + 2);
    std::mt19937_64 rng(channel ? channel->seed : 0);

    auto deliver = [&](NodeId node, const MessageKey& key, Time t, EventOutcome how,
                       NodeId sender) {
        trace.delivered[static_cast<std::size_t>(node)].emplace(key, t);
        trace.log.push_back({t, sender, node, key.first, key.second, how});
    };

    for (Time t = scenario.t_br; t <= horizon; ++t) {
        if (t == scenario.t_br)
            deliver(scenario.source, {scenario.source, scenario.content}, t, EventOutcome::Ac1,
                    scenario.source);

        // Receive: arrivals for this instant, then the acceptance rules.
        for (const Envelope& env : in_flight[static_cast<std::size_t>(t)]) {
            auto& mine = trace.delivered[static_cast<std::size_t>(env.receiver)];
            MessageKey key{env.source, env.content};
            if (mine.count(key)) {
                trace.log.push_back(
                    {t, env.sender, env.receiver, env.source, env.content, EventOutcome::Buffered});
                continue;
            }
            if (env.sender == env.source) {
                deliver(env.receiver, key, t, EventOutcome::Ac2, env.sender);
                continue;
            }
            auto& vouched = evidence[static_cast<std::size_t>(env.receiver)][key];
            vouched.insert(env.sender);
            if (static_cast<int>(vouched.size()) >= scenario.f + 1)
                deliver(env.receiver, key, t, EventOutcome::Ac3, env.sender);
            else
                trace.log.push_back(
                    {t, env.sender, env.receiver, env.source, env.content, EventOutcome::Buffered});
        }

        // Send: every delivered key is relayed to all current neighbors.
        for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
            std::vector<MessageKey> outgoing;
            if (!byzantine[u]) {
                for (const auto& [key, when] : trace.delivered[static_cast<std::size_t>(u)]) {
                    (void)when;
                    outgoing.push_back(key);
                }
            } else {
                const BehaviorPolicy& policy = behaviors.at(u);
                switch (policy.kind) {
                    case BehaviorKind::Silent:
                    case BehaviorKind::MuteRelay:
                        break;
                    case BehaviorKind::ForgeContent: {
                        const auto& mine = trace.delivered[static_cast<std::size_t>(u)];
                        bool has_source_message =
                            std::any_of(mine.begin(), mine.end(), [&](const auto& kv) {
                                return kv.first.first == scenario.source;
                            });
                        if (has_source_message)
                            outgoing.push_back({scenario.source, policy.forged_content});
                        break;
                    }
                    case BehaviorKind::FloodForge:
                        outgoing.push_back({scenario.source, policy.forged_content});
                        break;
                }
            }
            if (outgoing.empty()) continue;
            for (std::size_t e : g.incident_edges(u)) {
                auto interval = g.interval_at(e, t);
                if (!interval) continue;  // not a neighbor right now
                NodeId w = g.edge(e).u == u ? g.edge(e).v : g.edge(e).u;
                Time lat = g.edge(e).intervals[*interval].latency;
                bool rcd_ok = t + lat <= g.run_end(e, *interval);
                for (const MessageKey& key : outgoing) {
                    if (!rcd_ok) {
                        trace.log.push_back({t, u, w, key.first, key.second, EventOutcome::Dropped});
                        continue;
                    }
                    Envelope env{u, w, key.first, key.second};
                    if (channel) {
                        if (channel->corrupt_content_permille > 0 &&
                            rng() % 1000 < static_cast<std::uint64_t>(channel->corrupt_content_permille))
                            env.content += "!";
                        if (channel->forge_sender_permille > 0 &&
                            rng() % 1000 < static_cast<std::uint64_t>(channel->forge_sender_permille)) {
                            NodeId fake = static_cast<NodeId>(rng() % n);
                            if (fake == env.sender) fake = static_cast<NodeId>((fake + 1) % n);
                            env.sender = fake;
                        }
                    }
                    ++trace.messages_sent;
                    // A transmission completing past the simulated window is
                    // counted but never received.
                    if (t + lat <= horizon)
                        in_flight[static_cast<std::size_t>(t + lat)].push_back(std::move(env));
                }
            }
        }
    }
    return trace;
}

}  // namespace

SimTrace run(const TimeVaryingGraph& g, const BroadcastScenario& scenario,
             const Placement& placement, const std::map<NodeId, BehaviorPolicy>& behaviors,
             std::optional<Time> horizon) {
    return run_impl(g, scenario, placement, behaviors, nullptr, horizon);
}

SimTrace run_unreliable(const TimeVaryingGraph& g, const BroadcastScenario& scenario,
                        const Placement& placement,
                        const std::map<NodeId, BehaviorPolicy>& behaviors,
                        const UnreliableChannel& channel, std::optional<Time> horizon) {
    return run_impl(g, scenario, placement, behaviors, &channel, horizon);
}

std::optional<Time> broadcast_latency(const SimTrace& trace, const BroadcastScenario& scenario,
                                      const Placement& placement) {
    Time worst = 0;
    for (NodeId p = 0; static_cast<std::size_t>(p) < trace.delivered.size(); ++p) {
        if (std::binary_search(placement.byzantine.begin(), placement.byzantine.end(), p)) continue;
        auto at = trace.delivery_time(p);
        if (!at) return std::nullopt;
        worst = std::max(worst, *at - scenario.t_br);
    }
    return worst;
}

}  // namespace dcpa
