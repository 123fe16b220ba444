#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcpa/adversary.hpp"
#include "dcpa/tvg.hpp"

namespace dcpa {

struct BroadcastScenario {
    NodeId source = 0;
    Time t_br = 0;
    int f = 0;
    std::string content;

    friend bool operator==(const BroadcastScenario&, const BroadcastScenario&) = default;
};

/// (claimed author, payload) — the unit a process delivers at most once.
using MessageKey = std::pair<NodeId, std::string>;

enum class EventOutcome { Ac1, Ac2, Ac3, Buffered, Dropped };

const char* outcome_name(EventOutcome outcome);

struct TraceEvent {
    Time t = 0;
    NodeId sender = 0;
    NodeId receiver = 0;
    NodeId source = 0;
    std::string content;
    EventOutcome outcome = EventOutcome::Buffered;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct SimTrace {
    NodeId source = 0;
    Time t_br = 0;
    std::string content;
    Time horizon = 0;
    /// Per node, every (source, content) pair it delivered and when. Filled
    /// for Byzantine nodes too (their internal bookkeeping); consumers filter
    /// by placement.
    std::vector<std::map<MessageKey, Time>> delivered;
    std::vector<TraceEvent> log;
    std::uint64_t messages_sent = 0;

    /// Delivery instant of the scenario's own message at `node`.
    std::optional<Time> delivery_time(NodeId node) const;

    friend bool operator==(const SimTrace&, const SimTrace&) = default;
};

std::map<NodeId, BehaviorPolicy> uniform_behaviors(const Placement& placement,
                                                   BehaviorKind kind,
                                                   const std::string& forged_content = "forged");

/// One synchronous execution of the certified-propagation broadcast with
/// per-tick retransmission. Each tick runs receive, deliver, send: the source
/// delivers its own message at t_br (AC1); an arrival whose sender equals the
/// claimed author delivers immediately (AC2); otherwise it is buffered until
/// f+1 distinct senders have vouched for the same key (AC3). Every node that
/// has delivered a key, including at the current tick, relays it to all
/// currently present neighbors; a relay whose channel does not satisfy rcd at
/// the send instant is dropped. Byzantine senders follow their policy and are
/// subject to the same rcd drops. Deterministic: equal inputs, equal traces.
SimTrace run(const TimeVaryingGraph& g, const BroadcastScenario& scenario,
             const Placement& placement, const std::map<NodeId, BehaviorPolicy>& behaviors,
             std::optional<Time> horizon = std::nullopt);

/// Longest delivery delay of the scenario message over the correct nodes;
/// empty when some correct node never delivered.
std::optional<Time> broadcast_latency(const SimTrace& trace, const BroadcastScenario& scenario,
                                      const Placement& placement);

/// Seeded channel faults for the negative-control mode: each transmitted
/// envelope may have its payload corrupted (reliability broken) or its sender
/// id rewritten (authentication broken). With both knobs at zero the result
/// is identical to run().
struct UnreliableChannel {
    std::uint64_t seed = 0;
    int corrupt_content_permille = 0;
    int forge_sender_permille = 0;
};

SimTrace run_unreliable(const TimeVaryingGraph& g, const BroadcastScenario& scenario,
                        const Placement& placement,
                        const std::map<NodeId, BehaviorPolicy>& behaviors,
                        const UnreliableChannel& channel,
                        std::optional<Time> horizon = std::nullopt);

}  // namespace dcpa
