#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dcpa/tvg.hpp"

namespace dcpa {

/// A Byzantine node set together with the local bound it was validated
/// against. Valid when every node of the underlying graph has at most f
/// neighbors inside the set; the broadcast source is never a member.
struct Placement {
    std::vector<NodeId> byzantine;  // sorted, unique
    int f = 0;

    friend bool operator==(const Placement&, const Placement&) = default;
};

enum class BehaviorKind { Silent, MuteRelay, ForgeContent, FloodForge };

/// What a Byzantine node does on the wire.
///   Silent        never sends anything;
///   MuteRelay     receives and delivers internally but never forwards;
///   ForgeContent  relays under the true source id but with a corrupted
///                 payload once it has obtained the message;
///   FloodForge    emits a forged payload under the true source id to every
///                 current neighbor at every instant.
struct BehaviorPolicy {
    BehaviorKind kind = BehaviorKind::Silent;
    std::string forged_content = "forged";

    friend bool operator==(const BehaviorPolicy&, const BehaviorPolicy&) = default;
};

const char* behavior_name(BehaviorKind kind);

/// Exhaustive placement enumeration refuses graphs past this many nodes.
struct GuardRefused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool validate_placement(const StaticGraph& g, const Placement& placement);

/// Every subset of nodes (source excluded) that respects the f-local bound,
/// in lexicographic order of the sorted id lists; the empty placement comes
/// first. Throws GuardRefused when the graph exceeds max_n nodes.
std::vector<Placement> enumerate_placements(const StaticGraph& g, int f, NodeId source,
                                            std::size_t max_n = 10);

/// Only the inclusion-maximal valid placements. Validity is downward closed,
/// so every valid placement is a subset of one of these.
std::vector<Placement> maximal_placements(const StaticGraph& g, int f, NodeId source,
                                          std::size_t max_n = 10);

}  // namespace dcpa
