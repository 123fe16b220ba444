#include "dcpa/adversary.hpp"

#include <algorithm>

namespace dcpa {

const char* behavior_name(BehaviorKind kind) {
    switch (kind) {
        case BehaviorKind::Silent: return "silent";
        case BehaviorKind::MuteRelay: return "mute-relay";
        case BehaviorKind::ForgeContent: return "forge-content";
        case BehaviorKind::FloodForge: return "flood-forge";
    }
    return "?";
}

bool validate_placement(const StaticGraph& g, const Placement& placement) {
    if (placement.f < 0) throw std::invalid_argument("placement: f must be non-negative");
    std::vector<bool> byz(g.node_count(), false);
    for (NodeId b : placement.byzantine) {
        if (b < 0 || static_cast<std::size_t>(b) >= g.node_count())
            throw std::invalid_argument("placement: unknown node " + std::to_string(b));
        byz[b] = true;
    }
    for (NodeId p = 0; static_cast<std::size_t>(p) < g.node_count(); ++p) {
        int count = 0;
        for (NodeId q : g.neighbors(p))
            if (byz[q]) ++count;
        if (count > placement.f) return false;
    }
    return true;
}

namespace {

void enumerate_rec(const StaticGraph& g, int f, NodeId source, std::vector<NodeId>& current,
                   NodeId next, std::vector<Placement>& out) {
    out.push_back({current, f});
    for (NodeId candidate = next; static_cast<std::size_t>(candidate) < g.node_count();
         ++candidate) {
        if (candidate == source) continue;
        current.push_back(candidate);
        // Validity is downward closed: an invalid extension stays invalid, so
        // the whole branch can be pruned.
        if (validate_placement(g, {current, f}))
            enumerate_rec(g, f, source, current, candidate + 1, out);
        current.pop_back();
    }
}

void check_guard(const StaticGraph& g, NodeId source, std::size_t max_n) {
    if (source < 0 || static_cast<std::size_t>(source) >= g.node_count())
        throw std::invalid_argument("enumerate_placements: unknown source");
    if (g.node_count() > max_n)
        throw GuardRefused("placement enumeration refused: " + std::to_string(g.node_count()) +
                           " nodes exceed the guard of " + std::to_string(max_n));
}

}  // namespace

std::vector<Placement> enumerate_placements(const StaticGraph& g, int f, NodeId source,
                                            std::size_t max_n) {
    check_guard(g, source, max_n);
    if (f < 0) throw std::invalid_argument("enumerate_placements: f must be non-negative");
    std::vector<Placement> out;
    std::vector<NodeId> current;
    enumerate_rec(g, f, source, current, 0, out);
    return out;
}

std::vector<Placement> maximal_placements(const StaticGraph& g, int f, NodeId source,
                                          std::size_t max_n) {
    auto all = enumerate_placements(g, f, source, max_n);
    std::vector<Placement> out;
    for (const auto& p : all) {
        bool extendable = false;
        for (NodeId candidate = 0;
             static_cast<std::size_t>(candidate) < g.node_count() && !extendable; ++candidate) {
            if (candidate == source) continue;
            if (std::binary_search(p.byzantine.begin(), p.byzantine.end(), candidate)) continue;
            std::vector<NodeId> extended = p.byzantine;
            extended.insert(std::upper_bound(extended.begin(), extended.end(), candidate),
                            candidate);
            extendable = validate_placement(g, {extended, f});
        }
        if (!extendable) out.push_back(p);
    }
    return out;
}

}  // namespace dcpa
