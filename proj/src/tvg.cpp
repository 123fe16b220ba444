#include "dcpa/tvg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dcpa {

namespace {

std::vector<std::int64_t> default_labels(std::size_t n, std::vector<std::int64_t> labels) {
    if (labels.empty()) {
        labels.resize(n);
        std::iota(labels.begin(), labels.end(), 0);
    }
    if (labels.size() != n)
        throw std::invalid_argument("label list size does not match node count");
    std::set<std::int64_t> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw std::invalid_argument("node labels must be unique");
    return labels;
}

std::string edge_name(NodeId u, NodeId v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

StaticGraph::StaticGraph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges,
                         std::vector<std::int64_t> labels)
    : labels_(default_labels(node_count, std::move(labels))) {
    adjacency_.resize(node_count);
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || static_cast<std::size_t>(v) >= node_count)
            throw std::invalid_argument("edge " + edge_name(u, v) + ": unknown node");
        if (u == v) throw std::invalid_argument("edge " + edge_name(u, v) + ": self-loop");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge in static graph");
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

const std::vector<NodeId>& StaticGraph::neighbors(NodeId node) const {
    if (node < 0 || static_cast<std::size_t>(node) >= adjacency_.size())
        throw std::invalid_argument("unknown node " + std::to_string(node));
    return adjacency_[node];
}

bool StaticGraph::has_edge(NodeId a, NodeId b) const {
    const auto& nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::int64_t StaticGraph::label(NodeId node) const {
    if (node < 0 || static_cast<std::size_t>(node) >= labels_.size())
        throw std::invalid_argument("unknown node " + std::to_string(node));
    return labels_[node];
}

StaticGraph StaticGraph::induced_without(const std::vector<NodeId>& removed) const {
    std::vector<bool> gone(node_count(), false);
    for (NodeId r : removed) {
        if (r < 0 || static_cast<std::size_t>(r) >= node_count())
            throw std::invalid_argument("unknown node " + std::to_string(r));
        gone[r] = true;
    }
    std::vector<NodeId> remap(node_count(), -1);
    std::vector<std::int64_t> labels;
    NodeId next = 0;
    for (std::size_t i = 0; i < node_count(); ++i) {
        if (gone[i]) continue;
        remap[i] = next++;
        labels.push_back(labels_[i]);
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& [u, v] : edges_)
        if (!gone[u] && !gone[v]) edges.emplace_back(remap[u], remap[v]);
    return StaticGraph(static_cast<std::size_t>(next), std::move(edges), std::move(labels));
}

TimeVaryingGraph::TimeVaryingGraph(std::size_t node_count, std::vector<EdgeSchedule> edges,
                                   Time horizon, TvgClass cls, std::vector<std::int64_t> labels)
    : horizon_(horizon), class_(cls), labels_(default_labels(node_count, std::move(labels))) {
    if (horizon < 0) throw std::invalid_argument("horizon must be non-negative");
    incident_.resize(node_count);
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || static_cast<std::size_t>(e.v) >= node_count)
            throw std::invalid_argument("edge " + edge_name(e.u, e.v) + ": unknown node");
        if (e.u == e.v) throw std::invalid_argument("edge " + edge_name(e.u, e.v) + ": self-loop");
        std::sort(e.intervals.begin(), e.intervals.end(),
                  [](const PresenceInterval& a, const PresenceInterval& b) { return a.start < b.start; });
        for (std::size_t i = 0; i < e.intervals.size(); ++i) {
            const auto& iv = e.intervals[i];
            if (iv.start < 0 || iv.start > iv.end)
                throw std::invalid_argument("edge " + edge_name(e.u, e.v) + ": bad interval bounds");
            if (iv.end > horizon)
                throw std::invalid_argument("edge " + edge_name(e.u, e.v) + ": interval past horizon");
            if (iv.latency < 1)
                throw std::invalid_argument("edge " + edge_name(e.u, e.v) + ": latency must be positive");
            if (i > 0 && e.intervals[i - 1].end >= iv.start)
                throw std::invalid_argument("edge " + edge_name(e.u, e.v) + ": overlapping intervals");
        }
    }
    std::sort(edges.begin(), edges.end(), [](const EdgeSchedule& a, const EdgeSchedule& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            throw std::invalid_argument("edge " + edge_name(edges[i].u, edges[i].v) +
                                        ": more than one schedule for the pair");
    edges_ = std::move(edges);
    run_ends_.resize(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& ivs = edges_[e].intervals;
        auto& runs = run_ends_[e];
        runs.resize(ivs.size());
        for (std::size_t i = ivs.size(); i-- > 0;) {
            bool contiguous = i + 1 < ivs.size() && ivs[i + 1].start == ivs[i].end + 1;
            runs[i] = contiguous ? runs[i + 1] : ivs[i].end;
        }
        incident_[edges_[e].u].push_back(e);
        incident_[edges_[e].v].push_back(e);
    }
}

void TimeVaryingGraph::check_node(NodeId node, const char* what) const {
    if (node < 0 || static_cast<std::size_t>(node) >= node_count())
        throw std::invalid_argument(std::string(what) + ": unknown node " + std::to_string(node));
}

std::int64_t TimeVaryingGraph::label(NodeId node) const {
    check_node(node, "label");
    return labels_[node];
}

std::optional<NodeId> TimeVaryingGraph::node_by_label(std::int64_t label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<NodeId>(i);
    return std::nullopt;
}

std::optional<std::size_t> TimeVaryingGraph::edge_index(NodeId a, NodeId b) const {
    check_node(a, "edge_index");
    check_node(b, "edge_index");
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(a, b),
                               [](const EdgeSchedule& e, const std::pair<NodeId, NodeId>& key) {
                                   return std::pair(e.u, e.v) < key;
                               });
    if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

const std::vector<std::size_t>& TimeVaryingGraph::incident_edges(NodeId node) const {
    check_node(node, "incident_edges");
    return incident_[node];
}

std::optional<std::size_t> TimeVaryingGraph::interval_at(std::size_t edge_index, Time t) const {
    const auto& ivs = edges_[edge_index].intervals;
    auto it = std::upper_bound(ivs.begin(), ivs.end(), t,
                               [](Time value, const PresenceInterval& iv) { return value < iv.start; });
    if (it == ivs.begin()) return std::nullopt;
    --it;
    if (t > it->end) return std::nullopt;
    return static_cast<std::size_t>(it - ivs.begin());
}

Time TimeVaryingGraph::run_end(std::size_t edge_index, std::size_t interval_index) const {
    return run_ends_[edge_index][interval_index];
}

bool TimeVaryingGraph::rcd_at(std::size_t edge_index, Time t) const {
    auto iv = interval_at(edge_index, t);
    if (!iv) return false;
    return t + edges_[edge_index].intervals[*iv].latency <= run_ends_[edge_index][*iv];
}

bool TimeVaryingGraph::presence(NodeId a, NodeId b, Time t) const {
    auto e = edge_index(a, b);
    return e && interval_at(*e, t).has_value();
}

std::optional<Time> TimeVaryingGraph::latency(NodeId a, NodeId b, Time t) const {
    auto e = edge_index(a, b);
    if (!e) return std::nullopt;
    auto iv = interval_at(*e, t);
    if (!iv) return std::nullopt;
    return edges_[*e].intervals[*iv].latency;
}

bool TimeVaryingGraph::rcd(NodeId a, NodeId b, Time t) const {
    if (a == b) throw std::invalid_argument("rcd: endpoints must differ");
    auto e = edge_index(a, b);
    return e && rcd_at(*e, t);
}

StaticGraph TimeVaryingGraph::snapshot(Time t) const {
    if (t < 0 || t > horizon_) throw std::out_of_range("snapshot: instant outside modeled window");
    std::vector<std::pair<NodeId, NodeId>> present;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (interval_at(e, t)) present.emplace_back(edges_[e].u, edges_[e].v);
    return StaticGraph(node_count(), std::move(present), labels_);
}

StaticGraph TimeVaryingGraph::underlying_graph() const {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (const auto& e : edges_)
        if (!e.intervals.empty()) pairs.emplace_back(e.u, e.v);
    return StaticGraph(node_count(), std::move(pairs), labels_);
}

Time TimeVaryingGraph::max_latency() const {
    Time m = 1;
    for (const auto& e : edges_)
        for (const auto& iv : e.intervals) m = std::max(m, iv.latency);
    return m;
}

TimeVaryingGraph TimeVaryingGraph::induced_without(const std::vector<NodeId>& removed) const {
    std::vector<bool> gone(node_count(), false);
    for (NodeId r : removed) {
        check_node(r, "induced_without");
        gone[r] = true;
    }
    std::vector<NodeId> remap(node_count(), -1);
    std::vector<std::int64_t> labels;
    NodeId next = 0;
    for (std::size_t i = 0; i < node_count(); ++i) {
        if (gone[i]) continue;
        remap[i] = next++;
        labels.push_back(labels_[i]);
    }
    std::vector<EdgeSchedule> edges;
    for (const auto& e : edges_)
        if (!gone[e.u] && !gone[e.v]) edges.push_back({remap[e.u], remap[e.v], e.intervals});
    return TimeVaryingGraph(static_cast<std::size_t>(next), std::move(edges), horizon_, class_,
                            std::move(labels));
}

std::vector<Time> rcd_send_instants(const TimeVaryingGraph& g, std::size_t edge_index) {
    std::vector<Time> instants;
    for (const auto& iv : g.edge(edge_index).intervals) {
        Time run = g.run_end(edge_index, g.interval_at(edge_index, iv.start).value());
        for (Time t = iv.start; t <= iv.end && t + iv.latency <= run; ++t) instants.push_back(t);
    }
    return instants;
}

bool validate_tber(const TimeVaryingGraph& g, Time delta) {
    if (delta < 1) throw std::invalid_argument("validate_tber: delta must be positive");
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).intervals.empty()) continue;
        auto instants = rcd_send_instants(g, e);
        if (instants.empty()) return false;
        if (instants.front() > delta) return false;
        for (std::size_t i = 1; i < instants.size(); ++i)
            if (instants[i] - instants[i - 1] > delta) return false;
        Time last = instants.back();
        Time last_latency = *g.latency(g.edge(e).u, g.edge(e).v, last);
        // The recurrence may continue past the horizon; only a silent tail
        // that another appearance should have fit into is a failure.
        if (last + delta + last_latency <= g.horizon()) return false;
    }
    return true;
}

}  // namespace dcpa
