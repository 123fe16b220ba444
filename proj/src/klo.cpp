#include "dcpa/klo.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dcpa {

std::optional<std::size_t> StaticLevelOrdering::level_of(NodeId node) const {
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (std::binary_search(levels[i].begin(), levels[i].end(), node)) return i;
    return std::nullopt;
}

std::optional<Time> TemporalLevelOrdering::time_of(NodeId node) const {
    for (const auto& [t, nodes] : levels)
        if (std::binary_search(nodes.begin(), nodes.end(), node)) return t;
    return std::nullopt;
}

std::optional<Time> TemporalLevelOrdering::last_level_time() const {
    if (levels.empty()) return std::nullopt;
    return levels.back().first;
}

StaticLevelOrdering compute_mklo(const StaticGraph& g, NodeId source, int k) {
    if (k < 1) throw std::invalid_argument("compute_mklo: k must be positive");
    if (source < 0 || static_cast<std::size_t>(source) >= g.node_count())
        throw std::invalid_argument("compute_mklo: unknown source");
    const std::size_t n = g.node_count();
    std::vector<bool> covered(n, false);
    std::vector<int> covered_neighbors(n, 0);
    StaticLevelOrdering out{source, k, {}, {}};

    auto place = [&](std::vector<NodeId> level) {
        std::sort(level.begin(), level.end());
        for (NodeId p : level) covered[p] = true;
        for (NodeId p : level)
            for (NodeId q : g.neighbors(p)) ++covered_neighbors[q];
        out.levels.push_back(std::move(level));
    };

    place({source});
    if (!g.neighbors(source).empty()) place(g.neighbors(source));
    while (true) {
        std::vector<NodeId> next;
        for (NodeId p = 0; static_cast<std::size_t>(p) < n; ++p)
            if (!covered[p] && covered_neighbors[p] >= k) next.push_back(p);
        if (next.empty()) break;
        place(std::move(next));
    }
    for (NodeId p = 0; static_cast<std::size_t>(p) < n; ++p)
        if (!covered[p]) out.uncovered.push_back(p);
    return out;
}

AcceptanceEvaluator::AcceptanceEvaluator(const TimeVaryingGraph& g, AcceptanceParams params)
    : params_(params), horizon_(g.horizon()) {
    if (params_.k < 1) throw std::invalid_argument("acceptance: k must be positive");
    if (params_.source < 0 || static_cast<std::size_t>(params_.source) >= g.node_count())
        throw std::invalid_argument("acceptance: unknown source");
    if (params_.t_br < 0 || params_.t_br > horizon_)
        throw std::invalid_argument("acceptance: t_br outside modeled window");
    const std::size_t n = g.node_count();
    const StaticGraph und = g.underlying_graph();
    table_.assign(n, std::vector<char>(static_cast<std::size_t>(horizon_) + 1, 0));
    // Rows are filled per instant in ascending order; every AK3 reference
    // looks at a send instant strictly below t, so cells it reads are final.
    for (Time t = 0; t <= horizon_; ++t) {
        for (NodeId p = 0; static_cast<std::size_t>(p) < n; ++p) {
            char value = 0;
            if (p == params_.source && t >= params_.t_br) {
                value = 1;  // AK1
            }
            if (!value && und.has_edge(params_.source, p)) {  // AK2
                for (Time send = params_.t_br; send < t && !value; ++send)
                    if (g.rcd(params_.source, p, send) &&
                        send + *g.latency(params_.source, p, send) <= t)
                        value = 1;
            }
            if (!value) {  // AK3
                int donors = 0;
                for (NodeId q : und.neighbors(p)) {
                    bool certified = false;
                    for (Time send = params_.t_br; send < t && !certified; ++send)
                        if (table_[q][static_cast<std::size_t>(send)] && g.rcd(p, q, send) &&
                            send + *g.latency(p, q, send) <= t)
                            certified = true;
                    if (certified) ++donors;
                }
                if (donors >= params_.k) value = 1;
            }
            table_[p][static_cast<std::size_t>(t)] = value;
        }
    }
}

int AcceptanceEvaluator::operator()(NodeId node, Time t) const {
    if (node < 0 || static_cast<std::size_t>(node) >= table_.size())
        throw std::invalid_argument("acceptance: unknown node");
    if (t < 0 || t > horizon_) throw std::invalid_argument("acceptance: instant outside window");
    return table_[node][static_cast<std::size_t>(t)];
}

std::optional<Time> AcceptanceEvaluator::first_acceptance(NodeId node) const {
    if (node < 0 || static_cast<std::size_t>(node) >= table_.size())
        throw std::invalid_argument("acceptance: unknown node");
    for (Time t = 0; t <= horizon_; ++t)
        if (table_[node][static_cast<std::size_t>(t)]) return t;
    return std::nullopt;
}

int acceptance(const TimeVaryingGraph& g, const AcceptanceParams& params, NodeId node, Time t) {
    return AcceptanceEvaluator(g, params)(node, t);
}

TemporalLevelOrdering compute_tmklo(const TimeVaryingGraph& g, const AcceptanceParams& params) {
    if (params.k < 1) throw std::invalid_argument("compute_tmklo: k must be positive");
    if (params.source < 0 || static_cast<std::size_t>(params.source) >= g.node_count())
        throw std::invalid_argument("compute_tmklo: unknown source");
    if (params.t_br < 0 || params.t_br > g.horizon())
        throw std::invalid_argument("compute_tmklo: t_br outside modeled window");

    const std::size_t n = g.node_count();
    const std::size_t m = g.edge_count();
    const Time horizon = g.horizon();

    std::vector<Time> covered_at(n, -1);
    std::vector<int> certificates(n, 0);
    // One flag per edge direction: set once the far endpoint has registered a
    // certificate from this neighbor; stops redundant retransmission.
    std::vector<char> cert_done(2 * m, 0);
    std::vector<std::size_t> cursor(m, 0);

    struct Arrival {
        std::uint32_t edge;
        std::uint8_t dir;  // 0: u->v, 1: v->u
    };
    std::vector<std::vector<Arrival>> arrivals(static_cast<std::size_t>(horizon) + 2);

    std::size_t covered_count = 1;
    covered_at[params.source] = params.t_br;

    for (Time t = params.t_br; t <= horizon && covered_count < n; ++t) {
        for (const Arrival& a : arrivals[static_cast<std::size_t>(t)]) {
            if (cert_done[2 * a.edge + a.dir]) continue;
            cert_done[2 * a.edge + a.dir] = 1;
            const EdgeSchedule& e = g.edge(a.edge);
            NodeId from = a.dir == 0 ? e.u : e.v;
            NodeId to = a.dir == 0 ? e.v : e.u;
            if (covered_at[to] >= 0) continue;
            if (from == params.source) {  // AK2
                covered_at[to] = t;
                ++covered_count;
            } else if (++certificates[to] >= params.k) {  // AK3
                covered_at[to] = t;
                ++covered_count;
            }
        }
        for (std::size_t e = 0; e < m; ++e) {
            const auto& intervals = g.edge(e).intervals;
            while (cursor[e] < intervals.size() && intervals[cursor[e]].end < t) ++cursor[e];
            if (cursor[e] >= intervals.size() || intervals[cursor[e]].start > t) continue;
            Time lat = intervals[cursor[e]].latency;
            if (t + lat > g.run_end(e, cursor[e])) continue;  // rcd fails at t
            NodeId ends[2] = {g.edge(e).u, g.edge(e).v};
            for (int dir = 0; dir < 2; ++dir) {
                NodeId from = ends[dir];
                if (covered_at[from] < 0 || covered_at[from] > t) continue;
                if (cert_done[2 * e + static_cast<std::size_t>(dir)]) continue;
                arrivals[static_cast<std::size_t>(t + lat)].push_back(
                    {static_cast<std::uint32_t>(e), static_cast<std::uint8_t>(dir)});
            }
        }
    }

    TemporalLevelOrdering out{params.source, params.k, params.t_br, {}, {}};
    std::map<Time, std::vector<NodeId>> by_time;
    for (NodeId p = 0; static_cast<std::size_t>(p) < n; ++p) {
        if (covered_at[p] >= 0)
            by_time[covered_at[p]].push_back(p);
        else
            out.uncovered.push_back(p);
    }
    for (auto& [time, nodes] : by_time) out.levels.emplace_back(time, std::move(nodes));
    return out;
}

}  // namespace dcpa
