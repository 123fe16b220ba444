#include "dcpa/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace dcpa {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

std::int64_t require_int(const json& j, const char* field, const char* ctx) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string(ctx) + ": missing or non-integer field '" + field + "'");
    return j[field].get<std::int64_t>();
}

std::string pair_name(std::int64_t u, std::int64_t v) {
    return "edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
}

json ordering_json(const StaticLevelOrdering& ordering, const std::vector<std::int64_t>& labels) {
    json j;
    j["type"] = "mklo";
    j["source"] = labels.at(static_cast<std::size_t>(ordering.source));
    j["k"] = ordering.k;
    j["levels"] = json::array();
    for (std::size_t i = 0; i < ordering.levels.size(); ++i) {
        json level;
        level["index"] = i;
        json nodes = json::array();
        for (NodeId p : ordering.levels[i]) nodes.push_back(labels.at(static_cast<std::size_t>(p)));
        level["nodes"] = std::move(nodes);
        j["levels"].push_back(std::move(level));
    }
    j["uncovered"] = json::array();
    for (NodeId p : ordering.uncovered)
        j["uncovered"].push_back(labels.at(static_cast<std::size_t>(p)));
    return j;
}

json ordering_json(const TemporalLevelOrdering& ordering,
                   const std::vector<std::int64_t>& labels) {
    json j;
    j["type"] = "tmklo";
    j["source"] = labels.at(static_cast<std::size_t>(ordering.source));
    j["k"] = ordering.k;
    j["t_br"] = ordering.t_br;
    j["levels"] = json::array();
    for (const auto& [time, members] : ordering.levels) {
        json level;
        level["time"] = time;
        json nodes = json::array();
        for (NodeId p : members) nodes.push_back(labels.at(static_cast<std::size_t>(p)));
        level["nodes"] = std::move(nodes);
        j["levels"].push_back(std::move(level));
    }
    j["uncovered"] = json::array();
    for (NodeId p : ordering.uncovered)
        j["uncovered"].push_back(labels.at(static_cast<std::size_t>(p)));
    return j;
}

}  // namespace

TimeVaryingGraph parse_tvg(const std::string& text) {
    json j = parse_json(text, "tvg");
    if (!j.contains("nodes") || !j["nodes"].is_array() || j["nodes"].empty())
        throw ParseError("tvg: 'nodes' must be a non-empty array");
    std::vector<std::int64_t> labels;
    for (const auto& item : j["nodes"]) {
        if (!item.is_number_integer() || item.get<std::int64_t>() < 0)
            throw ParseError("tvg: node ids must be non-negative integers");
        labels.push_back(item.get<std::int64_t>());
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw ParseError("tvg: duplicate node id");
    std::map<std::int64_t, NodeId> dense;
    for (std::size_t i = 0; i < labels.size(); ++i) dense[labels[i]] = static_cast<NodeId>(i);

    Time horizon = require_int(j, "horizon", "tvg");
    if (horizon < 0) throw ParseError("tvg: horizon must be non-negative");

    std::vector<EdgeSchedule> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("tvg: 'edges' must be an array");
        for (const auto& je : j["edges"]) {
            std::int64_t lu = require_int(je, "u", "tvg edge");
            std::int64_t lv = require_int(je, "v", "tvg edge");
            if (!dense.count(lu) || !dense.count(lv))
                throw ParseError(pair_name(lu, lv) + ": endpoint is not a declared node");
            if (lu == lv) throw ParseError(pair_name(lu, lv) + ": self-loop");
            EdgeSchedule e{dense[lu], dense[lv], {}};
            if (!je.contains("intervals") || !je["intervals"].is_array())
                throw ParseError(pair_name(lu, lv) + ": missing 'intervals' array");
            for (const auto& ji : je["intervals"]) {
                PresenceInterval iv;
                iv.start = require_int(ji, "start", "interval");
                iv.end = require_int(ji, "end", "interval");
                iv.latency = require_int(ji, "latency", "interval");
                if (iv.start < 0 || iv.start > iv.end)
                    throw ParseError(pair_name(lu, lv) + ": bad interval bounds");
                if (iv.end > horizon) throw ParseError(pair_name(lu, lv) + ": interval past horizon");
                if (iv.latency < 1) throw ParseError(pair_name(lu, lv) + ": latency must be >= 1");
                e.intervals.push_back(iv);
            }
            std::sort(e.intervals.begin(), e.intervals.end(),
                      [](const PresenceInterval& a, const PresenceInterval& b) {
                          return a.start < b.start;
                      });
            for (std::size_t i = 1; i < e.intervals.size(); ++i)
                if (e.intervals[i - 1].end >= e.intervals[i].start)
                    throw ParseError(pair_name(lu, lv) + ": overlapping intervals");
            edges.push_back(std::move(e));
        }
    }

    TvgClass cls;
    if (j.contains("class")) {
        const auto& jc = j["class"];
        std::string kind = jc.value("kind", "generic");
        if (kind == "generic")
            cls.kind = TvgClassKind::Generic;
        else if (kind == "er")
            cls.kind = TvgClassKind::Er;
        else if (kind == "tber")
            cls.kind = TvgClassKind::Tber;
        else
            throw ParseError("tvg: unknown class kind '" + kind + "'");
        if (jc.contains("delta")) {
            Time delta = require_int(jc, "delta", "tvg class");
            if (delta < 1) throw ParseError("tvg: class delta must be >= 1");
            cls.delta = delta;
        }
        if (cls.kind == TvgClassKind::Tber && !cls.delta)
            throw ParseError("tvg: tber class requires 'delta'");
    }

    try {
        return TimeVaryingGraph(labels.size(), std::move(edges), horizon, cls, labels);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("tvg: ") + e.what());
    }
}

std::string dump_tvg(const TimeVaryingGraph& g) {
    json j;
    j["nodes"] = json::array();
    for (std::int64_t label : g.labels()) j["nodes"].push_back(label);
    j["edges"] = json::array();
    for (const auto& e : g.edges()) {
        json je;
        je["u"] = g.label(e.u);
        je["v"] = g.label(e.v);
        je["intervals"] = json::array();
        for (const auto& iv : e.intervals)
            je["intervals"].push_back({{"start", iv.start}, {"end", iv.end}, {"latency", iv.latency}});
        j["edges"].push_back(std::move(je));
    }
    j["horizon"] = g.horizon();
    if (g.declared_class().kind != TvgClassKind::Generic || g.declared_class().delta) {
        json jc;
        switch (g.declared_class().kind) {
            case TvgClassKind::Generic: jc["kind"] = "generic"; break;
            case TvgClassKind::Er: jc["kind"] = "er"; break;
            case TvgClassKind::Tber: jc["kind"] = "tber"; break;
        }
        if (g.declared_class().delta) jc["delta"] = *g.declared_class().delta;
        j["class"] = std::move(jc);
    }
    return j.dump(2) + "\n";
}

TimeVaryingGraph load_tvg(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_tvg(buffer.str());
}

void save_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path.string());
    out << text;
}

BroadcastScenario parse_scenario(const std::string& text, const TimeVaryingGraph& g) {
    json j = parse_json(text, "scenario");
    BroadcastScenario sc;
    std::int64_t source_label = require_int(j, "source", "scenario");
    auto source = g.node_by_label(source_label);
    if (!source) throw ParseError("scenario: source " + std::to_string(source_label) +
                                  " is not a node of the graph");
    sc.source = *source;
    sc.t_br = require_int(j, "t_br", "scenario");
    sc.f = static_cast<int>(require_int(j, "f", "scenario"));
    if (sc.t_br < 0) throw ParseError("scenario: t_br must be non-negative");
    if (sc.f < 0) throw ParseError("scenario: f must be non-negative");
    if (!j.contains("content") || !j["content"].is_string())
        throw ParseError("scenario: missing string field 'content'");
    sc.content = j["content"].get<std::string>();
    return sc;
}

BroadcastScenario load_scenario(const std::filesystem::path& path, const TimeVaryingGraph& g) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), g);
}

Placement parse_placement(const std::string& text, const TimeVaryingGraph& g) {
    json j = parse_json(text, "placement");
    Placement p;
    p.f = static_cast<int>(require_int(j, "f", "placement"));
    if (p.f < 0) throw ParseError("placement: f must be non-negative");
    if (!j.contains("byzantine") || !j["byzantine"].is_array())
        throw ParseError("placement: missing 'byzantine' array");
    for (const auto& item : j["byzantine"]) {
        if (!item.is_number_integer()) throw ParseError("placement: node ids must be integers");
        auto node = g.node_by_label(item.get<std::int64_t>());
        if (!node)
            throw ParseError("placement: node " + item.dump() + " is not a node of the graph");
        p.byzantine.push_back(*node);
    }
    std::sort(p.byzantine.begin(), p.byzantine.end());
    p.byzantine.erase(std::unique(p.byzantine.begin(), p.byzantine.end()), p.byzantine.end());
    return p;
}

Placement load_placement(const std::filesystem::path& path, const TimeVaryingGraph& g) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_placement(buffer.str(), g);
}

std::string format_ordering(const StaticLevelOrdering& ordering,
                            const std::vector<std::int64_t>& labels) {
    return ordering_json(ordering, labels).dump(2) + "\n";
}

std::string format_ordering(const TemporalLevelOrdering& ordering,
                            const std::vector<std::int64_t>& labels) {
    return ordering_json(ordering, labels).dump(2) + "\n";
}

std::string format_verdict(const TerminationVerdict& verdict, const char* method,
                           const std::vector<std::int64_t>& labels) {
    json j;
    j["method"] = method;
    j["status"] = termination_status_name(verdict.status);
    j["placements_checked"] = verdict.placements_checked;
    if (verdict.failing_placement) {
        json byz = json::array();
        for (NodeId b : verdict.failing_placement->byzantine)
            byz.push_back(labels.at(static_cast<std::size_t>(b)));
        j["failing_placement"] = std::move(byz);
    } else {
        j["failing_placement"] = nullptr;
    }
    if (verdict.tmklo_witness)
        j["witness"] = ordering_json(*verdict.tmklo_witness, verdict.witness_labels);
    else if (verdict.mklo_witness)
        j["witness"] = ordering_json(*verdict.mklo_witness, verdict.witness_labels);
    else
        j["witness"] = nullptr;
    return j.dump(2) + "\n";
}

std::string format_bounds(const LatencyBounds& bounds) {
    json j;
    j["method"] = bound_method_name(bounds.method);
    j["lower"] = bounds.lower ? json(*bounds.lower) : json(nullptr);
    j["upper"] = bounds.upper ? json(*bounds.upper) : json(nullptr);
    if (bounds.s_levels) j["s_levels"] = *bounds.s_levels;
    if (bounds.s_nodes) j["s_nodes"] = *bounds.s_nodes;
    return j.dump(2) + "\n";
}

std::string format_trace(const SimTrace& trace, const TimeVaryingGraph& g,
                         const Placement& placement) {
    std::ostringstream out;
    out << "# trace v1\n";
    out << "scenario source=" << g.label(trace.source) << " t_br=" << trace.t_br << " content=\""
        << trace.content << "\" horizon=" << trace.horizon << "\n";
    out << "placement f=" << placement.f << " byzantine=[";
    for (std::size_t i = 0; i < placement.byzantine.size(); ++i)
        out << (i ? "," : "") << g.label(placement.byzantine[i]);
    out << "]\n";
    for (const auto& e : trace.log)
        out << "event t=" << e.t << " outcome=" << outcome_name(e.outcome) << " sender="
            << g.label(e.sender) << " receiver=" << g.label(e.receiver) << " source="
            << g.label(e.source) << " content=\"" << e.content << "\"\n";
    for (NodeId p = 0; static_cast<std::size_t>(p) < trace.delivered.size(); ++p) {
        auto at = trace.delivery_time(p);
        out << "summary node=" << g.label(p) << " delivered_at=";
        if (at)
            out << *at;
        else
            out << "never";
        out << "\n";
    }
    BroadcastScenario sc{trace.source, trace.t_br, placement.f, trace.content};
    auto bl = broadcast_latency(trace, sc, placement);
    out << "summary bl=";
    if (bl)
        out << *bl;
    else
        out << "never";
    out << " messages_sent=" << trace.messages_sent << "\n";
    return out.str();
}

std::string format_sweep(const SweepReport& report, const TimeVaryingGraph& g,
                         const BroadcastScenario& scenario) {
    std::ostringstream out;
    out << "# sweep source=" << g.label(scenario.source) << " t_br=" << scenario.t_br
        << " f=" << scenario.f << "\n";
    auto ordering_line = [&](const char* name, const TemporalLevelOrdering& ordering) {
        out << name << " k=" << ordering.k << " covers=" << (ordering.covers_all() ? "yes" : "no");
        if (ordering.covers_all()) out << " last_level=" << *ordering.last_level_time();
        out << "\n";
    };
    ordering_line("necessary", report.necessary);
    ordering_line("sufficient", report.sufficient);
    out << "bounds lower=";
    if (report.bounds.lower)
        out << *report.bounds.lower;
    else
        out << "-";
    out << " upper=";
    if (report.bounds.upper)
        out << *report.bounds.upper;
    else
        out << "-";
    out << "\n";
    for (const auto& entry : report.runs) {
        out << "run placement=[";
        for (std::size_t i = 0; i < entry.placement.byzantine.size(); ++i)
            out << (i ? "," : "") << g.label(entry.placement.byzantine[i]);
        out << "] behavior=" << behavior_name(entry.behavior) << " bl=";
        if (entry.bl)
            out << *entry.bl;
        else
            out << "never";
        out << " delivered=" << (entry.all_correct_delivered ? "yes" : "no")
            << " safety_violations=" << entry.safety_violations
            << " messages=" << entry.messages_sent << "\n";
    }
    out << "invariants safety=" << (report.safety_ok ? "ok" : "VIOLATED")
        << " sufficiency=" << (report.sufficiency_ok ? "ok" : "VIOLATED")
        << " necessity=" << (report.necessity_ok ? "ok" : "VIOLATED")
        << " bounds=" << (report.bounds_ok ? "ok" : "VIOLATED") << "\n";
    return out.str();
}

}  // namespace dcpa
