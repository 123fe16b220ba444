#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dcpa/fixtures.hpp"
#include "dcpa/generate.hpp"
#include "dcpa/io.hpp"
#include "dcpa/klo.hpp"
#include "dcpa/oracle.hpp"
#include "dcpa/sim.hpp"
#include "dcpa/sweep.hpp"

namespace {

// 0 success / guaranteed, 2 impossible, 3 unknown, 4 input error, 5 guard refusal
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitImpossible = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitInput = 4;
constexpr int kExitGuard = 5;

using namespace dcpa;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        save_text(out_path, text);
}

BroadcastScenario load_checked_scenario(const std::string& path, const TimeVaryingGraph& g) {
    auto sc = load_scenario(path, g);
    if (sc.t_br > g.horizon()) throw ParseError("scenario: t_br is past the graph horizon");
    return sc;
}

int verdict_exit(TerminationStatus status) {
    switch (status) {
        case TerminationStatus::GuaranteedSufficient:
        case TerminationStatus::GuaranteedStrict: return kExitOk;
        case TerminationStatus::Impossible: return kExitImpossible;
        case TerminationStatus::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

BehaviorKind parse_behavior(const std::string& name) {
    if (name == "silent") return BehaviorKind::Silent;
    if (name == "mute-relay") return BehaviorKind::MuteRelay;
    if (name == "forge-content") return BehaviorKind::ForgeContent;
    if (name == "flood-forge") return BehaviorKind::FloodForge;
    throw ParseError("unknown behavior '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-varying graph toolkit: certified-propagation broadcast simulation, "
                 "level orderings, liveness verdicts and latency bounds"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph file");
    std::string gen_kind = "random";
    std::uint64_t gen_seed = 0;
    std::size_t gen_n = 6;
    double gen_p = 0.5;
    Time gen_horizon = 12, gen_lat_min = 1, gen_lat_max = 1, gen_delta = 4, gen_period = 4;
    std::string gen_base, gen_out;
    gen->add_option("--kind", gen_kind, "random | er | tber")->capture_default_str();
    gen->add_option("--seed", gen_seed, "Generator seed")->required();
    gen->add_option("--n", gen_n, "Node count (random)")->capture_default_str();
    gen->add_option("--p", gen_p, "Per-instant edge probability (random)")->capture_default_str();
    gen->add_option("--horizon", gen_horizon, "Last modeled instant")->capture_default_str();
    gen->add_option("--lat-min", gen_lat_min, "Smallest latency")->capture_default_str();
    gen->add_option("--lat-max", gen_lat_max, "Largest latency")->capture_default_str();
    gen->add_option("--delta", gen_delta, "Recurrence bound (tber)")->capture_default_str();
    gen->add_option("--period", gen_period, "Recurrence period (er)")->capture_default_str();
    gen->add_option("--base", gen_base, "Graph file whose underlying graph seeds er/tber");
    gen->add_option("--out", gen_out, "Output file (stdout when omitted)");

    // validate
    auto* validate = app.add_subcommand("validate", "Parse a graph file and audit its class");
    std::string val_tvg;
    std::optional<Time> val_delta;
    validate->add_option("--tvg", val_tvg, "Graph file")->required();
    validate->add_option("--delta", val_delta, "Recurrence bound override for the audit");

    // mklo / tmklo
    auto* mklo = app.add_subcommand("mklo", "Static minimum k-level ordering of the underlying graph");
    auto* tmklo = app.add_subcommand("tmklo", "Temporal minimum k-level ordering");
    std::string ord_tvg, ord_out;
    std::int64_t ord_source = 0;
    int ord_k = 1;
    Time ord_tbr = 0;
    for (auto* cmd : {mklo, tmklo}) {
        cmd->add_option("--tvg", ord_tvg, "Graph file")->required();
        cmd->add_option("--source", ord_source, "Source node id")->required();
        cmd->add_option("--k", ord_k, "Level threshold k")->required();
        cmd->add_option("--out", ord_out, "Output file (stdout when omitted)");
    }
    tmklo->add_option("--t-br", ord_tbr, "Broadcast start instant")->capture_default_str();

    // verdict
    auto* verdict = app.add_subcommand("verdict", "Conscious-termination decision");
    std::string ver_tvg, ver_scenario, ver_oracle = "fko", ver_out;
    std::size_t ver_max_n = 10;
    verdict->add_option("--tvg", ver_tvg, "Graph file")->required();
    verdict->add_option("--scenario", ver_scenario, "Scenario file")->required();
    verdict->add_option("--oracle", ver_oracle, "fko | pko")->capture_default_str();
    verdict->add_option("--strict-max-n", ver_max_n, "Node cap for the exhaustive phase")
        ->capture_default_str();
    verdict->add_option("--out", ver_out, "Output file (stdout when omitted)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Broadcast-latency bounds");
    std::string bnd_tvg, bnd_scenario, bnd_method = "fko", bnd_out;
    std::optional<Time> bnd_delta;
    bounds->add_option("--tvg", bnd_tvg, "Graph file")->required();
    bounds->add_option("--scenario", bnd_scenario, "Scenario file")->required();
    bounds->add_option("--method", bnd_method, "fko | tber-sko | tber-pko")->capture_default_str();
    bounds->add_option("--delta", bnd_delta, "Recurrence bound (defaults to the declared class)");
    bounds->add_option("--out", bnd_out, "Output file (stdout when omitted)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "One broadcast execution");
    std::string sim_tvg, sim_scenario, sim_placement, sim_behavior = "silent", sim_out;
    std::string sim_forged = "forged";
    std::optional<Time> sim_horizon;
    std::optional<std::uint64_t> sim_noise_seed;
    int sim_corrupt = 0, sim_forge_sender = 0;
    simulate->add_option("--tvg", sim_tvg, "Graph file")->required();
    simulate->add_option("--scenario", sim_scenario, "Scenario file")->required();
    simulate->add_option("--placement", sim_placement, "Placement file (none: no Byzantine nodes)");
    simulate->add_option("--behavior", sim_behavior,
                         "silent | mute-relay | forge-content | flood-forge")
        ->capture_default_str();
    simulate->add_option("--forged-content", sim_forged, "Payload used by forging behaviors")
        ->capture_default_str();
    simulate->add_option("--horizon", sim_horizon, "Simulate a shorter or longer window");
    simulate->add_option("--noise-seed", sim_noise_seed,
                         "Unreliable-channel mode: seed for in-flight faults");
    simulate->add_option("--corrupt-permille", sim_corrupt, "Payload corruption rate (noise mode)")
        ->capture_default_str();
    simulate->add_option("--forge-sender-permille", sim_forge_sender,
                         "Sender rewrite rate (noise mode)")
        ->capture_default_str();
    simulate->add_option("--out", sim_out, "Output file (stdout when omitted)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Placement x behavior cross product with checks");
    std::string swp_tvg, swp_scenario, swp_out;
    std::size_t swp_max_n = 10;
    sweep_cmd->add_option("--tvg", swp_tvg, "Graph file")->required();
    sweep_cmd->add_option("--scenario", swp_scenario, "Scenario file")->required();
    sweep_cmd->add_option("--strict-max-n", swp_max_n, "Node cap for placement enumeration")
        ->capture_default_str();
    sweep_cmd->add_option("--out", swp_out, "Output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            TimeVaryingGraph g;
            if (gen_kind == "random") {
                g = generate(RandomTvgSpec{gen_n, gen_p, gen_horizon, gen_lat_min, gen_lat_max},
                             gen_seed);
            } else if (gen_kind == "er" || gen_kind == "tber") {
                if (gen_base.empty()) throw ParseError("gen: er/tber need --base");
                auto base = load_tvg(gen_base).underlying_graph();
                if (gen_kind == "er")
                    g = generate(ErPeriodicSpec{base, gen_period, gen_lat_max, gen_horizon},
                                 gen_seed);
                else
                    g = generate(TberSpec{base, gen_delta, gen_lat_max, gen_horizon}, gen_seed);
            } else {
                throw ParseError("gen: unknown kind '" + gen_kind + "'");
            }
            emit(dump_tvg(g), gen_out);
            return kExitOk;
        }

        if (validate->parsed()) {
            auto g = load_tvg(val_tvg);
            std::ostringstream out;
            out << "nodes=" << g.node_count() << " edges=" << g.edge_count()
                << " horizon=" << g.horizon() << "\n";
            std::optional<Time> delta = val_delta ? val_delta : g.declared_class().delta;
            if (delta) {
                bool ok = validate_tber(g, *delta);
                out << "recurrence delta=" << *delta << " audit=" << (ok ? "pass" : "FAIL") << "\n";
                std::cout << out.str();
                return ok ? kExitOk : kExitViolation;
            }
            std::cout << out.str();
            return kExitOk;
        }

        if (mklo->parsed() || tmklo->parsed()) {
            auto g = load_tvg(ord_tvg);
            auto source = g.node_by_label(ord_source);
            if (!source) throw ParseError("unknown source node id");
            if (mklo->parsed()) {
                auto ordering = compute_mklo(g.underlying_graph(), *source, ord_k);
                emit(format_ordering(ordering, g.labels()), ord_out);
            } else {
                auto ordering = compute_tmklo(g, {*source, ord_k, ord_tbr});
                emit(format_ordering(ordering, g.labels()), ord_out);
            }
            return kExitOk;
        }

        if (verdict->parsed()) {
            auto g = load_tvg(ver_tvg);
            auto sc = load_checked_scenario(ver_scenario, g);
            TerminationVerdict result;
            if (ver_oracle == "fko")
                result = conscious_termination_fko(g, sc, ver_max_n);
            else if (ver_oracle == "pko")
                result = conscious_termination_pko_er(OracleView::partial(g), sc, ver_max_n);
            else
                throw ParseError("verdict: unknown oracle '" + ver_oracle + "'");
            emit(format_verdict(result, ver_oracle.c_str(), g.labels()), ver_out);
            return verdict_exit(result.status);
        }

        if (bounds->parsed()) {
            auto g = load_tvg(bnd_tvg);
            auto sc = load_checked_scenario(bnd_scenario, g);
            LatencyBounds result;
            if (bnd_method == "fko") {
                result = bl_bounds_fko(g, sc);
            } else {
                std::optional<Time> delta = bnd_delta ? bnd_delta : g.declared_class().delta;
                if (!delta) throw ParseError("bounds: no recurrence bound declared or given");
                TberParams params{*delta, g.max_latency()};
                if (bnd_method == "tber-sko")
                    result = bl_bound_tber(OracleView::size_only(g), params, sc);
                else if (bnd_method == "tber-pko")
                    result = bl_bound_tber(OracleView::partial(g), params, sc);
                else
                    throw ParseError("bounds: unknown method '" + bnd_method + "'");
            }
            emit(format_bounds(result), bnd_out);
            return kExitOk;
        }

        if (simulate->parsed()) {
            auto g = load_tvg(sim_tvg);
            auto sc = load_checked_scenario(sim_scenario, g);
            Placement placement{{}, sc.f};
            if (!sim_placement.empty()) {
                placement = load_placement(sim_placement, g);
                if (placement.f != sc.f)
                    throw ParseError("placement bound differs from the scenario's f");
            }
            auto behaviors = uniform_behaviors(placement, parse_behavior(sim_behavior), sim_forged);
            SimTrace trace;
            if (sim_noise_seed)
                trace = run_unreliable(g, sc, placement, behaviors,
                                       {*sim_noise_seed, sim_corrupt, sim_forge_sender},
                                       sim_horizon);
            else
                trace = run(g, sc, placement, behaviors, sim_horizon);
            emit(format_trace(trace, g, placement), sim_out);
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            auto g = load_tvg(swp_tvg);
            auto sc = load_checked_scenario(swp_scenario, g);
            auto report = sweep(g, sc, swp_max_n);
            emit(format_sweep(report, g, sc), swp_out);
            bool ok = report.safety_ok && report.sufficiency_ok && report.necessity_ok &&
                      report.bounds_ok;
            return ok ? kExitOk : kExitViolation;
        }
    } catch (const GuardRefused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
