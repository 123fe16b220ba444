#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "dcpa/klo.hpp"
#include "dcpa/oracle.hpp"
#include "dcpa/sim.hpp"
#include "dcpa/sweep.hpp"
#include "dcpa/tvg.hpp"

namespace dcpa {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph files. Node ids in the file may be any distinct non-negative
// integers; they are normalized to dense internal ids and kept as labels, and
// every report prints the file's ids.
TimeVaryingGraph parse_tvg(const std::string& text);
std::string dump_tvg(const TimeVaryingGraph& g);
TimeVaryingGraph load_tvg(const std::filesystem::path& path);
void save_text(const std::filesystem::path& path, const std::string& text);

// Scenario and placement files; node references are file labels.
BroadcastScenario parse_scenario(const std::string& text, const TimeVaryingGraph& g);
BroadcastScenario load_scenario(const std::filesystem::path& path, const TimeVaryingGraph& g);
Placement parse_placement(const std::string& text, const TimeVaryingGraph& g);
Placement load_placement(const std::filesystem::path& path, const TimeVaryingGraph& g);

// Reports. All byte-stable: sorted keys, sorted node lists.
std::string format_ordering(const StaticLevelOrdering& ordering,
                            const std::vector<std::int64_t>& labels);
std::string format_ordering(const TemporalLevelOrdering& ordering,
                            const std::vector<std::int64_t>& labels);
std::string format_verdict(const TerminationVerdict& verdict, const char* method,
                           const std::vector<std::int64_t>& labels);
std::string format_bounds(const LatencyBounds& bounds);
std::string format_trace(const SimTrace& trace, const TimeVaryingGraph& g,
                         const Placement& placement);
std::string format_sweep(const SweepReport& report, const TimeVaryingGraph& g,
                         const BroadcastScenario& scenario);

}  // namespace dcpa
