#pragma once

#include "dcpa/tvg.hpp"

namespace dcpa::fixtures {

/// Five nodes, unit latency, horizon 4. Broadcast from node 0 at t=0 with
/// k=2 climbs through levels at t=0,1,2,4 and covers everyone: node 4 is
/// never adjacent to the source and gets its two certificates from nodes 1
/// and 3.
TimeVaryingGraph five_node_ladder();

/// Five nodes, unit latency, horizon 4. The underlying graph passes the
/// static analysis for f=1 from node 0, yet the schedule starves nodes 3 and
/// 4: the source edge to node 3 is up for a single instant only (too short
/// for any crossing) and the edges into node 4 appear before their far
/// endpoints hold the message. A reconstruction of that shape from its known
/// required properties, not a measured network.
TimeVaryingGraph five_node_trap();

}  // namespace dcpa::fixtures
