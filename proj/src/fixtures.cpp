#include "dcpa/fixtures.hpp"

namespace dcpa::fixtures {

TimeVaryingGraph five_node_ladder() {
    std::vector<EdgeSchedule> edges = {
        {0, 1, {{0, 1, 1}}},
        {0, 3, {{1, 2, 1}}},
        {0, 2, {{3, 4, 1}}},
        {1, 4, {{1, 2, 1}}},
        {3, 4, {{3, 4, 1}}},
    };
    return TimeVaryingGraph(5, std::move(edges), 4);
}

TimeVaryingGraph five_node_trap() {
    std::vector<EdgeSchedule> edges = {
        {0, 1, {{0, 1, 1}}},
        {0, 2, {{1, 2, 1}}},
        {0, 3, {{2, 2, 1}}},  // one instant: present, but nothing can cross
        {1, 4, {{2, 3, 1}}},
        {2, 4, {{0, 1, 1}}},  // gone before node 2 holds the message
        {3, 4, {{0, 1, 1}}},  // gone before node 3 could ever hold it
    };
    return TimeVaryingGraph(5, std::move(edges), 4);
}

}  // namespace dcpa::fixtures
