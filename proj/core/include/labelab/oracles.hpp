#ifndef LABELAB_ORACLES_HPP
#define LABELAB_ORACLES_HPP

#include <functional>
#include <string>

#include "labelab/graph.hpp"

namespace labelab {

/// Finite stand-in for a graph class: a name plus a membership predicate.
/// Hereditary oracles allow searchers to prune on partial candidates.
struct GraphClassOracle {
    std::string name;
    std::function<bool(const Graph&)> membership;
    bool hereditary = false;
};

GraphClassOracle forest_oracle();

/// Exact interval-graph test by backtracking over endpoint orderings;
/// intended for small n (the search is exponential in principle).
GraphClassOracle interval_oracle(int max_n = 8);
bool is_interval_graph(const Graph& g, int max_n = 8);

GraphClassOracle complete_oracle();
GraphClassOracle edgeless_oracle();

} // namespace labelab

#endif
