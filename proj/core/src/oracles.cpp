#include "labelab/oracles.hpp"

#include <stdexcept>
#include <vector>

namespace labelab {

namespace {

// Place endpoint events left to right; opening a vertex makes it adjacent to
// exactly the currently open ones, which is checked against g as we go.
bool interval_realize(const Graph& g, std::vector<int>& state, int closed_count) {
    // state[v]: 0 = untouched, 1 = open, 2 = closed
    int n = g.order();
    if (closed_count == n)
        return true;
    for (int v = 0; v < n; ++v) {
        if (state[v] == 0) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u) {
                if (u == v)
                    continue;
                if (state[u] == 1 && !g.edge(u, v))
                    ok = false; // would overlap a non-neighbor
                if (state[u] == 2 && g.edge(u, v))
                    ok = false; // neighbor already closed, can never meet
            }
            if (!ok)
                continue;
            state[v] = 1;
            if (interval_realize(g, state, closed_count))
                return true;
            state[v] = 0;
        } else if (state[v] == 1) {
            // Close v only if all its neighbors were already opened.
            bool ok = true;
            for (int u : g.neighbors(v))
                if (state[u] == 0)
                    ok = false;
            if (!ok)
                continue;
            state[v] = 2;
            if (interval_realize(g, state, closed_count + 1))
                return true;
            state[v] = 1;
        }
    }
    return false;
}

} // namespace

bool is_interval_graph(const Graph& g, int max_n) {
    if (g.directed())
        return false;
    if (g.has_self_loops())
        return false;
    if (g.order() > max_n)
        throw std::invalid_argument("interval oracle: vertex count exceeds bound");
    std::vector<int> state(g.order(), 0);
    return interval_realize(g, state, 0);
}

GraphClassOracle forest_oracle() {
    return {"forest", [](const Graph& g) { return !g.directed() && is_forest(g); }, true};
}

GraphClassOracle interval_oracle(int max_n) {
    return {"interval",
            [max_n](const Graph& g) { return is_interval_graph(g, max_n); },
            true};
}

GraphClassOracle complete_oracle() {
    return {"complete",
            [](const Graph& g) {
                for (int u = 0; u < g.order(); ++u)
                    for (int v = 0; v < g.order(); ++v)
                        if (u != v && !g.edge(u, v))
                            return false;
                return true;
            },
            true};
}

GraphClassOracle edgeless_oracle() {
    return {"edgeless",
            [](const Graph& g) {
                for (int u = 0; u < g.order(); ++u)
                    for (int v = 0; v < g.order(); ++v)
                        if (u != v && g.edge(u, v))
                            return false;
                return true;
            },
            true};
}

} // namespace labelab
