#include "labelab/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace labelab {

Graph::Graph(int n, bool directed) : n_(n), directed_(directed) {
    if (n < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    adj_.assign(static_cast<std::size_t>(n) * n, false);
}

int Graph::index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex index out of range");
    return u * n_ + v;
}

void Graph::set_edge(int u, int v, bool present) {
    adj_[index(u, v)] = present;
    if (!directed_)
        adj_[index(v, u)] = present;
}

bool Graph::has_self_loops() const {
    for (int u = 0; u < n_; ++u)
        if (adj_[index(u, u)])
            return true;
    return false;
}

int Graph::edge_count() const {
    int count = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = directed_ ? 0 : u; v < n_; ++v)
            if (adj_[index(u, v)])
                ++count;
    return count;
}

std::vector<int> Graph::out_neighbors(int u) const {
    std::vector<int> result;
    for (int v = 0; v < n_; ++v)
        if (adj_[index(u, v)])
            result.push_back(v);
    return result;
}

std::vector<int> Graph::in_neighbors(int u) const {
    std::vector<int> result;
    for (int v = 0; v < n_; ++v)
        if (adj_[index(v, u)])
            result.push_back(v);
    return result;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> result;
    for (int v = 0; v < n_; ++v)
        if (v != u && (adj_[index(u, v)] || adj_[index(v, u)]))
            result.push_back(v);
    return result;
}

int Graph::degree(int u) const {
    return static_cast<int>(neighbors(u).size());
}

std::uint64_t Graph::packed_bits() const {
    if (n_ > 8)
        throw std::invalid_argument("packed_bits requires n <= 8");
    std::uint64_t key = 0;
    for (bool b : adj_)
        key = (key << 1) | (b ? 1u : 0u);
    return key;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && directed_ == other.directed_ && adj_ == other.adj_;
}

bool Graph::bits_less(const Graph& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("bits_less requires equal vertex counts");
    return adj_ < other.adj_;
}

Graph Graph::complete(int n, bool directed) {
    Graph g(n, directed);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                g.set_edge(u, v, true);
    return g;
}

Graph Graph::edgeless(int n, bool directed) {
    return Graph(n, directed);
}

Graph Graph::path(int n) {
    Graph g(n, false);
    for (int u = 0; u + 1 < n; ++u)
        g.set_edge(u, u + 1, true);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n > 2)
        g.set_edge(n - 1, 0, true);
    return g;
}

Graph Graph::transitive_path(int n) {
    Graph g(n, true);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.set_edge(u, v, true);
    return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation size mismatch");
    Graph h(g.order(), g.directed());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.edge(u, v))
                h.set_edge(perm[u], perm[v], true);
    return h;
}

bool is_connected(const Graph& g) {
    std::vector<bool> seen(g.order(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_forest(const Graph& g) {
    if (g.has_self_loops())
        return false;
    std::vector<int> parent(g.order(), -1);
    std::vector<bool> seen(g.order(), false);
    for (int root = 0; root < g.order(); ++root) {
        if (seen[root])
            continue;
        std::vector<int> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    parent[v] = u;
                    stack.push_back(v);
                } else if (v != parent[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool equiv_mod_selfloops(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.directed() != h.directed())
        throw std::invalid_argument("graph size or directedness mismatch");
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (u != v && g.edge(u, v) != h.edge(u, v))
                return false;
    return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::set<int> distinct(vs.begin(), vs.end());
    if (distinct.size() != vs.size())
        throw std::invalid_argument("induced_subgraph: repeated vertex");
    for (int v : vs)
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    Graph h(static_cast<int>(vs.size()), g.directed());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (g.edge(vs[i], vs[j]))
                h.set_edge(static_cast<int>(i), static_cast<int>(j), true);
    return h;
}

DegeneracyResult degeneracy(const Graph& g) {
    if (g.directed())
        throw std::invalid_argument("degeneracy requires an undirected graph");
    if (g.has_self_loops())
        throw std::invalid_argument("degeneracy requires a loop-free graph");
    int n = g.order();
    std::vector<bool> removed(n, false);
    std::vector<int> deg(n);
    for (int u = 0; u < n; ++u)
        deg[u] = g.degree(u);
    // least k in N = {1,2,...}, so never below one (edgeless graphs included)
    DegeneracyResult result{1, {}};
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int u = 0; u < n; ++u)
            if (!removed[u] && (best == -1 || deg[u] < deg[best]))
                best = u;
        result.degeneracy = std::max(result.degeneracy, deg[best]);
        result.elimination_order.push_back(best);
        removed[best] = true;
        for (int v : g.neighbors(best))
            if (!removed[v])
                --deg[v];
    }
    return result;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.order(); ++u)
        best = std::max(best, g.degree(u));
    return best;
}

std::vector<std::vector<int>> twin_classes(const Graph& g) {
    if (g.directed())
        throw std::invalid_argument("twin_classes requires an undirected graph");
    int n = g.order();
    std::vector<int> cls(n, -1);
    auto twins = [&](int u, int v) {
        for (int w = 0; w < n; ++w)
            if (w != u && w != v && g.edge(u, w) != g.edge(v, w))
                return false;
        return true;
    };
    std::vector<std::vector<int>> classes;
    for (int u = 0; u < n; ++u) {
        if (cls[u] != -1)
            continue;
        cls[u] = static_cast<int>(classes.size());
        classes.push_back({u});
        for (int v = u + 1; v < n; ++v)
            if (cls[v] == -1 && twins(u, v)) {
                cls[v] = cls[u];
                classes.back().push_back(v);
            }
    }
    return classes;
}

namespace {

std::vector<std::set<int>> direction_neighborhoods(const Graph& g, bool out) {
    std::vector<std::set<int>> result(g.order());
    for (int u = 0; u < g.order(); ++u) {
        auto ns = out ? g.out_neighbors(u) : g.in_neighbors(u);
        result[u] = std::set<int>(ns.begin(), ns.end());
    }
    return result;
}

} // namespace

bool is_dichotomic(const Graph& g) {
    for (bool out : {true, false}) {
        auto nbhd = direction_neighborhoods(g, out);
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                if (nbhd[u] == nbhd[v])
                    continue;
                std::vector<int> common;
                std::set_intersection(nbhd[u].begin(), nbhd[u].end(),
                                      nbhd[v].begin(), nbhd[v].end(),
                                      std::back_inserter(common));
                if (!common.empty())
                    return false;
            }
    }
    return true;
}

bool is_linear_neighborhood(const Graph& g) {
    for (bool out : {true, false}) {
        auto nbhd = direction_neighborhoods(g, out);
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                bool uv = std::includes(nbhd[v].begin(), nbhd[v].end(),
                                        nbhd[u].begin(), nbhd[u].end());
                bool vu = std::includes(nbhd[u].begin(), nbhd[u].end(),
                                        nbhd[v].begin(), nbhd[v].end());
                if (!uv && !vu)
                    return false;
            }
    }
    return true;
}

} // namespace labelab
