#ifndef LABELAB_GRAPH_HPP
#define LABELAB_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace labelab {

/// Directed adjacency relation on n >= 1 vertices with explicit self-loop
/// tracking. Undirected graphs are stored as symmetric instances; writes
/// through set_edge keep the matrix symmetric for them.
class Graph {
public:
    Graph(int n, bool directed);

    int order() const { return n_; }
    bool directed() const { return directed_; }

    bool edge(int u, int v) const { return adj_[index(u, v)]; }
    void set_edge(int u, int v, bool present);

    bool has_self_loops() const;
    int edge_count() const; // undirected pairs counted once, loops once

    std::vector<int> out_neighbors(int u) const;
    std::vector<int> in_neighbors(int u) const;
    std::vector<int> neighbors(int u) const; // undirected view, excludes u itself
    int degree(int u) const;                 // undirected, loop at u ignored

    /// Row-major adjacency bits, positions (0,0),(0,1),...,(n-1,n-1).
    const std::vector<bool>& bits() const { return adj_; }
    /// Packed row-major bits for n <= 8, most significant bit = (0,0).
    std::uint64_t packed_bits() const;

    bool operator==(const Graph& other) const;
    /// Lexicographic order of the row-major adjacency bit string.
    bool bits_less(const Graph& other) const;

    static Graph complete(int n, bool directed = false);
    static Graph edgeless(int n, bool directed = false);
    static Graph path(int n);
    static Graph cycle(int n);
    /// Transitive closure of the directed path: (u,v) in E iff u < v.
    static Graph transitive_path(int n);

private:
    int index(int u, int v) const;

    int n_;
    bool directed_;
    std::vector<bool> adj_;
};

Graph relabel(const Graph& g, const std::vector<int>& perm); // image edge (perm[u],perm[v])

bool is_connected(const Graph& g); // undirected sense
bool is_forest(const Graph& g);    // undirected, loop-free

/// True iff edge sets agree on all ordered pairs u != v.
bool equiv_mod_selfloops(const Graph& g, const Graph& h);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

/// Least k such that every induced subgraph has a vertex of degree <= k,
/// together with the min-degree elimination order (ties: smallest index).
struct DegeneracyResult {
    int degeneracy;
    std::vector<int> elimination_order;
};
DegeneracyResult degeneracy(const Graph& g);

int max_degree(const Graph& g);

/// Partition of vertices into twin classes (N(u) \ {v} = N(v) \ {u}),
/// classes ordered by smallest member, members ascending.
std::vector<std::vector<int>> twin_classes(const Graph& g);

/// All same-direction neighborhoods pairwise equal or disjoint.
bool is_dichotomic(const Graph& g);
/// All same-direction neighborhoods pairwise nested.
bool is_linear_neighborhood(const Graph& g);

} // namespace labelab

#endif
