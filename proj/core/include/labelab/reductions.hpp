#ifndef LABELAB_REDUCTIONS_HPP
#define LABELAB_REDUCTIONS_HPP

#include <optional>
#include <vector>

#include "labelab/boolean_table.hpp"
#include "labelab/graph.hpp"
#include "labelab/oracles.hpp"
#include "labelab/schemes.hpp"
#include "labelab/search.hpp"

namespace labelab {

/// Host graph H, a k^2-ary boolean function and a vertex-to-tuple map:
/// (u,v) is an edge iff f applied to the k x k host-adjacency matrix of the
/// image tuples is 1, for u != v.
struct SubgraphRepresentation {
    Graph host;
    BooleanFunctionTable f; // arity k^2
    int k = 1;
    std::vector<std::vector<int>> map; // vertex of g -> k host vertices
};

/// Algebraic reduction check: g agrees with f(witnesses) on all pairs u != v
/// (self-loops are ignored).
bool verify_algebraic(const Graph& g, const BooleanFunctionTable& f,
                      const std::vector<Graph>& witnesses);

struct AlgebraicSearchResult {
    SearchStatus status = SearchStatus::unknown;
    std::vector<Graph> witnesses;
    std::uint64_t nodes = 0;
};

/// Backtracking over the k-bit edge-vector choice per vertex pair, the
/// oracle checked on completed witnesses; hereditary oracles prune on the
/// induced prefix as soon as a vertex's pairs are complete.
AlgebraicSearchResult search_algebraic(const Graph& g, const BooleanFunctionTable& f,
                                       const GraphClassOracle& oracle,
                                       const SearchBudget& budget = {});

bool verify_subgraph(const Graph& g, const SubgraphRepresentation& rep);

struct SubgraphSearchResult {
    SearchStatus status = SearchStatus::unknown;
    std::vector<std::vector<int>> map;
    std::uint64_t nodes = 0;
};

SubgraphSearchResult search_subgraph(const Graph& g, const Graph& host, int k,
                                     const BooleanFunctionTable& f,
                                     const SearchBudget& budget = {});

/// Block-matrix composition: (f o g)(B) = f(g(B_11), ..., g(B_kk)).
BooleanFunctionTable compose_boolean(const BooleanFunctionTable& f,
                                     const BooleanFunctionTable& g);

/// Composite representation witnessing transitivity: g represented in H via
/// rep1, H represented in I via rep2 gives g represented in I.
SubgraphRepresentation compose_representations(const SubgraphRepresentation& rep1,
                                               const SubgraphRepresentation& rep2);

/// Algebraic witnesses turned into a diagonal representation over the
/// disjoint union of the witnesses (a self-universal host construction).
SubgraphRepresentation algebraic_to_subgraph(const Graph& g,
                                             const BooleanFunctionTable& f,
                                             const std::vector<Graph>& witnesses);

// --------------------------- named constructive reductions -----------------

/// Dichotomic digraphs into undirected paths: c = 3, k = 4,
/// f(A) = a14 && a23, tuple (2u1, 2u1+1, 2u2, 2u2+1).
SubgraphRepresentation dichotomic_to_paths(const Graph& g);

/// Linear neighborhood digraphs into transitive path closures: c = 2, k = 2,
/// f(A) = a12.
SubgraphRepresentation lng_to_tcpaths(const Graph& g);

/// Transitive path closures into interval graphs: c = 2, k = 2,
/// f(A) = a21 && !a12, intervals [0,u] and [u,u].
SubgraphRepresentation tcpaths_to_interval(int n);

/// Axis-aligned boxes as the conjunction of the two projection interval
/// graphs; returns (x-projection, y-projection) on the box vertex set.
std::pair<Graph, Graph> rectangles_to_interval_pair(
    const std::vector<std::array<long long, 4>>& boxes); // x1,x2,y1,y2

/// k-interval models into the flattened interval host with f = OR over all
/// k^2 entries.
SubgraphRepresentation kinterval_to_interval(
    const std::vector<std::vector<std::pair<long long, long long>>>& model);

} // namespace labelab

#endif
