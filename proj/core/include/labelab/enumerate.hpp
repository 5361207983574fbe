#ifndef LABELAB_ENUMERATE_HPP
#define LABELAB_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "labelab/graph.hpp"

namespace labelab {

/// Stream of all labeled graphs on n vertices in lexicographic order of the
/// row-major adjacency bit string. Deterministic; single-consumer.
class GraphEnumerator {
public:
    GraphEnumerator(int n, bool directed, bool loops);

    std::optional<Graph> next();
    std::uint64_t total() const { return total_; }

private:
    int n_;
    bool directed_;
    std::vector<std::pair<int, int>> positions_; // row-major free positions
    std::uint64_t counter_ = 0;
    std::uint64_t total_;
};

std::vector<Graph> all_graphs(int n, bool directed, bool loops);

/// The lexicographically least labeled graph isomorphic to g, by permutation
/// enumeration. Guarded by a vertex-count bound (default 8).
Graph canonical_min(const Graph& g, int max_n = 8);

/// One canonical representative per isomorphism class, in lexicographic
/// bit-string order of the canonical forms (the graph order used by the
/// diagonalization class).
std::vector<Graph> canonical_graphs(int n, bool directed, bool loops);

} // namespace labelab

#endif
