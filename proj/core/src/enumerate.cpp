#include "labelab/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace labelab {

GraphEnumerator::GraphEnumerator(int n, bool directed, bool loops)
    : n_(n), directed_(directed) {
    if (n < 1)
        throw std::invalid_argument("enumeration needs n >= 1");
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v && !loops)
                continue;
            if (!directed && v < u)
                continue;
            positions_.emplace_back(u, v);
        }
    if (positions_.size() >= 63)
        throw std::invalid_argument("enumeration space exceeds 2^62 graphs");
    total_ = std::uint64_t{1} << positions_.size();
}

std::optional<Graph> GraphEnumerator::next() {
    if (counter_ >= total_)
        return std::nullopt;
    Graph g(n_, directed_);
    // Earlier row-major positions are more significant, so incrementing the
    // counter walks the full bit strings in lexicographic order.
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        bool bit = (counter_ >> (positions_.size() - 1 - i)) & 1;
        if (bit)
            g.set_edge(positions_[i].first, positions_[i].second, true);
    }
    ++counter_;
    return g;
}

std::vector<Graph> all_graphs(int n, bool directed, bool loops) {
    GraphEnumerator en(n, directed, loops);
    std::vector<Graph> out;
    out.reserve(en.total());
    while (auto g = en.next())
        out.push_back(std::move(*g));
    return out;
}

Graph canonical_min(const Graph& g, int max_n) {
    if (g.order() > max_n)
        throw std::invalid_argument("canonical_min: vertex count exceeds configured bound");
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    Graph best = g;
    do {
        Graph h = relabel(g, perm);
        if (h.bits_less(best))
            best = h;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> canonical_graphs(int n, bool directed, bool loops) {
    GraphEnumerator en(n, directed, loops);
    std::vector<Graph> out;
    while (auto g = en.next()) {
        if (*g == canonical_min(*g))
            out.push_back(std::move(*g));
    }
    return out;
}

} // namespace labelab
