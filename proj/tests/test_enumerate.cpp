#include "doctest.h"

#include <stdexcept>

#include <algorithm>
#include <set>

#include "labelab/enumerate.hpp"

using namespace labelab;

TEST_CASE("enumeration counts") {
    CHECK(GraphEnumerator(1, false, false).total() == 1);
    CHECK(GraphEnumerator(3, true, false).total() == 64);
    CHECK(GraphEnumerator(4, false, false).total() == 64);
    CHECK(GraphEnumerator(2, false, true).total() == 8);
}

TEST_CASE("enumeration is lexicographic on the row-major bit string") {
    GraphEnumerator en(3, false, false);
    std::vector<Graph> graphs;
    while (auto g = en.next())
        graphs.push_back(*g);
    for (std::size_t i = 0; i + 1 < graphs.size(); ++i)
        REQUIRE(graphs[i].bits_less(graphs[i + 1]));
    CHECK(graphs.front() == Graph::edgeless(3));
}

TEST_CASE("canonical_min fixes the lexicographically least relabeling") {
    CHECK(canonical_min(Graph::edgeless(4)) == Graph::edgeless(4));
    // any relabeling of P3 canonicalizes identically
    Graph p3 = Graph::path(3);
    std::vector<int> perm{0, 1, 2};
    Graph want = canonical_min(p3);
    do {
        REQUIRE(canonical_min(relabel(p3, perm)) == want);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("canonical_min is constant on isomorphism classes up to n = 5") {
    for (int n = 2; n <= 4; ++n) {
        GraphEnumerator en(n, false, false);
        while (auto g = en.next()) {
            Graph canon = canonical_min(*g);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i)
                perm[i] = i;
            do {
                REQUIRE(canonical_min(relabel(*g, perm)) == canon);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    // a sample at n = 5
    Graph c5 = Graph::cycle(5);
    Graph canon = canonical_min(c5);
    std::vector<int> perm{4, 2, 0, 3, 1};
    CHECK(canonical_min(relabel(c5, perm)) == canon);
}

TEST_CASE("canonical_min refuses oversized graphs") {
    CHECK_THROWS_AS(canonical_min(Graph::edgeless(9)), std::invalid_argument);
}

TEST_CASE("11 isomorphism classes of undirected graphs on 4 vertices") {
    CHECK(canonical_graphs(4, false, false).size() == 11);
}
