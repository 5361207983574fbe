#include "doctest.h"

#include <stdexcept>

#include "labelab/enumerate.hpp"
#include "labelab/graph.hpp"

using namespace labelab;

TEST_CASE("symmetry is maintained for undirected graphs") {
    Graph g(3, false);
    g.set_edge(0, 1, true);
    CHECK(g.edge(1, 0));
    g.set_edge(1, 0, false);
    CHECK_FALSE(g.edge(0, 1));
}

TEST_CASE("self loops are tracked explicitly") {
    Graph g(2, false);
    CHECK_FALSE(g.has_self_loops());
    g.set_edge(0, 0, true);
    CHECK(g.has_self_loops());
    CHECK(g.edge(0, 0));
    CHECK_FALSE(g.edge(1, 1));
}

TEST_CASE("equiv_mod_selfloops ignores exactly the diagonal") {
    Graph k2 = Graph::complete(2);
    Graph k2loops = k2;
    k2loops.set_edge(0, 0, true);
    k2loops.set_edge(1, 1, true);
    CHECK(equiv_mod_selfloops(k2, k2loops));
    CHECK_FALSE(equiv_mod_selfloops(k2, Graph::edgeless(2)));
    Graph g3(3, false);
    CHECK_THROWS_AS(equiv_mod_selfloops(k2, g3), std::invalid_argument);
}

TEST_CASE("induced subgraphs restrict and reindex") {
    Graph c4 = Graph::cycle(4);
    std::vector<int> all{0, 1, 2, 3};
    CHECK(induced_subgraph(c4, all) == c4);
    Graph p3 = induced_subgraph(c4, {0, 1, 2});
    CHECK(p3 == Graph::path(3));
    Graph k4 = Graph::complete(4);
    CHECK(induced_subgraph(k4, {1, 2, 3}) == Graph::complete(3));
    CHECK_THROWS_AS(induced_subgraph(c4, {0, 0}), std::invalid_argument);
}

TEST_CASE("degeneracy of basic families") {
    Graph star(5, false);
    for (int leaf = 1; leaf < 5; ++leaf)
        star.set_edge(0, leaf, true);
    CHECK(degeneracy(star).degeneracy == 1); // forests have degeneracy 1
    CHECK(degeneracy(Graph::path(6)).degeneracy == 1);
    CHECK(degeneracy(Graph::complete(5)).degeneracy == 4);
    CHECK(degeneracy(Graph::cycle(5)).degeneracy == 2);
    CHECK_THROWS_AS(degeneracy(Graph(2, true)), std::invalid_argument);
}

TEST_CASE("degeneracy elimination order breaks ties by smallest index") {
    Graph g = Graph::path(3); // degrees 1,2,1
    auto d = degeneracy(g);
    CHECK(d.elimination_order.front() == 0);
}

TEST_CASE("degeneracy is bounded by max degree exhaustively up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        GraphEnumerator en(n, false, false);
        while (auto g = en.next())
            REQUIRE(degeneracy(*g).degeneracy <= std::max(1, max_degree(*g)));
    }
}

TEST_CASE("twin classes of named graphs") {
    Graph k23(5, false); // parts {0,1}, {2,3,4}
    for (int u : {0, 1})
        for (int v : {2, 3, 4})
            k23.set_edge(u, v, true);
    CHECK(twin_classes(k23).size() == 2); // complete bipartite: twin index two
    CHECK(twin_classes(Graph::edgeless(4)).size() == 1);
    CHECK(twin_classes(Graph::path(4)).size() == 4);
}

TEST_CASE("dichotomic and linear neighborhood predicates") {
    // directed forest: edges parent -> child
    Graph forest(4, true);
    forest.set_edge(0, 1, true);
    forest.set_edge(0, 2, true);
    forest.set_edge(2, 3, true);
    CHECK(is_dichotomic(forest));

    CHECK(is_linear_neighborhood(Graph::transitive_path(4)));

    Graph c3(3, true);
    c3.set_edge(0, 1, true);
    c3.set_edge(1, 2, true);
    c3.set_edge(2, 0, true);
    CHECK(is_dichotomic(c3)); // singleton neighborhoods, pairwise disjoint

    Graph bad(3, true); // out-neighborhoods {2} and {1,2}: neither equal nor disjoint
    bad.set_edge(0, 2, true);
    bad.set_edge(1, 2, true);
    bad.set_edge(1, 1, false);
    bad.set_edge(1, 0, true);
    CHECK_FALSE(is_dichotomic(bad));
}

TEST_CASE("dichotomic graphs are hereditary, exhaustively up to n = 4") {
    for (int n = 2; n <= 4; ++n) {
        GraphEnumerator en(n, true, false);
        while (auto g = en.next()) {
            if (!is_dichotomic(*g))
                continue;
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> vs;
                for (int v = 0; v < n; ++v)
                    if (mask & (1u << v))
                        vs.push_back(v);
                REQUIRE(is_dichotomic(induced_subgraph(*g, vs)));
            }
        }
    }
}

TEST_CASE("connectivity and forest checks") {
    CHECK(is_connected(Graph::path(4)));
    Graph two(4, false);
    two.set_edge(0, 1, true);
    two.set_edge(2, 3, true);
    CHECK_FALSE(is_connected(two));
    CHECK(is_forest(two));
    CHECK_FALSE(is_forest(Graph::cycle(3)));
}
