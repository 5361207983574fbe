#include "doctest.h"

#include <array>
#include <stdexcept>

#include "labelab/enumerate.hpp"
#include "labelab/reductions.hpp"

using namespace labelab;

namespace {

// the four boxes whose intersection graph is the 4-cycle 1-2-3-4-1
std::vector<std::array<long long, 4>> four_boxes() {
    return {{0, 2, 1, 7}, {1, 7, 6, 8}, {6, 8, 1, 7}, {1, 7, 0, 2}};
}

} // namespace

TEST_CASE("rectangles as the conjunction of two interval graphs") {
    auto [hx, hy] = rectangles_to_interval_pair(four_boxes());
    Graph c4(4, false);
    c4.set_edge(0, 1, true);
    c4.set_edge(1, 2, true);
    c4.set_edge(2, 3, true);
    c4.set_edge(3, 0, true);
    CHECK(verify_algebraic(c4, BooleanFunctionTable::conjunction(), {hx, hy}));
    Graph and_graph = apply_boolean(BooleanFunctionTable::conjunction(), {hx, hy});
    CHECK(equiv_mod_selfloops(and_graph, c4));
}

TEST_CASE("verify_algebraic basics") {
    Graph k3 = Graph::complete(3);
    CHECK(verify_algebraic(k3, BooleanFunctionTable::identity(), {k3}));
    CHECK_FALSE(verify_algebraic(k3, BooleanFunctionTable::conjunction(),
                                 {k3, Graph::edgeless(3)}));
}

TEST_CASE("verify_algebraic ignores self-loop flips") {
    Graph c4 = Graph::cycle(4);
    auto [hx, hy] = rectangles_to_interval_pair(four_boxes());
    Graph c4cycle(4, false);
    c4cycle.set_edge(0, 1, true);
    c4cycle.set_edge(1, 2, true);
    c4cycle.set_edge(2, 3, true);
    c4cycle.set_edge(3, 0, true);
    c4cycle.set_edge(2, 2, true); // flip a loop
    CHECK(verify_algebraic(c4cycle, BooleanFunctionTable::conjunction(), {hx, hy}));
}

TEST_CASE("search_algebraic finds the boxicity-2 witnesses for C4") {
    Graph c4(4, false);
    c4.set_edge(0, 1, true);
    c4.set_edge(1, 2, true);
    c4.set_edge(2, 3, true);
    c4.set_edge(3, 0, true);
    auto result = search_algebraic(c4, BooleanFunctionTable::conjunction(),
                                   interval_oracle());
    REQUIRE(result.status == SearchStatus::found);
    CHECK(verify_algebraic(c4, BooleanFunctionTable::conjunction(), result.witnesses));
    for (const Graph& w : result.witnesses)
        CHECK(is_interval_graph(w));
}

TEST_CASE("search_algebraic: K3 is no forest") {
    auto result = search_algebraic(Graph::complete(3), BooleanFunctionTable::identity(),
                                   forest_oracle());
    CHECK(result.status == SearchStatus::none);
}

TEST_CASE("every forest up to five vertices is an AND of two interval graphs") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : canonical_graphs(n, false, false)) {
            if (!is_forest(g))
                continue;
            auto result = search_algebraic(g, BooleanFunctionTable::conjunction(),
                                           interval_oracle());
            REQUIRE(result.status == SearchStatus::found);
            REQUIRE(verify_algebraic(g, BooleanFunctionTable::conjunction(),
                                     result.witnesses));
        }
}

TEST_CASE("identity subgraph representation") {
    Graph g = Graph::cycle(5);
    SubgraphRepresentation rep{g, BooleanFunctionTable::identity(), 1, {}};
    for (int v = 0; v < 5; ++v)
        rep.map.push_back({v});
    CHECK(verify_subgraph(g, rep));
}

TEST_CASE("two-interval vertices flatten into an interval host under OR") {
    // two-interval model: vertex 0 = [0,1] u [6,7], vertex 1 = [2,3] u [6,7],
    // vertex 2 = [0,1] u [4,5]
    std::vector<std::vector<std::pair<long long, long long>>> model{
        {{0, 1}, {6, 7}}, {{2, 3}, {6, 7}}, {{0, 1}, {4, 5}}};
    SubgraphRepresentation rep = kinterval_to_interval(model);
    Graph g(3, false);
    g.set_edge(0, 1, true); // share [6,7]
    g.set_edge(0, 2, true); // share [0,1]
    CHECK(verify_subgraph(g, rep));
    // corrupt the map: swap two images
    std::swap(rep.map[0], rep.map[1]);
    CHECK_FALSE(verify_subgraph(g, rep));
}

TEST_CASE("search_subgraph recovers the identity and the D3 interval embedding") {
    Graph g = Graph::path(3);
    auto id = search_subgraph(g, g, 1, BooleanFunctionTable::identity());
    REQUIRE(id.status == SearchStatus::found);
    SubgraphRepresentation idrep{g, BooleanFunctionTable::identity(), 1, id.map};
    CHECK(verify_subgraph(g, idrep));
    // the identity map is one valid witness
    SubgraphRepresentation plain{g, BooleanFunctionTable::identity(), 1,
                                 {{0}, {1}, {2}}};
    CHECK(verify_subgraph(g, plain));

    SubgraphRepresentation constructed = tcpaths_to_interval(3);
    Graph d3 = Graph::transitive_path(3);
    REQUIRE(verify_subgraph(d3, constructed));
    auto found = search_subgraph(d3, constructed.host, 2, constructed.f);
    REQUIRE(found.status == SearchStatus::found);
    SubgraphRepresentation rep{constructed.host, constructed.f, 2, found.map};
    CHECK(verify_subgraph(d3, rep));
}

TEST_CASE("compose_boolean: identities and diagonality closure") {
    auto id = BooleanFunctionTable::identity(); // 1-ary, k = l = 1
    auto composed = compose_boolean(id, id);
    CHECK(composed.arity() == 1);
    CHECK(composed.table() == id.table());
    // diagonal composed with diagonal stays diagonal, over all 4-ary
    // diagonal tables
    std::vector<BooleanFunctionTable> diagonals;
    for (int bits = 0; bits < 16; ++bits) {
        auto f = BooleanFunctionTable::from_function(
            4, [bits](const std::vector<bool>& a) {
                int idx = (a[0] ? 2 : 0) | (a[3] ? 1 : 0);
                return (bits >> idx) & 1;
            });
        REQUIRE(f.diagonal());
        diagonals.push_back(f);
    }
    for (const auto& f : diagonals)
        for (const auto& g : diagonals)
            REQUIRE(compose_boolean(f, g).diagonal());
}

TEST_CASE("transitivity: composed representations verify") {
    // g (paths of length 2) into host H = P4 via identity-ish map, H into
    // I = its own square... keep it concrete: g -> H via k=1 identity, and
    // H -> I via the constructive D_n embedding shapes is overkill; instead
    // compose two hand-built representations on 3-vertex graphs.
    Graph g = Graph::path(3);
    Graph h = Graph::cycle(4);
    // g has an (h, f1)-representation: map path vertices onto the cycle
    SubgraphRepresentation rep1{h, BooleanFunctionTable::identity(), 1,
                                {{0}, {1}, {2}}};
    REQUIRE(verify_subgraph(g, rep1));
    Graph i(5, false);
    i.set_edge(0, 1, true);
    i.set_edge(1, 2, true);
    i.set_edge(2, 3, true);
    i.set_edge(3, 4, true);
    i.set_edge(4, 0, true);
    // h (C4) has an (i, f2)-representation inside C5: u -> (u, u+1 mod 5)
    // with adjacency iff tuples interleave... search for one instead
    auto f2 = BooleanFunctionTable::from_function(
        4, [](const std::vector<bool>& a) { return a[0] || a[1] || a[2]; });
    auto found = search_subgraph(h, i, 2, f2);
    if (found.status == SearchStatus::found) {
        SubgraphRepresentation rep2{i, f2, 2, found.map};
        REQUIRE(verify_subgraph(h, rep2));
        SubgraphRepresentation composed = compose_representations(rep1, rep2);
        CHECK(verify_subgraph(g, composed));
    }
}

TEST_CASE("algebraic witnesses convert to diagonal representations") {
    for (int n = 2; n <= 4; ++n) {
        auto [hx, hy] = n == 4
                            ? rectangles_to_interval_pair(four_boxes())
                            : std::pair<Graph, Graph>{Graph::path(n), Graph::cycle(n)};
        Graph g = apply_boolean(BooleanFunctionTable::conjunction(), {hx, hy});
        SubgraphRepresentation rep =
            algebraic_to_subgraph(g, BooleanFunctionTable::conjunction(), {hx, hy});
        CHECK(rep.f.diagonal());
        CHECK(verify_subgraph(g, rep));
    }
}

TEST_CASE("constructive reduction: dichotomic digraphs into paths") {
    for (int n = 1; n <= 4; ++n) {
        GraphEnumerator en(n, true, false);
        while (auto g = en.next()) {
            if (!is_dichotomic(*g))
                continue;
            SubgraphRepresentation rep = dichotomic_to_paths(*g);
            REQUIRE(rep.host.order() == n * n * n);
            REQUIRE(verify_subgraph(*g, rep));
        }
    }
}

TEST_CASE("constructive reduction: linear neighborhood digraphs into D_{n^2}") {
    Graph d4 = Graph::transitive_path(4);
    SubgraphRepresentation rep = lng_to_tcpaths(d4);
    CHECK(rep.host.order() == 16);
    CHECK(verify_subgraph(d4, rep));
    for (int n = 1; n <= 4; ++n) {
        GraphEnumerator en(n, true, false);
        while (auto g = en.next()) {
            if (!is_linear_neighborhood(*g))
                continue;
            REQUIRE(verify_subgraph(*g, lng_to_tcpaths(*g)));
        }
    }
}

TEST_CASE("constructive reduction: D_n into interval graphs up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        SubgraphRepresentation rep = tcpaths_to_interval(n);
        REQUIRE(verify_subgraph(Graph::transitive_path(n), rep));
    }
}

TEST_CASE("reductions ignore self-loop flips in subgraph verification") {
    Graph d3 = Graph::transitive_path(3);
    SubgraphRepresentation rep = tcpaths_to_interval(3);
    Graph with_loop = d3;
    with_loop.set_edge(1, 1, true);
    CHECK(verify_subgraph(with_loop, rep)); // u != v quantification only
}

TEST_CASE("search_subgraph finds the path-host embedding of a dichotomic arc") {
    Graph arc(2, true);
    arc.set_edge(0, 1, true);
    SubgraphRepresentation constructed = dichotomic_to_paths(arc);
    REQUIRE(verify_subgraph(arc, constructed));
    auto f = constructed.f;
    auto found = search_subgraph(arc, constructed.host, 4, f);
    REQUIRE(found.status == SearchStatus::found);
    SubgraphRepresentation rep{constructed.host, f, 4, found.map};
    CHECK(verify_subgraph(arc, rep));
}
