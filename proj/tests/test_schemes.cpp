#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "labelab/enumerate.hpp"
#include "labelab/logic.hpp"
#include "labelab/schemes.hpp"

using namespace labelab;

TEST_CASE("figure-one interval encoding") {
    IntervalModel model;
    model.intervals = {{1, 3}, {4, 5}, {6, 8}, {9, 10}, {2, 7}};
    IntervalEncoding enc = interval_encode(model);
    std::vector<std::pair<long long, long long>> want{
        {1, 3}, {4, 5}, {6, 8}, {9, 10}, {2, 7}};
    CHECK(enc.rank_labels == want);
    // drawn graph: center {4} adjacent to 0, 1, 2; vertex 3 isolated
    Graph star(5, false);
    star.set_edge(0, 4, true);
    star.set_edge(1, 4, true);
    star.set_edge(2, 4, true);
    CHECK(enc.decoded == star);
    LabelingScheme scheme{interval_decoder(), 4};
    CHECK(verify_labeling(scheme, enc.labels, enc.decoded, PairSemantics::proper_only));
}

TEST_CASE("single point interval gets equal ranks") {
    IntervalModel model;
    model.intervals = {{5, 5}};
    IntervalEncoding enc = interval_encode(model);
    CHECK(enc.rank_labels == std::vector<std::pair<long long, long long>>{{1, 1}});
    CHECK(enc.decoded.order() == 1);
    CHECK(enc.labels[0].size() == 0);
}

TEST_CASE("interval ranks stay faithful under endpoint ties") {
    IntervalModel model;
    model.intervals = {{5, 5}, {5, 9}, {3, 5}, {5, 5}, {6, 6}};
    IntervalEncoding enc = interval_encode(model);
    LabelingScheme scheme{interval_decoder(), 4};
    CHECK(verify_labeling(scheme, enc.labels, enc.decoded, PairSemantics::proper_only));
    // coincident point intervals share their rank
    CHECK(enc.rank_labels[0] == enc.rank_labels[3]);
}

TEST_CASE("two disjoint intervals decode to a non-edge") {
    IntervalModel model;
    model.intervals = {{1, 2}, {5, 6}};
    IntervalEncoding enc = interval_encode(model);
    CHECK(enc.decoded == Graph::edgeless(2));
}

TEST_CASE("random interval models round-trip") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        IntervalModel model;
        for (int v = 0; v < n; ++v) {
            long long lo = rng() % 12;
            long long hi = lo + rng() % 5;
            model.intervals.push_back({lo, hi});
        }
        IntervalEncoding enc = interval_encode(model);
        LabelingScheme scheme{interval_decoder(), 4};
        REQUIRE(verify_labeling(scheme, enc.labels, enc.decoded,
                                PairSemantics::proper_only));
    }
}

TEST_CASE("or-pointer encoding of forests with one slot") {
    Graph tree(5, false);
    tree.set_edge(0, 1, true);
    tree.set_edge(0, 2, true);
    tree.set_edge(2, 3, true);
    tree.set_edge(2, 4, true);
    PointerLabeling pl = or_pointer_encode(tree, 1);
    CHECK(pl.bijective);
    CHECK(pointer_verify(pl, tree));
}

TEST_CASE("or-pointer encoding of C5 with two slots") {
    Graph c5 = Graph::cycle(5);
    PointerLabeling pl = or_pointer_encode(c5, 2);
    CHECK(pointer_verify(pl, c5));
    CHECK_THROWS_AS(or_pointer_encode(c5, 1), std::invalid_argument);
}

TEST_CASE("or-pointer edge bound |E| <= c n") {
    for (int n = 2; n <= 6; ++n) {
        GraphEnumerator en(n, false, false);
        while (auto g = en.next()) {
            int c = degeneracy(*g).degeneracy;
            if (c == 0)
                continue;
            PointerLabeling pl = or_pointer_encode(*g, c);
            REQUIRE(pointer_verify(pl, *g));
            REQUIRE(g->edge_count() <= c * n);
        }
    }
}

TEST_CASE("non-bijective or labeling of complete graphs with one slot") {
    // ids all 1, slots all {1}
    for (int n : {2, 4, 6}) {
        PointerLabeling pl;
        pl.mode = PointerLabeling::Mode::or_mode;
        pl.bijective = false;
        pl.k = 1;
        pl.id.assign(n, 1);
        pl.slots.assign(n, {1});
        CHECK(pointer_verify(pl, Graph::complete(n)));
    }
}

TEST_CASE("and-pointer forest encoding reproduces the worked tree") {
    // root 0 with children 1 (leaf), 2 (two leaf children 4, 5),
    // 3 (one leaf child 6)
    Graph tree(7, false);
    tree.set_edge(0, 1, true);
    tree.set_edge(0, 2, true);
    tree.set_edge(0, 3, true);
    tree.set_edge(2, 4, true);
    tree.set_edge(2, 5, true);
    tree.set_edge(3, 6, true);
    PointerLabeling pl = and_pointer_forest_encode(tree);
    CHECK(pl.k == 2);
    CHECK_FALSE(pl.bijective);
    CHECK(pointer_verify(pl, tree));
    // root is id 1 with children-id 2; both grandchildren of node 2 share ids
    CHECK(pl.id[0] == 1);
    CHECK(pl.id[4] == pl.id[5]);
    CHECK(pointer_adjacent(pl, 0, 2));
    CHECK_FALSE(pointer_adjacent(pl, 4, 5));
}

TEST_CASE("and-pointer forest encoding: single edge and two-tree forest") {
    Graph edge = Graph::path(2);
    PointerLabeling pl = and_pointer_forest_encode(edge);
    CHECK(pl.id == std::vector<int>{1, 2});
    CHECK(pointer_verify(pl, edge));

    Graph forest(4, false);
    forest.set_edge(0, 1, true);
    forest.set_edge(2, 3, true);
    PointerLabeling pl2 = and_pointer_forest_encode(forest);
    CHECK(pointer_verify(pl2, forest));
    CHECK_THROWS_AS(and_pointer_forest_encode(Graph::cycle(3)), std::invalid_argument);
}

TEST_CASE("and-pointer forest encoding round-trips on all forests up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        GraphEnumerator en(n, false, false);
        while (auto g = en.next()) {
            if (!is_forest(*g))
                continue;
            PointerLabeling pl = and_pointer_forest_encode(*g);
            REQUIRE(pointer_verify(pl, *g));
            std::set<int> ids(pl.id.begin(), pl.id.end());
            for (int v = 0; v < n; ++v)
                for (int s : pl.slots[v])
                    ids.insert(s);
            REQUIRE(static_cast<int>(ids.size()) <= n + 1);
        }
    }
}

TEST_CASE("twin encoding of K23, K3 and P4") {
    Graph k23(5, false);
    for (int u : {0, 1})
        for (int v : {2, 3, 4})
            k23.set_edge(u, v, true);
    for (auto mode : {PointerLabeling::Mode::or_mode, PointerLabeling::Mode::and_mode}) {
        PointerLabeling pl = twin_encode(k23, 2, mode);
        CHECK(pointer_verify(pl, k23));
        CHECK(pl.id[0] == 1);
        CHECK(pl.id[2] == 2);
        CHECK(pl.slots[0] == std::vector<int>{2, 2});
        CHECK(pl.slots[2] == std::vector<int>{1, 1});
    }
    PointerLabeling k3 = twin_encode(Graph::complete(3), 1, PointerLabeling::Mode::or_mode);
    CHECK(k3.slots[0] == std::vector<int>{1});
    CHECK(pointer_verify(k3, Graph::complete(3)));
    CHECK(twin_classes(Graph::path(4)).size() == 4);
    PointerLabeling p4 = twin_encode(Graph::path(4), 4, PointerLabeling::Mode::and_mode);
    CHECK(pointer_verify(p4, Graph::path(4)));
    CHECK_THROWS_AS(twin_encode(Graph::path(4), 3, PointerLabeling::Mode::or_mode),
                    std::invalid_argument);
}

TEST_CASE("twin encoding round-trips under both modes up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        GraphEnumerator en(n, false, false);
        while (auto g = en.next()) {
            int t = static_cast<int>(twin_classes(*g).size());
            for (auto mode :
                 {PointerLabeling::Mode::or_mode, PointerLabeling::Mode::and_mode}) {
                PointerLabeling pl = twin_encode(*g, t, mode);
                REQUIRE(pointer_verify(pl, *g));
            }
        }
    }
}

TEST_CASE("dichotomic encoding of the single arc") {
    Graph arc(2, true);
    arc.set_edge(0, 1, true);
    auto labels = dichotomic_encode(arc);
    CHECK(labels[0] == NumPair{1, 0});
    CHECK(labels[1] == NumPair{2, 1});
    CHECK(verify_numpair_labels(labels, arc, /*equality=*/true, 2));
}

TEST_CASE("dichotomic encoding of the edgeless digraph") {
    Graph g(3, true);
    auto labels = dichotomic_encode(g);
    CHECK(verify_numpair_labels(labels, g, true, 3));
    for (const auto& [a, b] : labels)
        CHECK(b == 0);
}

TEST_CASE("dichotomic encoding verifies exhaustively up to n = 4") {
    for (int n = 1; n <= 4; ++n) {
        GraphEnumerator en(n, true, false);
        while (auto g = en.next()) {
            if (!is_dichotomic(*g)) {
                CHECK_THROWS_AS(dichotomic_encode(*g), std::invalid_argument);
                continue;
            }
            auto labels = dichotomic_encode(*g);
            REQUIRE(verify_numpair_labels(labels, *g, true, n));
        }
    }
}

TEST_CASE("linear neighborhood encoding of the transitive path closure") {
    Graph d3 = Graph::transitive_path(3);
    auto labels = linear_neighborhood_encode(d3);
    CHECK(verify_numpair_labels(labels, d3, /*equality=*/false, 3));
}

TEST_CASE("linear neighborhood encoding verifies exhaustively up to n = 4") {
    for (int n = 1; n <= 4; ++n) {
        GraphEnumerator en(n, true, false);
        while (auto g = en.next()) {
            if (!is_linear_neighborhood(*g)) {
                CHECK_THROWS_AS(linear_neighborhood_encode(*g), std::invalid_argument);
                continue;
            }
            auto labels = linear_neighborhood_encode(*g);
            REQUIRE(verify_numpair_labels(labels, *g, false, n));
        }
    }
}

TEST_CASE("order compression preserves verdicts") {
    // identity on already-compact labels
    std::vector<NumPair> compact{{0, 1}, {1, 2}};
    CHECK(compress_order_labels(compact) == compact);
    // random inflation of a valid transitive-path labeling recompresses
    Graph d4 = Graph::transitive_path(4);
    std::vector<NumPair> inflated{{7, 3}, {20, 9}, {46, 33}, {90, 71}};
    REQUIRE(verify_numpair_labels(inflated, d4, false, 1000));
    auto compressed = compress_order_labels(inflated);
    REQUIRE(verify_numpair_labels(compressed, d4, false, 4));
    // single vertex
    CHECK(compress_order_labels({{17, 13}}) == std::vector<NumPair>{{1, 1}});
}

TEST_CASE("equality compression maps unseen right values to zero") {
    std::vector<NumPair> labels{{5, 9}, {9, 5}, {2, 11}};
    auto compressed = compress_eq_labels(labels);
    CHECK(compressed == std::vector<NumPair>{{2, 3}, {3, 2}, {1, 0}});
    // exhaustive re-verification over dichotomic digraphs, n <= 4
    for (int n = 1; n <= 4; ++n) {
        GraphEnumerator en(n, true, false);
        while (auto g = en.next()) {
            if (!is_dichotomic(*g))
                continue;
            auto raw = dichotomic_encode(*g);
            // inflate, then compress back into [n]_0
            std::vector<NumPair> inflated;
            for (auto [a, b] : raw)
                inflated.push_back({10 * a + 3, 10 * b + 3});
            auto compressed = compress_eq_labels(inflated);
            REQUIRE(verify_numpair_labels(compressed, *g, true, n));
        }
    }
}

TEST_CASE("balanced k-module search on K4 and C5") {
    auto k4 = find_balanced_kmodule(Graph::complete(4), 1);
    REQUIRE(k4.has_value());
    CHECK(k4->module_vertices == std::vector<int>{0, 1}); // least 2-subset
    auto c5 = find_balanced_kmodule(Graph::cycle(5), 2);
    REQUIRE(c5.has_value());
    auto p4 = find_balanced_kmodule(Graph::path(4), 1);
    CHECK_FALSE(p4.has_value());
}

TEST_CASE("module tree validation catches corrupted attachments") {
    Graph p4 = Graph::path(4);
    auto tree = build_module_tree(p4, 3);
    REQUIRE(tree.has_value());
    validate_module_tree(p4, *tree, 3);
    // corrupt one attachment
    ModuleTreePtr root = *tree;
    if (!root->attach.empty()) {
        auto it = root->attach.begin();
        it->second.push_back(42);
        CHECK_THROWS_AS(validate_module_tree(p4, root, 3), std::invalid_argument);
    }
}
