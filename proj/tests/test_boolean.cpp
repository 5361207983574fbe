#include "doctest.h"

#include <stdexcept>

#include <random>

#include "labelab/boolean_table.hpp"
#include "labelab/enumerate.hpp"

using namespace labelab;

TEST_CASE("truth table indexing: first argument is the most significant bit") {
    auto f = BooleanFunctionTable::from_function(
        2, [](const std::vector<bool>& a) { return a[0] && !a[1]; });
    CHECK(f.table() == std::vector<bool>{false, false, true, false});
    CHECK(f.eval({true, false}));
    CHECK_FALSE(f.eval({false, true}));
}

TEST_CASE("hex round trip") {
    auto f = BooleanFunctionTable::from_function(
        3, [](const std::vector<bool>& a) { return a[0] != (a[1] && a[2]); });
    auto g = BooleanFunctionTable::from_hex(3, f.to_hex());
    CHECK(f.table() == g.table());
    CHECK_THROWS_AS(BooleanFunctionTable::from_hex(3, "zz"), std::invalid_argument);
}

TEST_CASE("apply_boolean: constant zero gives the edgeless graph") {
    Graph k3 = Graph::complete(3);
    Graph out = apply_boolean(BooleanFunctionTable::constant(1, false), {k3});
    CHECK(out == Graph::edgeless(3));
}

TEST_CASE("apply_boolean: negation of loop-free K3 has only the loops") {
    Graph k3 = Graph::complete(3);
    Graph out = edge_complement(k3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            CHECK(out.edge(u, v) == (u == v));
}

TEST_CASE("apply_boolean rejects arity and size mismatches") {
    Graph k2 = Graph::complete(2), k3 = Graph::complete(3);
    CHECK_THROWS_AS(apply_boolean(BooleanFunctionTable::conjunction(), {k2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_boolean(BooleanFunctionTable::conjunction(), {k2, k3}),
                    std::invalid_argument);
}

TEST_CASE("double negation is the identity mod self-loops") {
    for (int n = 1; n <= 4; ++n) {
        GraphEnumerator en(n, false, false);
        while (auto g = en.next())
            REQUIRE(equiv_mod_selfloops(edge_complement(edge_complement(*g)), *g));
    }
}

TEST_CASE("De Morgan at graph level") {
    auto check_pair = [](const Graph& h1, const Graph& h2) {
        Graph lhs = edge_complement(
            apply_boolean(BooleanFunctionTable::conjunction(), {h1, h2}));
        Graph rhs = apply_boolean(BooleanFunctionTable::disjunction(),
                                  {edge_complement(h1), edge_complement(h2)});
        REQUIRE(lhs == rhs);
    };
    for (int n = 2; n <= 3; ++n) {
        auto graphs = all_graphs(n, false, false);
        for (const Graph& h1 : graphs)
            for (const Graph& h2 : graphs)
                check_pair(h1, h2);
    }
}

TEST_CASE("compositional equivalence for composed tables") {
    // f = g(h1, h2) evaluated on graphs equals composing the graph images
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto rand_table = [&rng](int arity) {
            std::vector<bool> bits(1 << arity);
            for (std::size_t i = 0; i < bits.size(); ++i)
                bits[i] = rng() & 1;
            return BooleanFunctionTable(arity, bits);
        };
        BooleanFunctionTable g2 = rand_table(2), h1 = rand_table(2), h2 = rand_table(2);
        auto f = BooleanFunctionTable::from_function(2, [&](const std::vector<bool>& x) {
            return g2.eval({h1.eval(x), h2.eval(x)});
        });
        auto graphs = all_graphs(2, true, true);
        for (const Graph& a : graphs)
            for (const Graph& b : graphs) {
                Graph lhs = apply_boolean(f, {a, b});
                Graph rhs = apply_boolean(
                    g2, {apply_boolean(h1, {a, b}), apply_boolean(h2, {a, b})});
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("diagonality detection") {
    auto diag = BooleanFunctionTable::from_function(4, [](const std::vector<bool>& a) {
        return a[0] && a[3]; // entries (1,1) and (2,2)
    });
    CHECK(diag.diagonal());
    auto off = BooleanFunctionTable::from_function(4, [](const std::vector<bool>& a) {
        return a[1]; // entry (1,2)
    });
    CHECK_FALSE(off.diagonal());
}

TEST_CASE("matrix application flattens row-major") {
    auto f = BooleanFunctionTable::from_function(
        4, [](const std::vector<bool>& a) { return a[1]; });
    CHECK(f.eval_matrix({{false, true}, {false, false}}));
    CHECK_FALSE(f.eval_matrix({{true, false}, {true, true}}));
}
