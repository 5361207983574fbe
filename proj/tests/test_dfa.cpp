#include "doctest.h"

#include <stdexcept>

#include <random>

#include "labelab/dfa.hpp"
#include "labelab/enumerate.hpp"
#include "labelab/schemes.hpp"

using namespace labelab;

TEST_CASE("lex-less agrees with numeric comparison exhaustively to 6 bits") {
    Dfa d = lex_less_dfa();
    for (int m = 0; m <= 6; ++m)
        for (std::uint64_t x = 0; x < (1u << m); ++x)
            for (std::uint64_t y = 0; y < (1u << m); ++y)
                REQUIRE(dfa_decode(d, BitLabel::from_value(x, m),
                                   BitLabel::from_value(y, m)) == (x < y));
}

TEST_CASE("lex-less basics") {
    Dfa d = lex_less_dfa();
    CHECK(dfa_decode(d, BitLabel::from_string("001"), BitLabel::from_string("010")));
    CHECK(dfa_decode(d, BitLabel::from_string("0"), BitLabel::from_string("1")));
    CHECK_FALSE(dfa_decode(d, BitLabel::from_string("11"), BitLabel::from_string("10")));
    CHECK_FALSE(dfa_decode(d, BitLabel::from_string("101"), BitLabel::from_string("101")));
}

TEST_CASE("empty labels accept iff the start state accepts") {
    Dfa d = lex_less_dfa();
    CHECK_FALSE(dfa_decode(d, BitLabel{}, BitLabel{}));
    d.accepting.insert(d.start);
    CHECK(dfa_decode(d, BitLabel{}, BitLabel{}));
}

TEST_CASE("dfa rejects out-of-alphabet symbols and unequal lengths") {
    Dfa d = lex_less_dfa();
    CHECK_THROWS_AS(d.run({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(dfa_decode(d, BitLabel::from_string("0"), BitLabel::from_string("01")),
                    std::invalid_argument);
}

TEST_CASE("dfa validation catches partial transition tables") {
    Dfa d;
    d.states = 2;
    d.alphabet = 2;
    d.start = 0;
    d.transitions = {{0, 1}};
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("block decoder: reference semantics") {
    // k = 2 blocks: side bit + 2 payload bits + '#'
    CHECK_FALSE(cw_block_accepts("010#", "101#", 2)); // payloads 10 and 01: disjoint
    CHECK(cw_block_accepts("010#", "110#", 2));       // payloads share position 1
    CHECK_FALSE(cw_block_accepts("010#010#", "010#010#", 2)); // identical leads: reject
    CHECK_THROWS_AS(cw_block_accepts("01#", "01#", 2), std::invalid_argument);
    CHECK_THROWS_AS(cw_block_accepts("0100", "0100", 2), std::invalid_argument);
}

TEST_CASE("generated block DFA equals the reference decoder on random labels") {
    for (int k : {1, 2, 3}) {
        Dfa d = cliquewidth_block_dfa(k);
        std::mt19937 rng(41 + k);
        auto random_label = [&](int blocks) {
            std::string s;
            for (int b = 0; b < blocks; ++b) {
                for (int i = 0; i <= k; ++i)
                    s.push_back(rng() & 1 ? '1' : '0');
                s.push_back('#');
            }
            return s;
        };
        for (int trial = 0; trial < 300; ++trial) {
            int blocks = 1 + static_cast<int>(rng() % 3);
            std::string sx = random_label(blocks), sy = random_label(blocks);
            std::size_t total = std::max(sx.size(), sy.size());
            bool want = cw_block_accepts(sx, sy, k);
            bool got = dfa_decode(d, cw_encode_symbols(sx, total),
                                  cw_encode_symbols(sy, total));
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("clique-width encoding of K2 decodes the edge") {
    Graph k2 = Graph::complete(2);
    auto tree = build_module_tree(k2, 2);
    REQUIRE(tree.has_value());
    CwEncoding enc = cliquewidth_encode(k2, *tree, 2);
    DecoderPtr d = cliquewidth_block_decoder(2);
    CHECK(d->accepts(enc.labels[0], enc.labels[1]));
    CHECK(d->accepts(enc.labels[1], enc.labels[0]));
}

TEST_CASE("clique-width encoding of P4 with a k = 3 tree decodes all pairs") {
    Graph p4 = Graph::path(4);
    auto tree = build_module_tree(p4, 3);
    REQUIRE(tree.has_value());
    CwEncoding enc = cliquewidth_encode(p4, *tree, 3);
    DecoderPtr d = cliquewidth_block_decoder(3);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            if (u == v)
                continue;
            REQUIRE(d->accepts(enc.labels[u], enc.labels[v]) == p4.edge(u, v));
        }
}

TEST_CASE("clique-width encoding of two disjoint edges with k = 2") {
    Graph g(4, false);
    g.set_edge(0, 1, true);
    g.set_edge(2, 3, true);
    auto tree = build_module_tree(g, 2);
    REQUIRE(tree.has_value());
    CwEncoding enc = cliquewidth_encode(g, *tree, 2);
    DecoderPtr d = cliquewidth_block_decoder(2);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v)
                REQUIRE(d->accepts(enc.labels[u], enc.labels[v]) == g.edge(u, v));
}
