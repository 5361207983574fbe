#include "doctest.h"

#include <random>
#include <vector>

#include "labelab/logic.hpp"

using namespace labelab;

namespace {

// All assignments of `vars` values over [n]_0.
template <class Fn>
void for_all_assignments(int vars, long long n, Fn fn) {
    Assignment a(vars, 0);
    while (true) {
        fn(a);
        int pos = vars - 1;
        while (pos >= 0 && a[pos] == n)
            a[pos--] = 0;
        if (pos < 0)
            return;
        ++a[pos];
    }
}

} // namespace

TEST_CASE("bounded evaluation of the interval formula") {
    // interval adjacency: !(x2 < y1 | y2 < x1)
    FormulaPtr phi = parse_formula("!(x2 < y1 | y2 < x1)");
    CHECK(eval_bounded(*phi, {2, 7, 1, 3}, 10));
    CHECK_FALSE(eval_bounded(*phi, {1, 3, 4, 5}, 10));
    CHECK(eval_bounded(*phi, {4, 4, 4, 4}, 10));
}

TEST_CASE("bounded overflow forces sums to zero") {
    // 2 + 2 > 3 overflows to 0, so x1 + y1 = x2 holds when x2 = 0
    FormulaPtr phi = parse_formula("(x1 + y1) = x2");
    CHECK(eval_bounded(*phi, {2, 0, 2, 0}, 3));
    CHECK_FALSE(eval_bounded(*phi, {2, 1, 2, 0}, 3));
}

TEST_CASE("bounded quantifiers range over the universe") {
    FormulaPtr phi = parse_formula("E z1 . (x1 < z1 & z1 < y1)");
    CHECK(eval_bounded(*phi, {1, 3}, 3));
    CHECK_FALSE(eval_bounded(*phi, {1, 2}, 3));
}

TEST_CASE("bounded evaluation rejects out-of-universe assignments") {
    FormulaPtr phi = parse_formula("x1 = y1");
    CHECK_THROWS_AS(eval_bounded(*phi, {5, 0}, 3), std::invalid_argument);
}

TEST_CASE("infinite evaluation uses exact arithmetic") {
    FormulaPtr phi = parse_formula("(x1 * y1) < x2");
    std::vector<BigInt> a{BigInt(1000000), BigInt(5), BigInt(1000000)};
    // arity is read from assignment length: treat as x1,x2 then y1 missing;
    // use the 4-value layout instead
    FormulaPtr psi = parse_formula("(x1 * y1) < x2");
    std::vector<BigInt> b{BigInt(1000000), BigInt(5), BigInt(1000000), BigInt(0)};
    CHECK_FALSE(eval_infinite(*psi, b));
    (void)phi;
    (void)a;
}

TEST_CASE("infinite evaluation refuses quantifiers") {
    FormulaPtr phi = parse_formula("E z1 . x1 < z1");
    CHECK_THROWS_AS(eval_infinite(*phi, Assignment{0, 0}), std::invalid_argument);
}

TEST_CASE("guard transform leaves arithmetic-free atoms unchanged") {
    FormulaPtr phi = parse_formula("x1 = y1");
    FormulaPtr guarded = guard_transform(*phi);
    CHECK(to_text(*guarded) == "x1 = y1");
}

TEST_CASE("guard transform matches bounded evaluation on a sum atom") {
    FormulaPtr phi = parse_formula("(x1 + y1) < x2");
    FormulaPtr guarded = guard_transform(*phi);
    long long n = 3;
    for_all_assignments(4, n, [&](const Assignment& a) {
        CHECK(eval_bounded(*phi, a, n) ==
              eval_infinite(*guarded, a, std::optional<long long>(n)));
    });
    // the overflow case the statement highlights
    CHECK(eval_bounded(*phi, {2, 1, 2, 0}, 3) ==
          eval_infinite(*guarded, {2, 1, 2, 0}, std::optional<long long>(3)));
    CHECK(eval_bounded(*phi, {2, 1, 2, 0}, 3));
}

TEST_CASE("guard transform handles the worked product atom") {
    // ((x1 + y2) * x2) < (x2 + y1): one case split per compound subterm
    FormulaPtr phi = parse_formula("((x1 + y2) * x2) < (x2 + y1)");
    FormulaPtr guarded = guard_transform(*phi);
    for (long long n = 1; n <= 5; ++n)
        for_all_assignments(4, n, [&](const Assignment& a) {
            REQUIRE(eval_bounded(*phi, a, n) ==
                    eval_infinite(*guarded, a, std::optional<long long>(n)));
        });
}

TEST_CASE("quantifier elimination: the between formula") {
    FormulaPtr phi = parse_formula("E z1 . (x1 < z1 & z1 < y1)");
    FormulaPtr qf = qe_order(*phi);
    CHECK(is_quantifier_free(*qf));
    // semantic agreement on every universe
    for (long long n = 1; n <= 6; ++n)
        for_all_assignments(2, n, [&](const Assignment& a) {
            REQUIRE(eval_bounded(*phi, a, n) == eval_bounded(*qf, a, n));
        });
    // the appended pattern is present
    std::string text = to_text(*qf);
    CHECK(text.find("(x1 + c1) < y1") != std::string::npos);
    CHECK(text.find("!x1 = cm") != std::string::npos);
}

TEST_CASE("quantifier elimination: sink position becomes cm") {
    FormulaPtr phi = parse_formula("E z1 . x1 < z1");
    FormulaPtr qf = qe_order(*phi);
    CHECK(is_quantifier_free(*qf));
    CHECK(to_text(*qf) == "x1 < cm");
    for (long long n = 1; n <= 6; ++n)
        for_all_assignments(2, n, [&](const Assignment& a) {
            REQUIRE(eval_bounded(*phi, a, n) == eval_bounded(*qf, a, n));
        });
}

TEST_CASE("quantifier elimination: source position becomes c0") {
    FormulaPtr phi = parse_formula("E z1 . z1 < y1");
    FormulaPtr qf = qe_order(*phi);
    for (long long n = 1; n <= 6; ++n)
        for_all_assignments(2, n, [&](const Assignment& a) {
            REQUIRE(eval_bounded(*phi, a, n) == eval_bounded(*qf, a, n));
        });
}

TEST_CASE("quantifier elimination: unsatisfiable clause is the canonical contradiction") {
    FormulaPtr phi = parse_formula("E z1 . (x1 < z1 & z1 < x1)");
    FormulaPtr qf = qe_order(*phi);
    CHECK(to_text(*qf) == "c0 < c0");
}

TEST_CASE("quantifier elimination: quantifier-free input returned unchanged") {
    FormulaPtr phi = parse_formula("(x1 < y1 & x2 = y2)");
    FormulaPtr qf = qe_order(*phi);
    CHECK(to_text(*qf) == to_text(*phi));
}

TEST_CASE("quantifier elimination: rejects arithmetic") {
    FormulaPtr phi = parse_formula("E z1 . (x1 + z1) < y1");
    CHECK_THROWS_AS(qe_order(*phi), std::invalid_argument);
}

TEST_CASE("quantifier elimination: universal quantifier and nesting") {
    for (const char* text : {
             "A z1 . (x1 < z1 | z1 < y1)",
             "E z1 . (x1 = z1 & z1 < y1)",
             "E z2 . E z1 . (z2 < z1 & z1 < y1)",
             "A z1 . E z2 . (z1 < z2 | x1 = y1)",
             "E z1 . (z1 < x1 & z1 < y1)",
             "E z1 . (x1 < z1 & (z1 < y1 | z1 = y1))",
         }) {
        FormulaPtr phi = parse_formula(text);
        FormulaPtr qf = qe_order(*phi);
        REQUIRE(is_quantifier_free(*qf));
        for (long long n = 1; n <= 5; ++n)
            for_all_assignments(2, n, [&](const Assignment& a) {
                REQUIRE_MESSAGE(eval_bounded(*phi, a, n) == eval_bounded(*qf, a, n),
                                text << " at n=" << n << " a=(" << a[0] << "," << a[1]
                                     << ")");
            });
    }
}

TEST_CASE("atoms decomposition of the interval formula") {
    FormulaPtr phi = parse_formula("!(x2 < y1 | y2 < x1)");
    AtomsDecomposition d = atoms_decompose(*phi);
    CHECK(d.atoms.size() == 2);
    // NOR table on two propositions
    CHECK(d.f.eval({false, false}));
    CHECK_FALSE(d.f.eval({true, false}));
    CHECK_FALSE(d.f.eval({false, true}));
    CHECK_FALSE(d.f.eval({true, true}));
}

TEST_CASE("atoms decomposition: single atom gives the identity table") {
    FormulaPtr phi = parse_formula("x1 < y1");
    AtomsDecomposition d = atoms_decompose(*phi);
    CHECK(d.atoms.size() == 1);
    CHECK(d.f.eval({true}));
    CHECK_FALSE(d.f.eval({false}));
}

TEST_CASE("atoms decomposition counts occurrences and round-trips") {
    FormulaPtr phi = parse_formula("(x1 = y1 | !x1 = y1)");
    AtomsDecomposition d = atoms_decompose(*phi);
    CHECK(d.atoms.size() == 2);
    for (long long n = 1; n <= 4; ++n)
        for_all_assignments(2, n, [&](const Assignment& a) {
            std::vector<bool> verdicts;
            for (const auto& atom : d.atoms)
                verdicts.push_back(eval_bounded(*atom, a, n));
            REQUIRE(d.f.eval(verdicts) == eval_bounded(*phi, a, n));
        });
}

TEST_CASE("linear atom normalization: identity case") {
    FormulaPtr atom = parse_formula("x1 < y1");
    NormalizedLinearAtom norm(*atom, 4, 1);
    CHECK_FALSE(norm.is_equality());
    // order-preserving renumbering: rank1(x) < rank2(y) iff x1 < y1
    for (long long x = 0; x <= 4; ++x)
        for (long long y = 0; y <= 4; ++y) {
            auto a = norm.transform({x});
            auto b = norm.transform({y});
            REQUIRE((a.first < b.second) == (x < y));
        }
}

TEST_CASE("linear atom normalization: sum atom") {
    FormulaPtr atom = parse_formula("(x1 + x2) < y1");
    NormalizedLinearAtom norm(*atom, 4, 1);
    for (long long x1 = 0; x1 <= 4; ++x1)
        for (long long x2 = 0; x2 <= 4; ++x2)
            for (long long y1 = 0; y1 <= 4; ++y1) {
                auto a = norm.transform({x1, x2});
                auto b = norm.transform({y1, 0});
                REQUIRE((a.first < b.second) == (x1 + x2 < y1));
            }
}

TEST_CASE("linear atom normalization: equality atoms keep equality") {
    FormulaPtr atom = parse_formula("(x1 + x2) = (y1 + y2)");
    NormalizedLinearAtom norm(*atom, 3, 1);
    CHECK(norm.is_equality());
    for (long long x1 = 0; x1 <= 3; ++x1)
        for (long long x2 = 0; x2 <= 3; ++x2)
            for (long long y1 = 0; y1 <= 3; ++y1)
                for (long long y2 = 0; y2 <= 3; ++y2) {
                    auto a = norm.transform({x1, x2});
                    auto b = norm.transform({y1, y2});
                    REQUIRE((a.first == b.second) == (x1 + x2 == y1 + y2));
                }
}

TEST_CASE("linear atom normalization rejects multiplication") {
    FormulaPtr atom = parse_formula("(x1 * x2) < y1");
    CHECK_THROWS_AS(NormalizedLinearAtom(*atom, 3, 1), std::invalid_argument);
}

TEST_CASE("numeric label serialization round-trips") {
    NumLabel values{3, 0, 7};
    BitLabel l = serialize_num_label(values, 9, 4);
    auto [parsed, bound] = parse_num_label(l, 3);
    CHECK(parsed == values);
    CHECK(bound == 9);
}

TEST_CASE("fo bit decoder agrees with direct evaluation") {
    FoScheme s = fo_scheme(parse_formula("x1 = y2"), 1);
    CHECK(s.k == 2);
    DecoderPtr d = fo_decoder(s);
    int n = 3;
    long long bound = s.universe(n);
    for (long long x1 = 0; x1 <= bound; ++x1)
        for (long long y2 = 0; y2 <= bound; ++y2) {
            BitLabel lx = serialize_num_label({x1, 0}, bound, 3);
            BitLabel ly = serialize_num_label({0, y2}, bound, 3);
            REQUIRE(d->accepts(lx, ly) == s.accepts(n, {x1, 0}, {0, y2}));
            REQUIRE(d->accepts(lx, ly) == (x1 == y2));
        }
}

TEST_CASE("atoms decomposition round-trips on random formulas") {
    std::mt19937 rng(29);
    auto random_term = [&rng](auto&& self, int depth) -> TermPtr {
        switch (rng() % (depth > 0 ? 5 : 3)) {
        case 0: return t_x(1 + static_cast<int>(rng() % 2));
        case 1: return t_y(1 + static_cast<int>(rng() % 2));
        case 2: return t_x(2);
        case 3: return t_plus(self(self, depth - 1), self(self, depth - 1));
        default: return t_times(self(self, depth - 1), self(self, depth - 1));
        }
    };
    auto random_formula = [&](auto&& self, int depth) -> FormulaPtr {
        switch (rng() % (depth > 0 ? 5 : 2)) {
        case 0: return f_less(random_term(random_term, 1), random_term(random_term, 1));
        case 1: return f_equal(random_term(random_term, 1), random_term(random_term, 1));
        case 2: return f_not(self(self, depth - 1));
        case 3: return f_and(self(self, depth - 1), self(self, depth - 1));
        default: return f_or(self(self, depth - 1), self(self, depth - 1));
        }
    };
    long long pairs = 0;
    for (int trial = 0; trial < 300; ++trial) {
        FormulaPtr phi = random_formula(random_formula, 2);
        AtomsDecomposition d = atoms_decompose(*phi);
        long long n = 3;
        for (int sample = 0; sample < 40; ++sample) {
            Assignment a(4);
            for (auto& v : a)
                v = static_cast<long long>(rng() % (n + 1));
            std::vector<bool> verdicts;
            for (const auto& atom : d.atoms)
                verdicts.push_back(eval_bounded(*atom, a, n));
            REQUIRE(d.f.eval(verdicts) == eval_bounded(*phi, a, n));
            ++pairs;
        }
    }
    CHECK(pairs >= 10000);
}

TEST_CASE("quantifier elimination agrees with brute force on random formulas") {
    std::mt19937 rng(53);
    // random order formulas over x1, y1 and up to two bound variables
    auto random_var = [&rng](int zdepth) -> TermPtr {
        int pick = static_cast<int>(rng() % (zdepth > 0 ? 4 : 2));
        switch (pick) {
        case 0: return t_x(1);
        case 1: return t_y(1);
        default: return t_z(1 + (zdepth > 1 ? static_cast<int>(rng() % 2) : 0));
        }
    };
    auto random_formula = [&](auto&& self, int depth, int zdepth) -> FormulaPtr {
        int pick = static_cast<int>(rng() % (depth > 0 ? 6 : 2));
        switch (pick) {
        case 0: return f_less(random_var(zdepth), random_var(zdepth));
        case 1: return f_equal(random_var(zdepth), random_var(zdepth));
        case 2: return f_not(self(self, depth - 1, zdepth));
        case 3: return f_and(self(self, depth - 1, zdepth), self(self, depth - 1, zdepth));
        default: return f_or(self(self, depth - 1, zdepth), self(self, depth - 1, zdepth));
        }
    };
    int tested = 0;
    for (int trial = 0; trial < 160; ++trial) {
        int zcount = 1 + static_cast<int>(rng() % 2);
        FormulaPtr body = random_formula(random_formula, 2, zcount);
        FormulaPtr phi = body;
        for (int z = zcount; z >= 1; --z)
            phi = (rng() & 1) ? f_exists(z, phi) : f_forall(z, phi);
        FormulaPtr qf;
        try {
            qf = qe_order(*phi);
        } catch (const std::invalid_argument&) {
            continue; // DNF blow-up guard tripped; skip this sample
        }
        REQUIRE(is_quantifier_free(*qf));
        ++tested;
        for (long long n = 1; n <= 4; ++n)
            for (long long a = 0; a <= n; ++a)
                for (long long b = 0; b <= n; ++b)
                    REQUIRE_MESSAGE(
                        eval_bounded(*phi, {a, b}, n) == eval_bounded(*qf, {a, b}, n),
                        to_text(*phi) << " vs " << to_text(*qf) << " at n=" << n << " a="
                                      << a << " b=" << b);
    }
    CHECK(tested >= 100);
}
