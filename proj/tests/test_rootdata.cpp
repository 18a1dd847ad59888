#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gkmchar/rootdata.hpp"

using namespace gkmchar;

namespace {

struct TypeFacts {
    const char* name;
    std::int64_t weyl_order;
    std::size_t positive;
    std::int64_t dual_coxeter;
};

// Classical closed forms: |W|, |R+|, g.
const TypeFacts kFacts[] = {
    {"A1", 2, 1, 2},    {"A2", 6, 3, 3},     {"A3", 24, 6, 4},   {"A4", 120, 10, 5},
    {"B2", 8, 4, 3},    {"B3", 48, 9, 5},    {"B4", 384, 16, 7}, {"C3", 48, 9, 4},
    {"C4", 384, 16, 5}, {"D4", 192, 12, 6},  {"G2", 12, 6, 4},
};

}  // namespace

TEST_CASE("counts and dual Coxeter numbers per type") {
    for (const TypeFacts& f : kFacts) {
        CAPTURE(f.name);
        const RootSystem rs = build_root_system(CartanType::parse(f.name));
        CHECK(rs.num_positive_roots() == f.positive);
        CHECK(weyl_order(rs) == f.weyl_order);
        CHECK(dual_coxeter_number(rs) == f.dual_coxeter);
        CHECK(static_cast<std::int64_t>(weyl_group(rs).size()) == f.weyl_order);
    }
}

TEST_CASE("higher ranks work without Weyl enumeration") {
    const RootSystem a8 = build_root_system(CartanType::parse("A8"));
    CHECK(a8.num_positive_roots() == 36);
    CHECK(weyl_order(a8) == 362880);
    const RootSystem b8 = build_root_system(CartanType::parse("B8"));
    CHECK(b8.num_positive_roots() == 64);
    CHECK(weyl_order(b8) == 10321920);
    const RootSystem d5 = build_root_system(CartanType::parse("D5"));
    CHECK(d5.num_positive_roots() == 20);
    CHECK(weyl_order(d5) == 1920);
    CHECK_THROWS_AS((void)weyl_group(d5), std::invalid_argument);
}

TEST_CASE("type parsing rejects malformed input") {
    CHECK_THROWS_AS((void)CartanType::parse("A0"), std::invalid_argument);
    CHECK_THROWS_AS((void)CartanType::parse("X2"), std::invalid_argument);
    CHECK_THROWS_AS((void)CartanType::parse("G3"), std::invalid_argument);
    CHECK_THROWS_AS((void)CartanType::parse(""), std::invalid_argument);
    CHECK(CartanType::parse("G2").to_string() == "G2");
}

TEST_CASE("rho pairs to one with every simple coroot") {
    for (const TypeFacts& f : kFacts) {
        const RootSystem rs = build_root_system(CartanType::parse(f.name));
        for (int i = 0; i < rs.rank(); ++i) {
            std::vector<std::int64_t> e(static_cast<std::size_t>(rs.rank()), 0);
            e[static_cast<std::size_t>(i)] = 1;
            CHECK(pairing(rs.rho, CorootVector(e)) == 1);
        }
    }
}

TEST_CASE("positive roots are sorted by height then simple coordinates") {
    for (const char* t : {"A2", "B2", "G2", "A3"}) {
        const RootSystem rs = build_root_system(CartanType::parse(t));
        for (std::size_t i = 1; i < rs.positive.size(); ++i) {
            const Root& a = rs.positive[i - 1];
            const Root& b = rs.positive[i];
            const bool ordered = a.height < b.height ||
                                 (a.height == b.height && a.simple_coords < b.simple_coords);
            CHECK(ordered);
        }
        // Exactly rank roots of height 1, and a unique highest root.
        std::map<std::int64_t, int> by_height;
        for (const Root& a : rs.positive) by_height[a.height]++;
        CHECK(by_height[1] == rs.rank());
        CHECK(by_height.rbegin()->second == 1);
        CHECK(rs.highest_root().height == by_height.rbegin()->first);
    }
}

TEST_CASE("find_root sees both signs and nothing else") {
    const RootSystem rs = build_root_system(CartanType::parse("G2"));
    for (std::size_t i = 0; i < rs.num_positive_roots(); ++i) {
        const Weight& a = rs.positive[i].weight;
        const auto pos = rs.find_root(a);
        REQUIRE(pos.has_value());
        CHECK(pos->first == i);
        CHECK(pos->second == 1);
        const auto neg = rs.find_root(-a);
        REQUIRE(neg.has_value());
        CHECK(neg->first == i);
        CHECK(neg->second == -1);
        CHECK_FALSE(rs.is_root(a * 2));
    }
    CHECK_FALSE(rs.is_root(Weight::zero(2)));
}

TEST_CASE("reflections permute the roots and have determinant -1") {
    for (const char* t : {"A2", "B2", "G2"}) {
        const RootSystem rs = build_root_system(CartanType::parse(t));
        for (const WeylElement& s : rs.simple_reflections) {
            CHECK(s.det == -1);
            CHECK(s.length == 1);
            const WeylElement s2 = rs.compose(s, s);
            CHECK(s2.length == 0);
            CHECK(s2.matrix == rs.identity_element().matrix);
            for (const Root& a : rs.positive) CHECK(rs.is_root(s.apply(a.weight)));
        }
    }
}

TEST_CASE("lengths, reduced words and the longest element") {
    for (const char* t : {"A2", "B2", "G2", "A3"}) {
        const RootSystem rs = build_root_system(CartanType::parse(t));
        const auto W = weyl_group(rs);
        int longest = 0;
        for (const WeylElement& w : W) {
            CHECK(rs.length_of(w.matrix) == w.length);
            const auto word = rs.reduced_word(w);
            CHECK(static_cast<int>(word.size()) == w.length);
            WeylElement acc = rs.identity_element();
            for (int s : word) acc = rs.compose(acc, rs.simple_reflections[static_cast<std::size_t>(s)]);
            CHECK(acc.matrix == w.matrix);
            longest = std::max(longest, w.length);
        }
        CHECK(longest == static_cast<int>(rs.num_positive_roots()));
        CHECK(std::count_if(W.begin(), W.end(), [&](const WeylElement& w) {
                  return w.length == longest;
              }) == 1);
    }
}

TEST_CASE("word_string round-trips through composition") {
    const RootSystem rs = build_root_system(CartanType::parse("A2"));
    CHECK(rs.word_string(rs.identity_element()) == "e");
    const WeylElement w = rs.compose(rs.simple_reflections[0], rs.simple_reflections[1]);
    CHECK(rs.word_string(w) == "s1 s2");
}

TEST_CASE("inner product matches the symmetrizer and is Weyl invariant") {
    for (const char* t : {"A2", "B2", "G2"}) {
        const RootSystem rs = build_root_system(CartanType::parse(t));
        for (int i = 0; i < rs.rank(); ++i) {
            // Simple roots appear among the height-1 positive roots.
            const Root& a = rs.positive[static_cast<std::size_t>(i)];
            REQUIRE(a.height == 1);
            int which = -1;
            for (int j = 0; j < rs.rank(); ++j)
                if (a.simple_coords[static_cast<std::size_t>(j)] == 1) which = j;
            REQUIRE(which >= 0);
            CHECK(rs.inner_product(a.weight, a.weight) ==
                  2 * rs.symmetrizer[static_cast<std::size_t>(which)]);
        }
        for (const WeylElement& w : weyl_group(rs))
            CHECK(rs.inner_product(w.apply(rs.rho), w.apply(rs.positive[0].weight)) ==
                  rs.inner_product(rs.rho, rs.positive[0].weight));
    }
}

TEST_CASE("level form: known Gram matrices, evenness, invariance") {
    const RootSystem a1 = build_root_system(CartanType::parse("A1"));
    const LevelForm f1 = looijenga_form(a1);
    CHECK(f1.gram.at(0, 0) == 2);
    CHECK(f1.dual_coxeter == 2);

    const RootSystem a2 = build_root_system(CartanType::parse("A2"));
    const LevelForm f2 = looijenga_form(a2);
    CHECK(f2.gram.at(0, 0) == 2);
    CHECK(f2.gram.at(0, 1) == -1);
    CHECK(f2.gram.at(1, 0) == -1);
    CHECK(f2.gram.at(1, 1) == 2);

    const RootSystem g2 = build_root_system(CartanType::parse("G2"));
    const LevelForm fg = looijenga_form(g2);
    CHECK(fg.gram.at(0, 0) == 6);
    CHECK(fg.gram.at(0, 1) == -3);
    CHECK(fg.gram.at(1, 1) == 2);
    CHECK(fg.dual_coxeter == 4);

    for (const char* t : {"A3", "B2", "B3", "C3", "D4"}) {
        const RootSystem rs = build_root_system(CartanType::parse(t));
        const LevelForm f = looijenga_form(rs);
        CHECK(f.dual_coxeter == dual_coxeter_number(rs));
        for (int i = 0; i < rs.rank(); ++i) {
            CHECK(f.gram.at(i, i) % 2 == 0);
            CHECK(f.gram.at(i, i) > 0);
            for (int j = 0; j < rs.rank(); ++j) CHECK(f.gram.at(i, j) == f.gram.at(j, i));
        }
    }
}

TEST_CASE("level form pairings: eval, sharp and phi are consistent") {
    const RootSystem rs = build_root_system(CartanType::parse("B2"));
    const LevelForm f = looijenga_form(rs);
    const CorootVector x({1, -2});
    const CorootVector y({0, 3});
    CHECK(f.eval(x, x) == 2 * f.phi(x));
    // sharp intertwines the form and the weight pairing.
    CHECK(pairing_times2(f.sharp(x), y) == 2 * f.eval(x, y));
    CHECK(pairing_times2(f.sharp(y), x) == 2 * f.eval(x, y));
}

TEST_CASE("equal-rank pairs: torus, parabolic, validation") {
    const RootSystem a2 = build_root_system(CartanType::parse("A2"));
    const EqualRankPair torus = EqualRankPair::make(a2, {});
    CHECK(torus.is_torus());
    CHECK(torus.weyl_h.size() == 1);
    CHECK(torus.flag_dimension() == 3);
    CHECK(torus.tangent_weights().size() == 3);

    const EqualRankPair cp2 = EqualRankPair::from_simple_indices(a2, {0});
    CHECK_FALSE(cp2.is_torus());
    CHECK(cp2.weyl_h.size() == 2);
    CHECK(cp2.flag_dimension() == 2);
    CHECK(cp2.tangent_weights().size() == 2);
    // The chosen simple root of H really is the first simple root of G.
    REQUIRE(cp2.sub_simple.size() == 1);
    const Root& h = a2.positive[cp2.sub_simple[0]];
    CHECK(h.height == 1);
    CHECK(h.simple_coords == std::vector<std::int64_t>{1, 0});
    CHECK(cp2.is_h_root(cp2.sub_simple[0]));
    CHECK_FALSE(cp2.is_h_root(a2.highest_root_index));

    CHECK_THROWS_AS((void)EqualRankPair::from_simple_indices(a2, {0, 5}),
                    std::invalid_argument);

    const RootSystem b2 = build_root_system(CartanType::parse("B2"));
    // Taking every simple root gives H = G: nothing left in the tangent space.
    const EqualRankPair sub = EqualRankPair::from_simple_indices(b2, {0, 1});
    CHECK(sub.weyl_h.size() == 8);
    CHECK(sub.flag_dimension() == 0);
}

TEST_CASE("G2 torus flag dimension") {
    const RootSystem g2 = build_root_system(CartanType::parse("G2"));
    const EqualRankPair p = EqualRankPair::make(g2, {});
    CHECK(p.flag_dimension() == 6);
    CHECK(p.tangent_weights().size() == 6);
}
