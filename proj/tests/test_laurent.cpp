#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkmchar/errors.hpp"
#include "gkmchar/json_io.hpp"
#include "gkmchar/laurent.hpp"
#include "gkmchar/rootdata.hpp"

using namespace gkmchar;

namespace {

// Deterministic pseudo-random Laurent polynomial supported near 0.
LaurentPoly random_laurent(int rank, std::mt19937& rng, int terms = 6) {
    std::uniform_int_distribution<std::int64_t> coord(-3, 3);
    std::uniform_int_distribution<int> num(-5, 5);
    LaurentPoly f(rank);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(rank));
        for (auto& c : e) c = 2 * coord(rng);  // integral weights
        f.add_term(Weight(e), make_rat(num(rng), 1 + (t % 2)));
    }
    return f;
}

LaurentPoly binomial(int rank, const Weight& a) {
    LaurentPoly r = LaurentPoly::constant(rank, Rat(1));
    r.add_term(a, Rat(-1));
    return r;
}

}  // namespace

TEST_CASE("ring axioms on sampled elements") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const LaurentPoly f = random_laurent(2, rng);
        const LaurentPoly g = random_laurent(2, rng);
        const LaurentPoly h = random_laurent(2, rng);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f - f == LaurentPoly::zero(2));
        CHECK(f * LaurentPoly::constant(2, Rat(1)) == f);
        CHECK(f.scaled(make_rat(3, 2)).scaled(make_rat(2, 3)) == f);
    }
}

TEST_CASE("monomial, shift and coefficient access") {
    const Weight w({4, -2});
    LaurentPoly m = LaurentPoly::monomial(w, make_rat(5, 3));
    CHECK(m.num_terms() == 1);
    CHECK(m.coeff(w) == make_rat(5, 3));
    CHECK(m.coeff(Weight::zero(2)) == 0);
    CHECK(m.shifted(-w) == LaurentPoly::constant(2, make_rat(5, 3)));
    m.add_term(w, make_rat(-5, 3));
    CHECK(m.is_zero());  // exact cancellation removes the stored term
}

TEST_CASE("text rendering uses fundamental-weight exponents") {
    // Internal exponents are halved fundamental coordinates, so the
    // printed power is coords/2, with odd coords shown as fractions.
    LaurentPoly chi(1);
    chi.add_term(Weight({4}), Rat(1));
    chi.add_term(Weight({0}), Rat(1));
    chi.add_term(Weight({-4}), Rat(1));
    CHECK(chi.to_string() == "z^2 + 1 + z^-2");

    LaurentPoly half(1);
    half.add_term(Weight({1}), Rat(1));
    half.add_term(Weight({-1}), Rat(-1));
    CHECK(half.to_string() == "z^(1/2) - z^(-1/2)");

    LaurentPoly two(2);
    two.add_term(Weight({2, -2}), make_rat(3, 2));
    CHECK(two.to_string() == "3/2 z1 z2^-1");

    CHECK(LaurentPoly::zero(1).to_string() == "0");
    CHECK(LaurentPoly::constant(1, Rat(-7)).to_string() == "-7");
}

TEST_CASE("binomial division round-trips and reports failures") {
    const RootSystem rs = build_root_system(CartanType::parse("A2"));
    std::mt19937 rng(11);
    for (const Root& a : rs.positive) {
        for (int trial = 0; trial < 10; ++trial) {
            const LaurentPoly g = random_laurent(2, rng);
            const LaurentPoly f = binomial(2, a.weight) * g;
            CHECK(divide_exact_binomial(f, a.weight) == g);
        }
    }
    // 1 alone is not divisible by (1 - z^alpha).
    const Weight alpha = rs.positive[0].weight;
    CHECK_THROWS_AS((void)divide_exact_binomial(LaurentPoly::constant(2, Rat(1)), alpha),
                    NotDivisibleError);
    try {
        (void)divide_exact_binomial(LaurentPoly::constant(2, Rat(1)), alpha);
        FAIL("expected NotDivisibleError");
    } catch (const NotDivisibleError& e) {
        CHECK_FALSE(e.witness_coords.empty());
    }
    CHECK_THROWS_AS((void)divide_exact_binomial(LaurentPoly::zero(2), Weight::zero(2)),
                    std::invalid_argument);
}

TEST_CASE("weyl_act is a ring automorphism compatible with composition") {
    const RootSystem rs = build_root_system(CartanType::parse("B2"));
    std::mt19937 rng(13);
    const auto W = weyl_group(rs);
    for (int trial = 0; trial < 8; ++trial) {
        const LaurentPoly f = random_laurent(2, rng);
        const LaurentPoly g = random_laurent(2, rng);
        const WeylElement& u = W[trial % W.size()];
        const WeylElement& v = W[(3 * trial + 1) % W.size()];
        CHECK(weyl_act(u, f * g) == weyl_act(u, f) * weyl_act(u, g));
        CHECK(weyl_act(u, f + g) == weyl_act(u, f) + weyl_act(u, g));
        CHECK(weyl_act(rs.compose(u, v), f) == weyl_act(u, weyl_act(v, f)));
    }
}

TEST_CASE("graded polynomials: linear forms, degrees, division") {
    const RootSystem rs = build_root_system(CartanType::parse("A1"));
    const Weight alpha = rs.positive[0].weight;
    const Poly a = Poly::linear_form(alpha);
    CHECK(a.to_string() == "2 x");
    CHECK(Poly::linear_form(rs.rho).to_string() == "x");

    const Poly x = Poly::variable(1, 0);
    const Poly f = x * x * x + x.scaled(Rat(2));
    CHECK(f.total_degree() == 3);
    CHECK_FALSE(f.is_homogeneous());
    CHECK((x * x).is_homogeneous());

    CHECK(poly_divide_exact_linear(f * a, a) == f);
    CHECK_THROWS_AS((void)poly_divide_exact_linear(f + Poly::constant(1, Rat(1)), a),
                    NotDivisibleError);

    const Poly zero = Poly::zero(1);
    CHECK(zero.total_degree() == -1);
    CHECK(zero.to_string() == "0");
}

TEST_CASE("polynomial weyl_act intertwines linear_form with the weight action") {
    const RootSystem rs = build_root_system(CartanType::parse("G2"));
    for (const WeylElement& w : weyl_group(rs))
        for (const Root& a : rs.positive)
            CHECK(weyl_act(w, Poly::linear_form(a.weight)) ==
                  Poly::linear_form(w.apply(a.weight)));
}

TEST_CASE("rank-2 polynomial rendering") {
    const Poly p = Poly::variable(2, 0) * Poly::variable(2, 1) * Poly::variable(2, 1);
    CHECK(p.to_string() == "x1 x2^2");
}

TEST_CASE("JSON export: sorted coordinates with exact rationals") {
    LaurentPoly f(1);
    f.add_term(Weight({2}), make_rat(-1, 3));
    f.add_term(Weight({-2}), Rat(4));
    CHECK(laurent_to_json(f) ==
          "[\n"
          "  {\n"
          "    \"coords\": [\n"
          "      -2\n"
          "    ],\n"
          "    \"num\": 4,\n"
          "    \"den\": 1\n"
          "  },\n"
          "  {\n"
          "    \"coords\": [\n"
          "      2\n"
          "    ],\n"
          "    \"num\": -1,\n"
          "    \"den\": 3\n"
          "  }\n"
          "]");
}
