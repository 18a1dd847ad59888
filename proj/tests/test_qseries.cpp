#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gkmchar/errors.hpp"
#include "gkmchar/qseries.hpp"
#include "gkmchar/rootdata.hpp"

using namespace gkmchar;

namespace {

// Naive integer convolution of prod_n (1 - q^n)^m, the reference for
// every eta-quotient appearing below.
std::vector<long> phi_power(int m, int N) {
    std::vector<long> f(static_cast<std::size_t>(N) + 1, 0);
    f[0] = 1;
    for (int rep = 0; rep < m; ++rep)
        for (int n = 1; n <= N; ++n)
            for (int i = N; i >= n; --i)
                f[static_cast<std::size_t>(i)] -= f[static_cast<std::size_t>(i - n)];
    return f;
}

QSeries sample_series(int rank, std::int64_t lo, std::int64_t hi, int seed) {
    QSeries f(rank, lo, hi);
    for (std::int64_t m = lo; m <= hi; ++m) {
        LaurentPoly c(rank);
        const std::int64_t v = (seed + 3 * m) % 5 - 2;
        if (v != 0) c.add_term(Weight(std::vector<std::int64_t>(rank, 2 * (m % 3))), Rat(v));
        f.set_coeff(m, c);
    }
    return f;
}

}  // namespace

TEST_CASE("window semantics: below is zero, above throws, bad windows rejected") {
    QSeries f(1, 2, 5);
    CHECK(f.coeff(1).is_zero());
    CHECK(f.coeff(-10).is_zero());
    CHECK_THROWS_AS((void)f.coeff(6), std::out_of_range);
    CHECK_THROWS_AS(f.set_coeff(6, LaurentPoly::zero(1)), std::out_of_range);
    CHECK_THROWS_AS(QSeries(1, 3, 2), std::invalid_argument);
    CHECK(QSeries::zero(1, 4).min_order() == 0);
    CHECK(QSeries::zero(1, -2).min_order() == -2);
}

TEST_CASE("addition truncates to the smaller window") {
    const QSeries a = sample_series(1, 0, 8, 1);
    const QSeries b = sample_series(1, -2, 5, 2);
    const QSeries s = a + b;
    CHECK(s.min_order() == -2);
    CHECK(s.truncation_order() == 5);
    for (std::int64_t m = -2; m <= 5; ++m) CHECK(s.coeff(m) == a.coeff(m) + b.coeff(m));
}

TEST_CASE("multiplication window matches the determined-order rule") {
    // With factors on [mu_a, N_a] and [mu_b, N_b], the product is fully
    // determined through min(N_a + min(mu_b,0), N_b + min(mu_a,0)).
    const QSeries a = sample_series(1, -1, 6, 3);
    const QSeries b = sample_series(1, 2, 7, 4);
    const QSeries p = a * b;
    CHECK(p.min_order() == 1);
    CHECK(p.truncation_order() == std::min<std::int64_t>(6 + 0, 7 + (-1)));
    // Spot-check one interior coefficient against the defining sum.
    const std::int64_t m = 4;
    LaurentPoly acc(1);
    for (std::int64_t i = -1; i <= 6; ++i) {
        const std::int64_t j = m - i;
        if (j < 2 || j > 7) continue;
        acc = acc + a.coeff(i) * b.coeff(j);
    }
    CHECK(p.coeff(m) == acc);
}

TEST_CASE("scaling, shifting, truncating") {
    const QSeries a = sample_series(2, 0, 6, 5);
    CHECK(a.scaled(make_rat(2, 3)).scaled(make_rat(3, 2)).equals_through_common_order(a));
    const QSeries sh = a.shifted(3);
    CHECK(sh.min_order() == 3);
    CHECK(sh.truncation_order() == 9);
    CHECK(sh.coeff(5) == a.coeff(2));
    CHECK(a.truncated(4).truncation_order() == 4);
    CHECK_THROWS_AS((void)a.truncated(7), std::out_of_range);
    const LaurentPoly z2 = LaurentPoly::monomial(Weight({2, 0}));
    CHECK(a.scaled_laurent(z2).coeff(3) == a.coeff(3) * z2);
}

TEST_CASE("min_nonzero_order and equality through common windows") {
    QSeries f(1, -3, 4);
    CHECK_FALSE(f.min_nonzero_order().has_value());
    CHECK(f.is_zero());
    f.set_coeff(1, LaurentPoly::constant(1, Rat(2)));
    CHECK(f.min_nonzero_order() == 1);
    const QSeries g = f.truncated(2);
    CHECK(f.equals_through_common_order(g));
}

TEST_CASE("euler factor squared matches naive convolution and inverts") {
    const int N = 12;
    const QSeries phi2 = euler_phi_squared(1, N);
    const auto expect = phi_power(2, N);
    for (int m = 0; m <= N; ++m) {
        const Rat want(expect[static_cast<std::size_t>(m)]);
        CHECK(phi2.coeff(m) == (want == 0 ? LaurentPoly::zero(1)
                                          : LaurentPoly::constant(1, want)));
    }
    const QSeries inv = inverse_phi_squared(1, N);
    const QSeries prod = phi2 * inv;
    CHECK(prod.coeff(0) == LaurentPoly::constant(1, Rat(1)));
    for (int m = 1; m <= N; ++m) CHECK(prod.coeff(m).is_zero());
}

TEST_CASE("sigma: leading term, first order, oddness") {
    const RootSystem rs = build_root_system(CartanType::parse("A1"));
    const Weight alpha = rs.positive[0].weight;
    const QSeries s = sigma(alpha, 6);
    CHECK(s.min_order() == 0);
    CHECK(s.coeff(0).to_string() == "z - z^-1");
    CHECK(s.coeff(1).to_string() == "-z^3 + 3 z - 3 z^-1 + z^-3");

    // sigma is odd: negating the weight negates the series, and the
    // nontrivial Weyl element does exactly that.
    const QSeries sneg = sigma(-alpha, 6);
    const WeylElement flip = rs.simple_reflections[0];
    for (int m = 0; m <= 6; ++m) {
        CHECK(sneg.coeff(m) == -s.coeff(m));
        CHECK(weyl_act(flip, s.coeff(m)) == sneg.coeff(m));
    }

    CHECK_THROWS_AS((void)sigma(Weight::zero(1), 4), std::invalid_argument);
    CHECK_THROWS_AS((void)sigma(Weight({1}), 4), std::invalid_argument);
}

TEST_CASE("elliptic Euler class: ordered product, serial equals parallel") {
    const RootSystem rs = build_root_system(CartanType::parse("A2"));
    const EqualRankPair p = EqualRankPair::make(rs, {});
    const std::vector<Weight> tangent = p.tangent_weights();
    const QSeries par = elliptic_euler(2, tangent, 8, ExecMode::openmp);
    const QSeries ser = elliptic_euler(2, tangent, 8, ExecMode::serial);
    CHECK(par.equals_through_common_order(ser));

    // Order-zero term: up to the global sign (-1)^{#tangent}, the product
    // of the half-weight differences, i.e. the signed rho-orbit sum.
    LaurentPoly denom = LaurentPoly::constant(2, Rat(1));
    for (const Weight& a : tangent) {
        LaurentPoly d(2);
        d.add_term(a.half(), Rat(1));
        d.add_term(-a.half(), Rat(-1));
        denom = denom * d;
    }
    if (tangent.size() % 2 != 0) denom = -denom;
    CHECK(par.coeff(0) == denom);
}

TEST_CASE("series division: round trip, leading validation, failure order") {
    const RootSystem rs = build_root_system(CartanType::parse("A1"));
    const Weight alpha = rs.positive[0].weight;
    const QSeries g = sigma(alpha, 8);
    FactoredLaurent lead = FactoredLaurent::half_difference(alpha);
    const QSeries f = sample_series(1, 0, 8, 6);
    const QSeries q = qs_divide(f * g, g, lead);
    CHECK(q.equals_through_common_order(f));

    // Leading-coefficient mismatch is rejected up front.
    FactoredLaurent wrong = lead;
    wrong.scalar = wrong.scalar * 2;
    CHECK_THROWS_AS((void)qs_divide(f * g, g, wrong), std::invalid_argument);

    // 1 / sigma is not a Laurent-coefficient series; the error reports
    // the first failing q-order.
    try {
        (void)qs_divide(QSeries::constant(1, Rat(1), 4), g, lead);
        FAIL("expected NotDivisibleError");
    } catch (const NotDivisibleError& e) {
        CHECK(e.order == 0);
    }
}

TEST_CASE("division ignores stored leading zeros when sizing the window") {
    // Numerator stored on [-2, 6] but actually starting at order 0 must
    // still produce a quotient determined through order 6.
    const RootSystem rs = build_root_system(CartanType::parse("A1"));
    const Weight alpha = rs.positive[0].weight;
    const QSeries g = sigma(alpha, 6);
    QSeries f(1, 0, 6);
    for (std::int64_t m = 0; m <= 6; ++m)
        f.set_coeff(m, LaurentPoly::constant(1, Rat(m + 1)));
    const QSeries tight = f * g;  // window [0, 6]
    QSeries num(1, -2, 6);        // same content behind two stored zeros
    for (std::int64_t m = 0; m <= 6; ++m) num.set_coeff(m, tight.coeff(m));
    const QSeries q = qs_divide(num, g, FactoredLaurent::half_difference(alpha));
    CHECK(q.truncation_order() == 6);
    CHECK(q.min_order() == 0);
    CHECK(q.equals_through_common_order(f));
}

TEST_CASE("weyl_act maps series coefficientwise") {
    const RootSystem rs = build_root_system(CartanType::parse("A2"));
    const WeylElement& s1 = rs.simple_reflections[0];
    const QSeries f = sample_series(2, -1, 5, 7);
    const QSeries g = weyl_act(s1, f);
    CHECK(g.min_order() == f.min_order());
    CHECK(g.truncation_order() == f.truncation_order());
    for (std::int64_t m = -1; m <= 5; ++m) CHECK(g.coeff(m) == weyl_act(s1, f.coeff(m)));
}

TEST_CASE("factored Laurent expansion and exact division") {
    const RootSystem rs = build_root_system(CartanType::parse("A2"));
    FactoredLaurent fac = FactoredLaurent::one(2);
    for (const Root& a : rs.positive) fac = fac * FactoredLaurent::half_difference(a.weight);
    const LaurentPoly expanded = fac.expand();
    // Dividing the expansion by the factored form gives exactly 1.
    CHECK(fac.divide_into(expanded) == LaurentPoly::constant(2, Rat(1)));
    CHECK_THROWS_AS((void)fac.divide_into(LaurentPoly::constant(2, Rat(1))),
                    NotDivisibleError);
}
