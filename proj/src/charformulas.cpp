#include "gkmchar/charformulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkmchar {

namespace {

// Beyond this many binomial factors the fully expanded common product
// gets large; the collapsed-denominator pushforward is equivalent and
// cheap, so big inputs take that route.
constexpr std::size_t kUncollapsedFactorLimit = 40;

void require_invariant(const EqualRankPair& p, const LaurentPoly& chi) {
    for (std::size_t idx : p.sub_simple) {
        const WeylElement s = p.ambient.element_from_matrix(reflection_matrix(p.ambient, idx));
        if (!(weyl_act(s, chi) == chi))
            throw std::invalid_argument("weyl_ind: character is not W_H-invariant");
    }
}

}  // namespace

LaurentPoly weyl_ind(const EqualRankPair& p, const LaurentPoly& chi, ExecMode mode) {
    const RootSystem& rs = p.ambient;
    if (chi.rank() != rs.rank()) throw std::invalid_argument("weyl_ind: rank mismatch");
    require_invariant(p, chi);

    const std::vector<WeylElement> reps = coset_representatives(p);
    const std::vector<Weight> tangent = p.tangent_weights();
    const std::size_t total_factors = reps.size() * tangent.size();

    if (total_factors > kUncollapsedFactorLimit) {
        const MomentGraph g = build_moment_graph(p);
        return pushforward_k(g, restrict_character(g, chi), euler_data(g, Theory::ktheory),
                             /*validate=*/false, mode);
    }

    // Per-vertex factor lists w(a).
    std::vector<std::vector<Weight>> factors(reps.size());
    for (std::size_t v = 0; v < reps.size(); ++v) {
        factors[v].reserve(tangent.size());
        for (const Weight& a : tangent) factors[v].push_back(reps[v].apply(a));
    }

    const int rank = rs.rank();
    const LaurentPoly one = LaurentPoly::constant(rank, Rat(1));
    LaurentPoly common = one;
    for (const auto& f : factors)
        for (const Weight& a : f) common = common * (one - LaurentPoly::monomial(a));

    std::vector<LaurentPoly> numer(reps.size(), LaurentPoly::zero(rank));
    par::for_each_index(reps.size(), mode, [&](std::size_t v) {
        LaurentPoly q = common;
        for (const Weight& a : factors[v]) q = divide_exact_binomial(q, a);
        numer[v] = weyl_act(reps[v], chi) * q;
    });

    LaurentPoly total = LaurentPoly::zero(rank);
    for (const LaurentPoly& n : numer) total = total + n;
    for (const auto& f : factors)
        for (const Weight& a : f) total = divide_exact_binomial(total, a);
    return total;
}

Poly cohomology_pushforward(const EqualRankPair& p, const Poly& f, ExecMode mode) {
    const RootSystem& rs = p.ambient;
    if (f.rank() != rs.rank()) throw std::invalid_argument("cohomology_pushforward: rank mismatch");
    for (std::size_t idx : p.sub_simple) {
        const WeylElement s = rs.element_from_matrix(reflection_matrix(rs, idx));
        if (!(weyl_act(s, f) == f))
            throw std::invalid_argument("cohomology_pushforward: input is not W_H-invariant");
    }

    const std::vector<WeylElement> reps = coset_representatives(p);
    const std::vector<Weight> tangent = p.tangent_weights();
    const int rank = rs.rank();

    if (p.is_torus()) {
        // Over the full Weyl group each w sends the negative roots to a
        // signed permutation of themselves with det(w) sign flips, so the
        // common denominator is the identity-vertex Euler class and the
        // numerator is the plain signed sum.
        std::vector<Poly> terms(reps.size(), Poly::zero(rank));
        par::for_each_index(reps.size(), mode, [&](std::size_t v) {
            terms[v] = weyl_act(reps[v], f).scaled(Rat(reps[v].det));
        });
        Poly total = Poly::zero(rank);
        for (const Poly& t : terms) total = total + t;
        for (const Weight& a : tangent)
            total = poly_divide_exact_linear(total, Poly::linear_form(a));
        return total;
    }

    // A proper subgroup does not permute the tangent weights, so the
    // vertex Euler classes are genuinely different polynomials; assemble
    // the sum over their full product and cancel it factor by factor.
    const std::size_t total_factors = reps.size() * tangent.size();
    if (total_factors > kUncollapsedFactorLimit) {
        const MomentGraph g = build_moment_graph(p);
        return pushforward_h(g, restrict_polynomial(g, f), euler_data(g, Theory::cohomology),
                             /*validate=*/false, mode);
    }

    std::vector<std::vector<Weight>> factors(reps.size());
    for (std::size_t v = 0; v < reps.size(); ++v) {
        factors[v].reserve(tangent.size());
        for (const Weight& a : tangent) factors[v].push_back(reps[v].apply(a));
    }
    Poly common = Poly::constant(rank, Rat(1));
    for (const auto& fl : factors)
        for (const Weight& a : fl) common = common * Poly::linear_form(a);

    std::vector<Poly> numer(reps.size(), Poly::zero(rank));
    par::for_each_index(reps.size(), mode, [&](std::size_t v) {
        Poly q = common;
        for (const Weight& a : factors[v]) q = poly_divide_exact_linear(q, Poly::linear_form(a));
        numer[v] = weyl_act(reps[v], f) * q;
    });
    Poly total = Poly::zero(rank);
    for (const Poly& n : numer) total = total + n;
    for (const auto& fl : factors)
        for (const Weight& a : fl) total = poly_divide_exact_linear(total, Poly::linear_form(a));
    return total;
}

QSeries kac_ind(const EqualRankPair& p, const QSeries& f, std::int64_t target_order,
                ExecMode mode) {
    const RootSystem& rs = p.ambient;
    if (f.rank() != rs.rank()) throw std::invalid_argument("kac_ind: rank mismatch");
    if (!p.is_torus())
        throw std::invalid_argument(
            "kac_ind: only H = T is supported; a proper subgroup does not permute the "
            "tangent weights, so the signed sum over one Euler class does not apply");

    const std::vector<WeylElement> reps = coset_representatives(p);
    std::vector<QSeries> terms(reps.size(), QSeries::zero(rs.rank(), f.truncation_order()));
    par::for_each_index(reps.size(), mode, [&](std::size_t v) {
        terms[v] = weyl_act(reps[v], f).scaled(Rat(reps[v].det));
    });
    QSeries num = QSeries(rs.rank(), f.min_order(), f.truncation_order());
    for (const QSeries& t : terms) num = num + t;

    const auto mu_n = num.min_nonzero_order();
    if (!mu_n) {
        // Zero numerator: the induction is zero through everything f determines.
        return QSeries::zero(rs.rank(), std::min(target_order, f.truncation_order()));
    }

    // Denominator: the signed product of sigma factors over the tangent
    // weights.  Its q^0 coefficient in factored shape feeds the exact
    // order-by-order division; extend its truncation so every numerator
    // order through f's truncation is fully determined.
    const std::vector<Weight> tangent = p.tangent_weights();
    const std::int64_t n_e = f.truncation_order() - std::min<std::int64_t>(*mu_n, 0);
    const QSeries den = elliptic_euler(rs.rank(), tangent, n_e, mode);

    FactoredLaurent lead = FactoredLaurent::one(rs.rank());
    for (const Weight& a : tangent) lead = lead * FactoredLaurent::half_difference(a);
    if (tangent.size() % 2 != 0) lead.scalar = -lead.scalar;

    QSeries out = qs_divide(num, den, lead);
    if (target_order < out.truncation_order())
        out = out.truncated(std::max(target_order, out.min_order()));
    return out;
}

KacCharacter kac_basis_ind(const EqualRankPair& p, std::int64_t k, const Weight& lambda,
                           const LevelForm& form, std::int64_t target_order, ExecMode mode) {
    if (!p.is_torus())
        throw std::invalid_argument("kac_basis_ind: the theta basis route needs H = T");
    if (k < 0) throw std::invalid_argument("kac_basis_ind: negative level");
    const std::int64_t shifted_level = k + form.dual_coxeter;
    const ThetaIndex idx{shifted_level, lambda};
    const QSeries theta = theta_series(idx, form, target_order, mode);

    KacCharacter out{kac_ind(p, theta, target_order, mode), k, p.ambient.rho};
    return out;
}

LaurentPoly weyl_denominator_sum(const RootSystem& rs) {
    LaurentPoly acc = LaurentPoly::zero(rs.rank());
    for (const WeylElement& w : weyl_group(rs))
        acc.add_term(w.apply(rs.rho), Rat(w.det));
    return acc;
}

LaurentPoly weyl_denominator_product(const RootSystem& rs) {
    LaurentPoly acc = LaurentPoly::constant(rs.rank(), Rat(1));
    for (const Root& r : rs.positive) {
        const Weight h = r.weight.half();
        acc = acc * (LaurentPoly::monomial(h) - LaurentPoly::monomial(-h));
    }
    return acc;
}

}  // namespace gkmchar
