#include "gkmchar/localize.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gkmchar {

namespace {

bool lex_positive(const Weight& w) {
    for (std::int64_t c : w.coords) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;  // zero (never a tangent weight)
}

// gamma and whether the input had to be negated to become canonical.
std::pair<Weight, bool> canonical_sign(const Weight& w) {
    if (lex_positive(w)) return {w, false};
    return {-w, true};
}

}  // namespace

EulerData euler_data(const MomentGraph& g, Theory theory) {
    EulerData e;
    e.theory = theory;
    const std::vector<Weight> tangent = g.pair.tangent_weights();
    e.factors.reserve(g.num_vertices());
    for (const WeylElement& w : g.vertices) {
        std::vector<Weight> f;
        f.reserve(tangent.size());
        for (const Weight& a : tangent) f.push_back(w.apply(a));
        std::sort(f.begin(), f.end());
        e.factors.push_back(std::move(f));
    }
    return e;
}

LaurentPoly euler_class_k(const EulerData& e, std::size_t vertex) {
    const std::vector<Weight>& f = e.factors.at(vertex);
    if (f.empty()) throw std::invalid_argument("euler_class_k: empty factor list");
    const int rank = f.front().rank();
    LaurentPoly acc = LaurentPoly::constant(rank, Rat(1));
    const LaurentPoly one = LaurentPoly::constant(rank, Rat(1));
    for (const Weight& a : f) acc = acc * (one - LaurentPoly::monomial(a));
    return acc;
}

Poly euler_class_h(const EulerData& e, std::size_t vertex) {
    const std::vector<Weight>& f = e.factors.at(vertex);
    if (f.empty()) throw std::invalid_argument("euler_class_h: empty factor list");
    const int rank = f.front().rank();
    Poly acc = Poly::constant(rank, Rat(1));
    for (const Weight& a : f) acc = acc * Poly::linear_form(a);
    return acc;
}

QSeries euler_class_ell(const EulerData& e, std::size_t vertex, std::int64_t order,
                        ExecMode mode) {
    const std::vector<Weight>& f = e.factors.at(vertex);
    if (f.empty()) throw std::invalid_argument("euler_class_ell: empty factor list");
    return elliptic_euler(f.front().rank(), f, order, mode);
}

LaurentPoly pushforward_k(const MomentGraph& g, const GKMSection& s, const EulerData& e,
                          bool validate, ExecMode mode) {
    if (s.theory != Theory::ktheory || e.theory != Theory::ktheory)
        throw std::invalid_argument("pushforward_k: wants K-theory section and Euler data");
    if (s.k_values.size() != g.num_vertices() || e.factors.size() != g.num_vertices())
        throw std::invalid_argument("pushforward_k: size mismatch");
    if (validate) {
        const GKMCheckResult chk = check_gkm(g, s, mode);
        if (!chk.ok)
            throw InvalidSectionError("pushforward_k: tuple fails the edge criterion",
                                      static_cast<int>(chk.failing_edge.value()));
    }
    const int rank = g.pair.ambient.rank();

    // Collapsed common denominator: one sign-canonical binomial per
    // distinct tangent-weight line over all fixed points.
    std::set<Weight> union_gammas;
    for (const auto& f : e.factors)
        for (const Weight& a : f) union_gammas.insert(canonical_sign(a).first);

    const LaurentPoly one = LaurentPoly::constant(rank, Rat(1));
    LaurentPoly full_den = one;
    for (const Weight& gmm : union_gammas)
        full_den = full_den * (one - LaurentPoly::monomial(gmm));

    std::vector<LaurentPoly> numer(g.num_vertices(), LaurentPoly::zero(rank));
    par::for_each_index(g.num_vertices(), mode, [&](std::size_t v) {
        // Divide the vertex's own canonical factors out of the common
        // denominator, and absorb each sign flip's unit
        // (1 - z^{-gamma}) = -z^{-gamma} (1 - z^{gamma}) as -z^{+gamma}
        // into the numerator.
        LaurentPoly q = full_den;
        Weight unit = Weight::zero(rank);
        int sign = 1;
        for (const Weight& a : e.factors[v]) {
            const auto [gmm, flipped] = canonical_sign(a);
            q = divide_exact_binomial(q, gmm);
            if (flipped) {
                sign = -sign;
                unit = unit + gmm;
            }
        }
        numer[v] = (s.k_values[v] * q).shifted(unit).scaled(Rat(sign));
    });

    LaurentPoly total = LaurentPoly::zero(rank);
    for (const LaurentPoly& n : numer) total = total + n;
    for (const Weight& gmm : union_gammas) total = divide_exact_binomial(total, gmm);
    return total;
}

Poly pushforward_h(const MomentGraph& g, const GKMSection& s, const EulerData& e,
                   bool validate, ExecMode mode) {
    if (s.theory != Theory::cohomology || e.theory != Theory::cohomology)
        throw std::invalid_argument("pushforward_h: wants cohomology section and Euler data");
    if (s.h_values.size() != g.num_vertices() || e.factors.size() != g.num_vertices())
        throw std::invalid_argument("pushforward_h: size mismatch");
    if (validate) {
        const GKMCheckResult chk = check_gkm(g, s, mode);
        if (!chk.ok)
            throw InvalidSectionError("pushforward_h: tuple fails the edge criterion",
                                      static_cast<int>(chk.failing_edge.value()));
    }
    const int rank = g.pair.ambient.rank();

    std::set<Weight> union_gammas;
    for (const auto& f : e.factors)
        for (const Weight& a : f) union_gammas.insert(canonical_sign(a).first);

    Poly full_den = Poly::constant(rank, Rat(1));
    for (const Weight& gmm : union_gammas) full_den = full_den * Poly::linear_form(gmm);

    std::vector<Poly> numer(g.num_vertices(), Poly::zero(rank));
    par::for_each_index(g.num_vertices(), mode, [&](std::size_t v) {
        Poly q = full_den;
        int sign = 1;
        for (const Weight& a : e.factors[v]) {
            const auto [gmm, flipped] = canonical_sign(a);
            q = poly_divide_exact_linear(q, Poly::linear_form(gmm));
            if (flipped) sign = -sign;  // linear form of -gamma = -(form of gamma)
        }
        numer[v] = (s.h_values[v] * q).scaled(Rat(sign));
    });

    Poly total = Poly::zero(rank);
    for (const Poly& n : numer) total = total + n;
    for (const Weight& gmm : union_gammas)
        total = poly_divide_exact_linear(total, Poly::linear_form(gmm));
    return total;
}

}  // namespace gkmchar
