#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gkmchar/errors.hpp"
#include "gkmchar/rational.hpp"
#include "gkmchar/weight.hpp"

namespace gkmchar {

// Element of the group ring of the half-weight lattice: a finite map
// exponent -> rational coefficient with no stored zeros, so equality is
// structural.  Exponents use half-weight coordinates throughout, which
// makes z^{alpha/2} an honest monomial.
class LaurentPoly {
public:
    explicit LaurentPoly(int rank);

    static LaurentPoly zero(int rank);
    static LaurentPoly constant(int rank, const Rat& c);
    static LaurentPoly monomial(const Weight& exponent, const Rat& c = Rat(1));

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<Weight, Rat>& terms() const { return terms_; }
    Rat coeff(const Weight& exponent) const;

    // Adds c * z^exponent, erasing the term if the sum cancels.
    void add_term(const Weight& exponent, const Rat& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly shifted(const Weight& exponent) const;  // multiply by z^exponent
    bool operator==(const LaurentPoly& o) const = default;

    // Sum of coefficients = evaluation at z = 1 (dimension of a virtual
    // representation when the input is a character).
    Rat evaluate_at_one() const;

    bool has_integer_coeffs() const;

    // Terms in descending exponent order, exponents printed in units of
    // the fundamental weights (half-coordinates halved; odd halves are
    // rendered as (k/2)).  Rank 1 uses the variable z, higher ranks
    // z1..zr.
    std::string to_string() const;

private:
    int rank_;
    std::map<Weight, Rat> terms_;
    void check_rank(const LaurentPoly& o) const;
};

// Exponent-wise Weyl action, a ring automorphism.
LaurentPoly weyl_act(const WeylElement& w, const LaurentPoly& f);

// Exact division by (1 - z^alpha).  Exponents are projected onto fibers
// of the quotient lattice (half-weights mod Z*alpha); f is divisible iff
// every fiber-sum vanishes, and the quotient along each fiber is the
// prefix-sum telescope.  Throws NotDivisibleError carrying the offending
// fiber's base exponent.
LaurentPoly divide_exact_binomial(const LaurentPoly& f, const Weight& alpha);

// Polynomial ring on the Cartan algebra: a finite zero-free map from
// multi-degrees over the fundamental-weight coordinate functions x_i to
// rational coefficients.  This is where equivariant-cohomology sections
// live; weights become linear forms.
class Poly {
public:
    explicit Poly(int rank);

    static Poly zero(int rank);
    static Poly constant(int rank, const Rat& c);
    static Poly variable(int rank, int index);
    // The linear form of an integral weight: coords/2 in the x-basis.
    static Poly linear_form(const Weight& w);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<std::vector<std::int64_t>, Rat>& terms() const { return terms_; }
    Rat coeff(const std::vector<std::int64_t>& exponent) const;
    void add_term(const std::vector<std::int64_t>& exponent, const Rat& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& c) const;
    bool operator==(const Poly& o) const = default;

    std::int64_t total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    std::string to_string() const;      // variables x (rank 1) or x1..xr

private:
    int rank_;
    std::map<std::vector<std::int64_t>, Rat> terms_;
    void check_rank(const Poly& o) const;
};

// Substitutes x_j -> linear form of w(omega_j); intertwines linear_form
// with the Weyl action on weights.
Poly weyl_act(const WeylElement& w, const Poly& f);

// Exact division by a homogeneous linear form, by synthetic division
// along one variable with nonzero coefficient; nonzero remainder throws
// NotDivisibleError.
Poly poly_divide_exact_linear(const Poly& f, const Poly& linear);

}  // namespace gkmchar
