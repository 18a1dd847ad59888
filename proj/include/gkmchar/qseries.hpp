#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkmchar/laurent.hpp"
#include "gkmchar/parallel.hpp"

namespace gkmchar {

// Truncated formal series in q with LaurentPoly coefficients: orders
// min_order()..truncation_order() are stored explicitly, orders below
// min_order are zero, orders above the truncation are unknown.
// min_order may be negative.
class QSeries {
public:
    QSeries(int rank, std::int64_t min_order, std::int64_t truncation_order);

    static QSeries zero(int rank, std::int64_t truncation_order);
    static QSeries constant(int rank, const Rat& c, std::int64_t truncation_order);
    static QSeries from_laurent(const LaurentPoly& f, std::int64_t truncation_order);

    int rank() const { return rank_; }
    std::int64_t min_order() const { return min_order_; }
    std::int64_t truncation_order() const { return trunc_; }

    // Zero below min_order; querying above the truncation order throws
    // std::out_of_range (that coefficient is not known, not zero).
    const LaurentPoly& coeff(std::int64_t order) const;
    void set_coeff(std::int64_t order, LaurentPoly value);  // within stored range
    void add_to_coeff(std::int64_t order, const LaurentPoly& value);

    std::optional<std::int64_t> min_nonzero_order() const;
    bool is_zero() const { return !min_nonzero_order().has_value(); }

    QSeries operator+(const QSeries& o) const;  // truncation = min of the two
    QSeries operator-(const QSeries& o) const;
    QSeries operator-() const;
    // Cauchy product.  Truncation is min(N_a, N_b), corrected downward by
    // negative min_orders (a factor known from q^{-m} can feed unknown
    // high-order terms of the other factor into low orders).
    QSeries operator*(const QSeries& o) const;
    QSeries scaled(const Rat& c) const;
    QSeries scaled_laurent(const LaurentPoly& f) const;  // exact per-order product
    QSeries shifted(std::int64_t orders) const;           // multiply by q^orders
    QSeries truncated(std::int64_t new_order) const;

    // Equality through order min(N_a, N_b) per the container convention.
    bool equals_through_common_order(const QSeries& o) const;

    std::string to_string() const;  // one "q^m: coeff" line per stored order

private:
    int rank_;
    std::int64_t min_order_;
    std::int64_t trunc_;
    std::vector<LaurentPoly> coeffs_;  // index i <-> order min_order_ + i
    LaurentPoly zero_;                 // returned for orders below min_order_
    void check_compatible(const QSeries& o) const;
};

QSeries weyl_act(const WeylElement& w, const QSeries& f);

// A Laurent polynomial kept in factored shape: scalar * z^monomial *
// prod (1 - z^beta).  Every series denominator we divide by has its
// lowest q-coefficient naturally in this shape, which is what makes the
// order-by-order division exact.
struct FactoredLaurent {
    int rank = 0;
    Rat scalar = Rat(1);
    Weight monomial;
    std::vector<Weight> binomials;  // each beta nonzero

    static FactoredLaurent one(int rank);
    // (z^{alpha/2} - z^{-alpha/2}) = -z^{-alpha/2} * (1 - z^alpha); alpha
    // must be integral so alpha/2 lies in the half-weight lattice.
    static FactoredLaurent half_difference(const Weight& alpha);
    FactoredLaurent operator*(const FactoredLaurent& o) const;

    LaurentPoly expand() const;
    // f / (scalar * z^monomial * prod(1 - z^beta)), each step exact.
    LaurentPoly divide_into(const LaurentPoly& f) const;
};

// phi(q) = prod_{n=1..N} (1-q^n)^2 truncated at order N.
QSeries euler_phi_squared(int rank, std::int64_t order);
// Multiplicative inverse of euler_phi_squared through order N.
QSeries inverse_phi_squared(int rank, std::int64_t order);

// Weierstrass sigma with z specialized along lambda:
//   (z^{lambda/2} - z^{-lambda/2}) prod (1-q^n z^lambda)(1-q^n z^-lambda) / (1-q^n)^2.
// lambda must be integral and nonzero.
QSeries sigma(const Weight& lambda, std::int64_t order);

// (-1)^n prod_i sigma(lambda_i), the signed product of sigma factors
// attached to a list of tangent weights.
QSeries elliptic_euler(int rank, const std::vector<Weight>& weights, std::int64_t order,
                       ExecMode mode = default_exec_mode());

// Exact series division num / den, solved order by order:
//   C_m = (num_{m + mu_D} - sum_{j < m} C_j D_{m + mu_D - j}) / D_{mu_D}
// with the leading denominator coefficient supplied in factored form.
// The result's truncation order is the largest order fully determined by
// the inputs; NotDivisibleError (with the failing q-order) if some
// Laurent division fails, EmptyWindowError if no order is determined.
QSeries qs_divide(const QSeries& num, const QSeries& den, const FactoredLaurent& den_leading);

}  // namespace gkmchar
