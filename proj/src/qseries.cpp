#include "gkmchar/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkmchar {

QSeries::QSeries(int rank, std::int64_t min_order, std::int64_t truncation_order)
    : rank_(rank), min_order_(min_order), trunc_(truncation_order), zero_(rank) {
    if (truncation_order < min_order)
        throw std::invalid_argument("QSeries: truncation below min_order");
    coeffs_.assign(static_cast<std::size_t>(trunc_ - min_order_ + 1), LaurentPoly(rank));
}

QSeries QSeries::zero(int rank, std::int64_t truncation_order) {
    return QSeries(rank, std::min<std::int64_t>(0, truncation_order), truncation_order);
}

QSeries QSeries::constant(int rank, const Rat& c, std::int64_t truncation_order) {
    QSeries s = zero(rank, truncation_order);
    s.add_to_coeff(0, LaurentPoly::constant(rank, c));
    return s;
}

QSeries QSeries::from_laurent(const LaurentPoly& f, std::int64_t truncation_order) {
    QSeries s = zero(f.rank(), truncation_order);
    s.set_coeff(0, f);
    return s;
}

const LaurentPoly& QSeries::coeff(std::int64_t order) const {
    if (order > trunc_)
        throw std::out_of_range("QSeries::coeff: order beyond truncation");
    if (order < min_order_) return zero_;
    return coeffs_[static_cast<std::size_t>(order - min_order_)];
}

void QSeries::set_coeff(std::int64_t order, LaurentPoly value) {
    if (order < min_order_ || order > trunc_)
        throw std::out_of_range("QSeries::set_coeff: order outside stored range");
    if (value.rank() != rank_) throw std::invalid_argument("QSeries::set_coeff: rank mismatch");
    coeffs_[static_cast<std::size_t>(order - min_order_)] = std::move(value);
}

void QSeries::add_to_coeff(std::int64_t order, const LaurentPoly& value) {
    if (order < min_order_ || order > trunc_)
        throw std::out_of_range("QSeries::add_to_coeff: order outside stored range");
    auto& slot = coeffs_[static_cast<std::size_t>(order - min_order_)];
    slot = slot + value;
}

std::optional<std::int64_t> QSeries::min_nonzero_order() const {
    for (std::int64_t m = min_order_; m <= trunc_; ++m)
        if (!coeff(m).is_zero()) return m;
    return std::nullopt;
}

void QSeries::check_compatible(const QSeries& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("QSeries: rank mismatch");
}

QSeries QSeries::operator+(const QSeries& o) const {
    check_compatible(o);
    const std::int64_t mo = std::min(min_order_, o.min_order_);
    const std::int64_t tr = std::min(trunc_, o.trunc_);
    if (tr < mo) throw EmptyWindowError("QSeries::operator+: empty result window");
    QSeries r(rank_, mo, tr);
    for (std::int64_t m = mo; m <= tr; ++m) r.set_coeff(m, coeff(m) + o.coeff(m));
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator-() const {
    QSeries r(rank_, min_order_, trunc_);
    for (std::int64_t m = min_order_; m <= trunc_; ++m) r.set_coeff(m, -coeff(m));
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    check_compatible(o);
    const std::int64_t mo = min_order_ + o.min_order_;
    // A factor only known from order mu < 0 upward caps how far the
    // product is determined: unknown high orders of the other factor
    // would otherwise leak into orders below min(N_a, N_b).
    const std::int64_t tr = std::min(trunc_ + std::min<std::int64_t>(o.min_order_, 0),
                                     o.trunc_ + std::min<std::int64_t>(min_order_, 0));
    if (tr < mo) throw EmptyWindowError("QSeries::operator*: empty result window");
    QSeries r(rank_, mo, tr);
    for (std::int64_t i = min_order_; i <= trunc_; ++i) {
        const LaurentPoly& a = coeff(i);
        if (a.is_zero()) continue;
        for (std::int64_t j = o.min_order_; j <= o.trunc_ && i + j <= tr; ++j) {
            const LaurentPoly& b = o.coeff(j);
            if (b.is_zero()) continue;
            r.add_to_coeff(i + j, a * b);
        }
    }
    return r;
}

QSeries QSeries::scaled(const Rat& c) const {
    QSeries r(rank_, min_order_, trunc_);
    for (std::int64_t m = min_order_; m <= trunc_; ++m) r.set_coeff(m, coeff(m).scaled(c));
    return r;
}

QSeries QSeries::scaled_laurent(const LaurentPoly& f) const {
    QSeries r(rank_, min_order_, trunc_);
    for (std::int64_t m = min_order_; m <= trunc_; ++m) r.set_coeff(m, coeff(m) * f);
    return r;
}

QSeries QSeries::shifted(std::int64_t orders) const {
    QSeries r(rank_, min_order_ + orders, trunc_ + orders);
    for (std::int64_t m = min_order_; m <= trunc_; ++m) r.set_coeff(m + orders, coeff(m));
    return r;
}

QSeries QSeries::truncated(std::int64_t new_order) const {
    if (new_order > trunc_)
        throw std::out_of_range("QSeries::truncated: cannot extend a truncated series");
    if (new_order < min_order_)
        throw std::out_of_range("QSeries::truncated: truncation below min_order");
    QSeries r(rank_, min_order_, new_order);
    for (std::int64_t m = min_order_; m <= new_order; ++m) r.set_coeff(m, coeff(m));
    return r;
}

bool QSeries::equals_through_common_order(const QSeries& o) const {
    if (rank_ != o.rank_) return false;
    const std::int64_t hi = std::min(trunc_, o.trunc_);
    for (std::int64_t m = std::min(min_order_, o.min_order_); m <= hi; ++m)
        if (!(coeff(m) == o.coeff(m))) return false;
    return true;
}

std::string QSeries::to_string() const {
    std::string out;
    for (std::int64_t m = min_order_; m <= trunc_; ++m) {
        if (coeff(m).is_zero()) continue;
        if (!out.empty()) out += "\n";
        out += "q^" + std::to_string(m) + ": " + coeff(m).to_string();
    }
    if (out.empty()) return "0";
    return out;
}

QSeries weyl_act(const WeylElement& w, const QSeries& f) {
    QSeries r(f.rank(), f.min_order(), f.truncation_order());
    for (std::int64_t m = f.min_order(); m <= f.truncation_order(); ++m)
        r.set_coeff(m, weyl_act(w, f.coeff(m)));
    return r;
}

FactoredLaurent FactoredLaurent::one(int rank) {
    FactoredLaurent f;
    f.rank = rank;
    f.monomial = Weight::zero(rank);
    return f;
}

FactoredLaurent FactoredLaurent::half_difference(const Weight& alpha) {
    if (!alpha.is_integral())
        throw std::invalid_argument("FactoredLaurent::half_difference: weight not integral");
    if (alpha.is_zero())
        throw std::invalid_argument("FactoredLaurent::half_difference: zero weight");
    FactoredLaurent f;
    f.rank = alpha.rank();
    f.scalar = Rat(-1);
    f.monomial = -alpha.half();
    f.binomials = {alpha};
    return f;
}

FactoredLaurent FactoredLaurent::operator*(const FactoredLaurent& o) const {
    if (rank != o.rank) throw std::invalid_argument("FactoredLaurent: rank mismatch");
    FactoredLaurent f;
    f.rank = rank;
    f.scalar = scalar * o.scalar;
    f.monomial = monomial + o.monomial;
    f.binomials = binomials;
    f.binomials.insert(f.binomials.end(), o.binomials.begin(), o.binomials.end());
    return f;
}

LaurentPoly FactoredLaurent::expand() const {
    LaurentPoly f = LaurentPoly::monomial(monomial, scalar);
    const LaurentPoly one = LaurentPoly::constant(rank, Rat(1));
    for (const Weight& b : binomials) f = f * (one - LaurentPoly::monomial(b));
    return f;
}

LaurentPoly FactoredLaurent::divide_into(const LaurentPoly& f) const {
    if (scalar == 0) throw std::invalid_argument("FactoredLaurent::divide_into: zero scalar");
    LaurentPoly g = f.scaled(1 / scalar).shifted(-monomial);
    for (const Weight& b : binomials) g = divide_exact_binomial(g, b);
    return g;
}

QSeries euler_phi_squared(int rank, std::int64_t order) {
    if (order < 0) throw std::invalid_argument("euler_phi_squared: negative order");
    QSeries acc = QSeries::constant(rank, Rat(1), order);
    const LaurentPoly one = LaurentPoly::constant(rank, Rat(1));
    for (std::int64_t n = 1; n <= order; ++n) {
        // multiply by (1 - q^n)^2 = 1 - 2 q^n + q^{2n}
        QSeries factor = QSeries::constant(rank, Rat(1), order);
        factor.add_to_coeff(n, LaurentPoly::constant(rank, Rat(-2)));
        if (2 * n <= order) factor.add_to_coeff(2 * n, one);
        acc = acc * factor;
    }
    return acc;
}

QSeries inverse_phi_squared(int rank, std::int64_t order) {
    return qs_divide(QSeries::constant(rank, Rat(1), order), euler_phi_squared(rank, order),
                     FactoredLaurent::one(rank));
}

QSeries sigma(const Weight& lambda, std::int64_t order) {
    if (lambda.is_zero()) throw std::invalid_argument("sigma: zero weight");
    if (!lambda.is_integral())
        throw std::invalid_argument("sigma: weight not integral: " + lambda.to_string());
    const int rank = lambda.rank();
    const Weight hl = lambda.half();
    LaurentPoly lead =
        LaurentPoly::monomial(hl) - LaurentPoly::monomial(-hl);
    QSeries acc = QSeries::from_laurent(lead, order);
    const LaurentPoly zp = LaurentPoly::monomial(lambda);
    const LaurentPoly zm = LaurentPoly::monomial(-lambda);
    for (std::int64_t n = 1; n <= order; ++n) {
        QSeries factor = QSeries::constant(rank, Rat(1), order);
        factor.add_to_coeff(n, -zp);
        QSeries factor2 = QSeries::constant(rank, Rat(1), order);
        factor2.add_to_coeff(n, -zm);
        acc = acc * factor * factor2;
    }
    return acc * inverse_phi_squared(rank, order);
}

QSeries elliptic_euler(int rank, const std::vector<Weight>& weights, std::int64_t order,
                       ExecMode mode) {
    std::vector<QSeries> factors(weights.size(), QSeries::zero(rank, order));
    par::for_each_index(weights.size(), mode,
                        [&](std::size_t i) { factors[i] = sigma(weights[i], order); });
    QSeries acc = QSeries::constant(rank, (weights.size() % 2) ? Rat(-1) : Rat(1), order);
    for (const QSeries& f : factors) acc = acc * f;
    return acc;
}

QSeries qs_divide(const QSeries& num, const QSeries& den, const FactoredLaurent& den_leading) {
    if (num.rank() != den.rank() || num.rank() != den_leading.rank)
        throw std::invalid_argument("qs_divide: rank mismatch");
    const auto mu_d_opt = den.min_nonzero_order();
    if (!mu_d_opt) throw std::invalid_argument("qs_divide: zero denominator");
    const std::int64_t mu_d = *mu_d_opt;
    if (!(den.coeff(mu_d) == den_leading.expand()))
        throw std::invalid_argument(
            "qs_divide: factored leading coefficient does not match the denominator");

    // The quotient's lowest order comes from the actual leading terms;
    // stored-but-zero orders below num's first nonzero one would only
    // shrink the window of fully determined output orders.
    const auto mu_n_opt = num.min_nonzero_order();
    if (!mu_n_opt) return QSeries::zero(num.rank(), num.truncation_order() - mu_d);
    const std::int64_t mu_c = *mu_n_opt - mu_d;
    // C_m needs num at m + mu_d and den through m + mu_d - mu_c.
    const std::int64_t n_c =
        std::min(num.truncation_order() - mu_d, den.truncation_order() + mu_c - mu_d);
    if (n_c < mu_c) throw EmptyWindowError("qs_divide: no fully determined output order");

    QSeries c(num.rank(), mu_c, n_c);
    for (std::int64_t m = mu_c; m <= n_c; ++m) {
        LaurentPoly t = num.coeff(m + mu_d);
        for (std::int64_t j = mu_c; j < m; ++j) {
            const LaurentPoly& cj = c.coeff(j);
            if (cj.is_zero()) continue;
            const LaurentPoly& dk = den.coeff(m + mu_d - j);
            if (dk.is_zero()) continue;
            t = t - cj * dk;
        }
        try {
            c.set_coeff(m, den_leading.divide_into(t));
        } catch (const NotDivisibleError& e) {
            throw NotDivisibleError(
                std::string("qs_divide: division failed at q-order ") + std::to_string(m) + ": " +
                    e.what(),
                e.witness_coords, static_cast<int>(m));
        }
    }
    return c;
}

}  // namespace gkmchar
