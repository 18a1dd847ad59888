#include "gkmchar/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkmchar {

namespace {

std::string format_coeff_mono(const Rat& c, const std::string& mono, bool first) {
    const bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    std::string body;
    if (mono.empty()) {
        body = rat_to_string(a);
    } else if (a == 1) {
        body = mono;
    } else {
        body = rat_to_string(a) + " " + mono;
    }
    if (first) return neg ? "-" + body : body;
    return (neg ? " - " : " + ") + body;
}

std::string power_string(const std::string& var, std::int64_t twice_exp) {
    // Exponent arrives doubled (half-weight coordinate); print in units
    // of the fundamental weights.
    if (twice_exp % 2 == 0) {
        const std::int64_t e = twice_exp / 2;
        if (e == 1) return var;
        return var + "^" + std::to_string(e);
    }
    return var + "^(" + std::to_string(twice_exp) + "/2)";
}

}  // namespace

LaurentPoly::LaurentPoly(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("LaurentPoly: negative rank");
}

LaurentPoly LaurentPoly::zero(int rank) { return LaurentPoly(rank); }

LaurentPoly LaurentPoly::constant(int rank, const Rat& c) {
    LaurentPoly f(rank);
    f.add_term(Weight::zero(rank), c);
    return f;
}

LaurentPoly LaurentPoly::monomial(const Weight& exponent, const Rat& c) {
    LaurentPoly f(exponent.rank());
    f.add_term(exponent, c);
    return f;
}

Rat LaurentPoly::coeff(const Weight& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(const Weight& exponent, const Rat& c) {
    if (exponent.rank() != rank_) throw std::invalid_argument("LaurentPoly::add_term: rank mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_rank(const LaurentPoly& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("LaurentPoly: rank mismatch");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_rank(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_rank(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, Rat(-c));
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_rank(o);
    LaurentPoly r(rank_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, Rat(ca * cb));
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly r(rank_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, Rat(v * c));
    return r;
}

LaurentPoly LaurentPoly::shifted(const Weight& exponent) const {
    LaurentPoly r(rank_);
    for (const auto& [e, v] : terms_) r.terms_.emplace(e + exponent, v);
    return r;
}

Rat LaurentPoly::evaluate_at_one() const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
}

bool LaurentPoly::has_integer_coeffs() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return is_integer(t.second); });
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono;
        for (int i = 0; i < rank_; ++i) {
            const std::int64_t c = it->first.coords[i];
            if (c == 0) continue;
            if (!mono.empty()) mono += " ";
            const std::string var = (rank_ == 1) ? "z" : "z" + std::to_string(i + 1);
            mono += power_string(var, c);
        }
        out += format_coeff_mono(it->second, mono, first);
        first = false;
    }
    return out;
}

LaurentPoly weyl_act(const WeylElement& w, const LaurentPoly& f) {
    LaurentPoly r(f.rank());
    for (const auto& [e, c] : f.terms()) r.add_term(w.apply(e), c);
    return r;
}

LaurentPoly divide_exact_binomial(const LaurentPoly& f, const Weight& alpha) {
    if (alpha.rank() != f.rank())
        throw std::invalid_argument("divide_exact_binomial: rank mismatch");
    if (alpha.is_zero()) throw std::invalid_argument("divide_exact_binomial: zero exponent");
    int pivot = -1;
    for (int i = 0; i < alpha.rank(); ++i)
        if (alpha.coords[i] != 0) {
            pivot = i;
            break;
        }
    // Split the support into fibers of the projection modulo Z*alpha; on
    // each fiber f = (1 - z^alpha) g reads f_t = g_t - g_{t-1}, so g is
    // the prefix sum and exact divisibility means the total sum is zero.
    std::map<Weight, std::map<std::int64_t, Rat>> fibers;
    for (const auto& [e, c] : f.terms()) {
        const std::int64_t t = floor_div(e.coords[pivot], alpha.coords[pivot]);
        fibers[e - alpha * t][t] = c;
    }
    LaurentPoly q(f.rank());
    for (const auto& [key, line] : fibers) {
        Rat prefix(0);
        auto it = line.begin();
        while (it != line.end()) {
            prefix += it->second;
            auto next = std::next(it);
            if (next == line.end()) {
                if (prefix != 0)
                    throw NotDivisibleError(
                        "divide_exact_binomial: fiber sum " + rat_to_string(prefix) +
                            " nonzero at fiber " + key.to_string(),
                        key.coords);
                break;
            }
            if (prefix != 0)
                for (std::int64_t t = it->first; t < next->first; ++t)
                    q.add_term(key + alpha * t, prefix);
            it = next;
        }
    }
    return q;
}

Poly::Poly(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("Poly: negative rank");
}

Poly Poly::zero(int rank) { return Poly(rank); }

Poly Poly::constant(int rank, const Rat& c) {
    Poly f(rank);
    f.add_term(std::vector<std::int64_t>(rank, 0), c);
    return f;
}

Poly Poly::variable(int rank, int index) {
    if (index < 0 || index >= rank) throw std::invalid_argument("Poly::variable: bad index");
    Poly f(rank);
    std::vector<std::int64_t> e(rank, 0);
    e[index] = 1;
    f.add_term(e, Rat(1));
    return f;
}

Poly Poly::linear_form(const Weight& w) {
    if (!w.is_integral())
        throw std::invalid_argument("Poly::linear_form: weight not integral: " + w.to_string());
    Poly f(w.rank());
    for (int i = 0; i < w.rank(); ++i) {
        if (w.coords[i] == 0) continue;
        std::vector<std::int64_t> e(w.rank(), 0);
        e[i] = 1;
        f.add_term(e, Rat(static_cast<long>(w.coords[i] / 2)));
    }
    return f;
}

Rat Poly::coeff(const std::vector<std::int64_t>& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const std::vector<std::int64_t>& exponent, const Rat& c) {
    if (static_cast<int>(exponent.size()) != rank_)
        throw std::invalid_argument("Poly::add_term: rank mismatch");
    for (auto e : exponent)
        if (e < 0) throw std::invalid_argument("Poly::add_term: negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_rank(const Poly& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("Poly: rank mismatch");
}

Poly Poly::operator+(const Poly& o) const {
    check_rank(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_rank(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, Rat(-c));
    return r;
}

Poly Poly::operator-() const {
    Poly r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_rank(o);
    Poly r(rank_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<std::int64_t> e(ea.size());
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, Rat(ca * cb));
        }
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(rank_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, Rat(v * c));
    return r;
}

std::int64_t Poly::total_degree() const {
    std::int64_t deg = -1;
    for (const auto& [e, c] : terms_) {
        std::int64_t d = 0;
        for (auto x : e) d += x;
        deg = std::max(deg, d);
    }
    return deg;
}

bool Poly::is_homogeneous() const {
    std::int64_t deg = -1;
    for (const auto& [e, c] : terms_) {
        std::int64_t d = 0;
        for (auto x : e) d += x;
        if (deg < 0) deg = d;
        else if (d != deg) return false;
    }
    return true;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono;
        for (int i = 0; i < rank_; ++i) {
            const std::int64_t e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += " ";
            const std::string var = (rank_ == 1) ? "x" : "x" + std::to_string(i + 1);
            mono += (e == 1) ? var : var + "^" + std::to_string(e);
        }
        out += format_coeff_mono(it->second, mono, first);
        first = false;
    }
    return out;
}

Poly weyl_act(const WeylElement& w, const Poly& f) {
    const int n = f.rank();
    // x_j is the j-th fundamental weight as a coordinate function, so it
    // maps to the linear form of w(omega_j): column j of the matrix.
    std::vector<Poly> images;
    images.reserve(n);
    for (int j = 0; j < n; ++j) {
        Poly lj(n);
        for (int k = 0; k < n; ++k) {
            if (w.matrix.at(k, j) == 0) continue;
            std::vector<std::int64_t> e(n, 0);
            e[k] = 1;
            lj.add_term(e, Rat(static_cast<long>(w.matrix.at(k, j))));
        }
        images.push_back(std::move(lj));
    }
    Poly r(n);
    for (const auto& [e, c] : f.terms()) {
        Poly term = Poly::constant(n, c);
        for (int j = 0; j < n; ++j)
            for (std::int64_t t = 0; t < e[j]; ++t) term = term * images[j];
        r = r + term;
    }
    return r;
}

Poly poly_divide_exact_linear(const Poly& f, const Poly& linear) {
    if (f.rank() != linear.rank())
        throw std::invalid_argument("poly_divide_exact_linear: rank mismatch");
    if (linear.is_zero() || linear.total_degree() != 1 || !linear.is_homogeneous())
        throw std::invalid_argument("poly_divide_exact_linear: divisor not a linear form");
    const int n = f.rank();
    int pivot = -1;
    Rat a(0);
    Poly rest(n);  // divisor minus its pivot part, free of the pivot variable
    for (const auto& [e, c] : linear.terms()) {
        int var = -1;
        for (int i = 0; i < n; ++i)
            if (e[i] == 1) var = i;
        if (pivot < 0) {
            pivot = var;
            a = c;
        } else {
            rest.add_term(e, c);
        }
    }
    if (f.is_zero()) return Poly::zero(n);

    // Layer f by pivot-variable degree.
    std::map<std::int64_t, Poly> layers;
    std::int64_t top = 0;
    for (const auto& [e, c] : f.terms()) {
        const std::int64_t i = e[static_cast<std::size_t>(pivot)];
        top = std::max(top, i);
        auto stripped = e;
        stripped[static_cast<std::size_t>(pivot)] = 0;
        auto [it, inserted] = layers.emplace(i, Poly(n));
        it->second.add_term(stripped, c);
    }
    auto layer = [&](std::int64_t i) -> Poly {
        auto it = layers.find(i);
        return it == layers.end() ? Poly::zero(n) : it->second;
    };

    // Top-down synthetic division in the pivot variable:
    //   f = sum F_i p^i,  divisor = a p + rest,  Q_{i-1} = (F_i - rest*Q_i)/a.
    std::map<std::int64_t, Poly> quotient_layers;
    Poly q_above = Poly::zero(n);
    for (std::int64_t i = top; i >= 1; --i) {
        Poly qi = (layer(i) - rest * q_above).scaled(1 / a);
        quotient_layers.emplace(i - 1, qi);
        q_above = std::move(qi);
    }
    const Poly remainder = layer(0) - rest * q_above;
    if (!remainder.is_zero())
        throw NotDivisibleError(
            "poly_divide_exact_linear: nonzero remainder " + remainder.to_string(),
            remainder.terms().begin()->first);

    Poly q(n);
    for (const auto& [i, qi] : quotient_layers)
        for (const auto& [e, c] : qi.terms()) {
            auto lifted = e;
            lifted[static_cast<std::size_t>(pivot)] = i;
            q.add_term(lifted, c);
        }
    return q;
}

}  // namespace gkmchar
