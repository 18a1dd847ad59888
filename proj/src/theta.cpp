#include "gkmchar/theta.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "ratmat.hpp"

namespace gkmchar {

namespace {

std::int64_t rat_floor(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("rat_floor: out of int64 range");
    return q.get_si();
}

detail::RatMat gram_as_rat(const IntMat& g) {
    const int n = g.rows();
    detail::RatMat a(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(g.at(i, j));
    return a;
}

// The quadratic exponent m(x) = k phi(x) + lambda(x) written around its
// real minimizer: m(x) = sum_i d_i y_i^2 + C with y = L^T (x - v).
struct CompletedSquare {
    int r = 0;
    detail::LDL ldl;        // of (k/2) * gram
    std::vector<Rat> v;     // minimizer, k G v = -c
    Rat c_min;              // m(v)
};

CompletedSquare complete_square(const ThetaIndex& idx, const LevelForm& form) {
    const int r = form.gram.rows();
    if (idx.lambda.rank() != r) throw std::invalid_argument("theta: rank mismatch");
    if (!idx.lambda.is_integral())
        throw std::invalid_argument("theta: lambda must be integral: " + idx.lambda.to_string());
    if (idx.level < 1) throw std::invalid_argument("theta: level must be >= 1");

    CompletedSquare cs;
    cs.r = r;
    const Rat k(idx.level);
    detail::RatMat g = gram_as_rat(form.gram);

    // c_i = lambda(alpha^vee_i)
    std::vector<Rat> c(r, Rat(0));
    for (int i = 0; i < r; ++i) c[i] = Rat(idx.lambda.coords[static_cast<std::size_t>(i)], 2);

    detail::RatMat ginv = detail::rat_inverse(g);
    cs.v.assign(r, Rat(0));
    for (int i = 0; i < r; ++i) {
        Rat s(0);
        for (int j = 0; j < r; ++j) s += ginv[i][j] * c[j];
        cs.v[i] = -s / k;
    }

    // C = m(v) = (k/2) v^T G v + c^T v
    Rat quad(0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) quad += cs.v[i] * g[i][j] * cs.v[j];
    Rat lin(0);
    for (int i = 0; i < r; ++i) lin += c[i] * cs.v[i];
    cs.c_min = k / 2 * quad + lin;

    detail::RatMat a(r, std::vector<Rat>(r, Rat(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[i][j] = k / 2 * g[i][j];
    cs.ldl = detail::rat_ldl(a);
    return cs;
}

// Enumerates every lattice point with m(x) <= order below a fixed choice
// of the coordinates above depth.  Coordinates are chosen from the last
// to the first; at each depth the feasible x_i form an interval around
// the real center, and d_i y_i^2 grows strictly as x_i leaves it, so the
// two outward scans cannot stop early or miss a point.
template <typename Emit>
void scan_depth(const CompletedSquare& cs, std::int64_t order, int depth,
                std::vector<std::int64_t>& x, const Rat& sum_above, const Emit& emit) {
    if (depth < 0) {
        emit(x);
        return;
    }
    Rat t(0);
    for (int j = depth + 1; j < cs.r; ++j)
        t += cs.ldl.l[j][depth] * (Rat(x[static_cast<std::size_t>(j)]) - cs.v[static_cast<std::size_t>(j)]);
    const Rat budget = Rat(order) - cs.c_min - sum_above;
    const Rat center = cs.v[static_cast<std::size_t>(depth)] - t;
    const std::int64_t c0 = rat_floor(center);
    const Rat& d = cs.ldl.d[static_cast<std::size_t>(depth)];
    for (std::int64_t xi = c0;; --xi) {
        const Rat y = Rat(xi) - cs.v[static_cast<std::size_t>(depth)] + t;
        const Rat val = d * y * y;
        if (val > budget) break;
        x[static_cast<std::size_t>(depth)] = xi;
        scan_depth(cs, order, depth - 1, x, sum_above + val, emit);
    }
    for (std::int64_t xi = c0 + 1;; ++xi) {
        const Rat y = Rat(xi) - cs.v[static_cast<std::size_t>(depth)] + t;
        const Rat val = d * y * y;
        if (val > budget) break;
        x[static_cast<std::size_t>(depth)] = xi;
        scan_depth(cs, order, depth - 1, x, sum_above + val, emit);
    }
}

}  // namespace

std::int64_t theta_min_order_bound(const ThetaIndex& idx, const LevelForm& form) {
    return rat_floor(complete_square(idx, form).c_min);
}

QSeries theta_series(const ThetaIndex& idx, const LevelForm& form, std::int64_t order,
                     ExecMode mode) {
    if (order < 0) throw std::invalid_argument("theta_series: negative truncation order");
    const CompletedSquare cs = complete_square(idx, form);
    const int r = cs.r;
    const std::int64_t lo = rat_floor(cs.c_min);

    const auto emit_into = [&](QSeries& acc, const std::vector<std::int64_t>& xc) {
        const CorootVector cx{std::vector<std::int64_t>(xc.begin(), xc.end())};
        const std::int64_t m2 =
            2 * idx.level * form.phi(cx) + pairing_times2(idx.lambda, cx);
        if (m2 % 2 != 0) throw std::logic_error("theta_series: non-integral exponent");
        const std::int64_t m = m2 / 2;
        const Weight mu = form.sharp(cx) * idx.level + idx.lambda;
        acc.add_to_coeff(m, LaurentPoly::monomial(mu));
    };

    // Candidates for the outermost coordinate, found by the same outward
    // scan with nothing above them.
    std::vector<std::int64_t> top;
    {
        const int depth = r - 1;
        const Rat budget = Rat(order) - cs.c_min;
        const Rat center = cs.v[static_cast<std::size_t>(depth)];
        const std::int64_t c0 = rat_floor(center);
        const Rat& d = cs.ldl.d[static_cast<std::size_t>(depth)];
        for (std::int64_t xi = c0;; --xi) {
            const Rat y = Rat(xi) - center;
            if (d * y * y > budget) break;
            top.push_back(xi);
        }
        for (std::int64_t xi = c0 + 1;; ++xi) {
            const Rat y = Rat(xi) - center;
            if (d * y * y > budget) break;
            top.push_back(xi);
        }
    }

    std::vector<QSeries> partial(top.size(), QSeries(r, lo, order));
    par::for_each_index(top.size(), mode, [&](std::size_t i) {
        std::vector<std::int64_t> x(static_cast<std::size_t>(r), 0);
        const std::size_t depth = static_cast<std::size_t>(r - 1);
        x[depth] = top[i];
        const Rat y = Rat(top[i]) - cs.v[depth];
        const Rat val = cs.ldl.d[depth] * y * y;
        scan_depth(cs, order, r - 2, x, val,
                   [&](const std::vector<std::int64_t>& xc) { emit_into(partial[i], xc); });
    });

    QSeries acc(r, lo, order);
    for (const QSeries& p : partial) acc = acc + p;
    return acc;
}

namespace {

// Column-style Hermite normal form of a nonsingular integer matrix:
// integer column operations only, result lower triangular with positive
// diagonal and, below each diagonal entry, residues in [0, h_ii).
IntMat hnf_columns(IntMat m) {
    const int n = m.rows();
    for (int i = 0; i < n; ++i) {
        for (;;) {
            int best = -1;
            for (int j = i; j < n; ++j)
                if (m.at(i, j) != 0 &&
                    (best < 0 || std::llabs(m.at(i, j)) < std::llabs(m.at(i, best))))
                    best = j;
            if (best < 0) throw std::invalid_argument("hnf_columns: singular matrix");
            if (best != i)
                for (int rr = 0; rr < n; ++rr) std::swap(m.at(rr, i), m.at(rr, best));
            bool done = true;
            for (int j = i + 1; j < n; ++j) {
                if (m.at(i, j) == 0) continue;
                const std::int64_t q = floor_div(m.at(i, j), m.at(i, i));
                for (int rr = 0; rr < n; ++rr) m.at(rr, j) -= q * m.at(rr, i);
                if (m.at(i, j) != 0) done = false;
            }
            if (done) break;
        }
        if (m.at(i, i) < 0)
            for (int rr = 0; rr < n; ++rr) m.at(rr, i) = -m.at(rr, i);
        for (int j = 0; j < i; ++j) {
            const std::int64_t q = floor_div(m.at(i, j), m.at(i, i));
            if (q != 0)
                for (int rr = 0; rr < n; ++rr) m.at(rr, j) -= q * m.at(rr, i);
        }
    }
    return m;
}

IntMat scaled_gram_hnf(const LevelForm& form, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("theta representatives: level must be >= 1");
    const int n = form.gram.rows();
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = k * form.gram.at(i, j);
    return hnf_columns(m);
}

}  // namespace

std::vector<Weight> theta_representatives(const LevelForm& form, std::int64_t k) {
    const IntMat h = scaled_gram_hnf(form, k);
    const int n = h.rows();
    std::vector<Weight> reps;
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    for (;;) {
        reps.push_back(Weight::from_fundamental(v));
        int i = n - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] + 1 >= h.at(i, i)) {
            v[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++v[static_cast<std::size_t>(i)];
    }
    return reps;
}

Weight reduce_theta_weight(const LevelForm& form, std::int64_t k, const Weight& lambda) {
    if (!lambda.is_integral())
        throw std::invalid_argument("reduce_theta_weight: lambda must be integral");
    const IntMat h = scaled_gram_hnf(form, k);
    const int n = h.rows();
    if (lambda.rank() != n) throw std::invalid_argument("reduce_theta_weight: rank mismatch");
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lambda.coords[static_cast<std::size_t>(i)] / 2;
    for (int i = 0; i < n; ++i) {
        const std::int64_t q = floor_div(v[static_cast<std::size_t>(i)], h.at(i, i));
        if (q == 0) continue;
        for (int rr = i; rr < n; ++rr) v[static_cast<std::size_t>(rr)] -= q * h.at(rr, i);
    }
    return Weight::from_fundamental(v);
}

bool quasi_periodicity_check(const QSeries& f, std::int64_t k, const CorootVector& x,
                             const LevelForm& form) {
    if (k == 0) return true;
    const std::int64_t kphi2 = 2 * k * form.phi(x);
    const Weight shift = form.sharp(x) * k;  // k I#(x)
    const std::int64_t n = f.truncation_order();

    // coeff at (order, mu), treating everything below min_order as zero.
    const auto coeff_at = [&](std::int64_t order, const Weight& mu) -> Rat {
        if (order > n) throw std::logic_error("quasi_periodicity_check: order beyond window");
        return f.coeff(order).coeff(mu);
    };

    std::int64_t checked = 0;
    for (std::int64_t m = f.min_order(); m <= n; ++m) {
        for (const auto& [mu, c] : f.coeff(m).terms()) {
            // Forward partner of (m, mu): order m + mu(x) + k phi(x),
            // exponent mu + k I#(x).
            {
                const std::int64_t p2 = 2 * m + pairing_times2(mu, x) + kphi2;
                if (p2 % 2 != 0) return false;  // partner order fractional, coefficient zero
                const std::int64_t p = p2 / 2;
                if (p <= n) {
                    ++checked;
                    if (coeff_at(p, mu + shift) != c) return false;
                }
            }
            // Backward partner: (m, mu) is the forward partner of this pair.
            {
                const Weight mu_b = mu - shift;
                const std::int64_t p2 = 2 * m - pairing_times2(mu_b, x) - kphi2;
                if (p2 % 2 != 0) return false;
                const std::int64_t p = p2 / 2;
                if (p <= n) {
                    ++checked;
                    if (coeff_at(p, mu_b) != c) return false;
                }
            }
        }
    }
    if (checked == 0)
        throw EmptyWindowError(
            "quasi_periodicity_check: truncation window determines no coefficient pair");
    return true;
}

}  // namespace gkmchar
