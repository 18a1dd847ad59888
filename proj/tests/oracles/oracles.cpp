#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace gkmchar::oracles {

namespace {

using RatMat = std::vector<std::vector<Rat>>;
using IVec = std::vector<std::int64_t>;

// Self-contained Gauss-Jordan inverse, kept separate from the library's
// rational linear algebra on purpose.
RatMat invert(const RootSystem& rs) {
    const int n = rs.rank();
    RatMat m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(2 * n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rat(rs.cartan.at(i, j));
        m[i][static_cast<std::size_t>(n + i)] = Rat(1);
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::runtime_error("oracle: singular Cartan matrix");
        std::swap(m[static_cast<std::size_t>(c)], m[static_cast<std::size_t>(p)]);
        const Rat inv_pivot = Rat(1) / m[c][c];
        for (int j = 0; j < 2 * n; ++j) m[c][j] *= inv_pivot;
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rat f = m[r][c];
            for (int j = 0; j < 2 * n; ++j)
                m[r][j] -= f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
        }
    }
    RatMat out(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = m[i][static_cast<std::size_t>(n + j)];
    return out;
}

std::int64_t rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("oracle: floor overflow");
    return q.get_si();
}

// Shared context: inverse Cartan, Gram matrix of the fundamental
// weights ((omega_i, omega_j) = d_i * Ainv[i][j]), and the positive
// roots in both simple-root and fundamental coordinates.
struct Context {
    int n;
    const RootSystem& rs;
    RatMat ainv;
    RatMat gram;
    std::vector<IVec> root_simple;
    std::vector<IVec> root_fund;

    explicit Context(const RootSystem& r) : n(r.rank()), rs(r), ainv(invert(r)) {
        gram.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                gram[i][j] = Rat(rs.symmetrizer[static_cast<std::size_t>(i)]) * ainv[i][j];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!(gram[i][j] == gram[j][i]))
                    throw std::runtime_error("oracle: Gram matrix not symmetric");
        for (const Root& a : rs.positive) {
            root_simple.push_back(a.simple_coords);
            IVec f(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    f[static_cast<std::size_t>(i)] +=
                        rs.cartan.at(i, j) * a.simple_coords[static_cast<std::size_t>(j)];
            root_fund.push_back(f);
        }
    }

    Rat ip(const IVec& u, const IVec& v) const {
        Rat s(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s += Rat(u[static_cast<std::size_t>(i)]) * gram[i][j] *
                     Rat(v[static_cast<std::size_t>(j)]);
        return s;
    }

    // Reflect into the dominant chamber; multiplicities are W-invariant.
    IVec dominant_rep(IVec f) const {
        for (;;) {
            int neg = -1;
            for (int i = 0; i < n; ++i)
                if (f[static_cast<std::size_t>(i)] < 0) {
                    neg = i;
                    break;
                }
            if (neg < 0) return f;
            const std::int64_t c = f[static_cast<std::size_t>(neg)];
            for (int i = 0; i < n; ++i)
                f[static_cast<std::size_t>(i)] -= c * rs.cartan.at(i, neg);
        }
    }

    std::set<IVec> orbit(const IVec& f0) const {
        std::set<IVec> seen{f0};
        std::vector<IVec> frontier{f0};
        while (!frontier.empty()) {
            std::vector<IVec> next;
            for (const IVec& f : frontier)
                for (int s = 0; s < n; ++s) {
                    IVec g = f;
                    const std::int64_t c = f[static_cast<std::size_t>(s)];
                    for (int i = 0; i < n; ++i)
                        g[static_cast<std::size_t>(i)] -= c * rs.cartan.at(i, s);
                    if (seen.insert(g).second) next.push_back(g);
                }
            frontier = std::move(next);
        }
        return seen;
    }
};

}  // namespace

LaurentPoly freudenthal_character(const RootSystem& rs, const IVec& lambda) {
    const Context cx(rs);
    const int n = cx.n;
    if (static_cast<int>(lambda.size()) != n)
        throw std::invalid_argument("oracle: lambda has wrong rank");
    for (std::int64_t c : lambda)
        if (c < 0) throw std::invalid_argument("oracle: lambda must be dominant");

    // Dominant weights mu = lambda - sum_i k_i alpha_i with k in the box
    // 0 <= k_i <= (Ainv * lambda)_i, keyed by k and ordered by height.
    IVec kmax(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        Rat b(0);
        for (int j = 0; j < n; ++j) b += cx.ainv[i][j] * Rat(lambda[static_cast<std::size_t>(j)]);
        kmax[static_cast<std::size_t>(i)] = std::max<std::int64_t>(0, rat_floor(b));
    }
    struct Candidate {
        IVec k;      // root-cone coordinates of lambda - mu
        IVec mu;     // fundamental coordinates
        std::int64_t height = 0;
    };
    std::vector<Candidate> cands;
    IVec k(static_cast<std::size_t>(n), 0);
    for (;;) {
        IVec mu = lambda;
        std::int64_t h = 0;
        for (int i = 0; i < n; ++i) {
            h += k[static_cast<std::size_t>(i)];
            for (int j = 0; j < n; ++j)
                mu[static_cast<std::size_t>(i)] -=
                    rs.cartan.at(i, j) * k[static_cast<std::size_t>(j)];
        }
        if (std::all_of(mu.begin(), mu.end(), [](std::int64_t c) { return c >= 0; }))
            cands.push_back({k, mu, h});
        int i = n - 1;
        while (i >= 0 && k[static_cast<std::size_t>(i)] == kmax[static_cast<std::size_t>(i)]) {
            k[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++k[static_cast<std::size_t>(i)];
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.height < b.height; });

    IVec rho(static_cast<std::size_t>(n), 1);
    const auto plus = [n](const IVec& a, const IVec& b) {
        IVec r(a);
        for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
        return r;
    };
    const Rat top = cx.ip(plus(lambda, rho), plus(lambda, rho));

    std::map<IVec, Rat> mult;  // dominant fundamental coords -> multiplicity
    const auto lookup = [&](const IVec& f) -> Rat {
        const auto it = mult.find(cx.dominant_rep(f));
        return it == mult.end() ? Rat(0) : it->second;
    };

    for (const Candidate& c : cands) {
        if (c.height == 0) {
            mult[c.mu] = Rat(1);
            continue;
        }
        Rat rhs(0);
        for (std::size_t a = 0; a < cx.root_simple.size(); ++a) {
            for (std::int64_t j = 1;; ++j) {
                bool inside = true;
                IVec nu = c.mu;
                for (int i = 0; i < n; ++i) {
                    const std::int64_t kk = c.k[static_cast<std::size_t>(i)] -
                                            j * cx.root_simple[a][static_cast<std::size_t>(i)];
                    if (kk < 0) inside = false;
                    nu[static_cast<std::size_t>(i)] +=
                        j * cx.root_fund[a][static_cast<std::size_t>(i)];
                }
                if (!inside) break;
                const Rat m = lookup(nu);
                if (m != 0) rhs += m * cx.ip(nu, cx.root_fund[a]);
            }
        }
        const Rat denom = top - cx.ip(plus(c.mu, rho), plus(c.mu, rho));
        if (denom == 0) throw std::runtime_error("oracle: vanishing Freudenthal denominator");
        const Rat m = Rat(2) * rhs / denom;
        if (m.get_den() != 1) throw std::runtime_error("oracle: non-integral multiplicity");
        if (m != 0) mult[c.mu] = m;
    }

    LaurentPoly chi(n);
    for (const auto& [mu, m] : mult)
        for (const IVec& f : cx.orbit(mu)) chi.add_term(Weight::from_fundamental(f), m);
    return chi;
}

std::int64_t weyl_dimension(const RootSystem& rs, const IVec& lambda) {
    const Context cx(rs);
    IVec lr(lambda);
    IVec rho(lambda.size(), 1);
    for (std::size_t i = 0; i < lr.size(); ++i) lr[i] += 1;
    Rat d(1);
    for (const IVec& a : cx.root_fund) d *= cx.ip(lr, a) / cx.ip(rho, a);
    if (d.get_den() != 1) throw std::runtime_error("oracle: non-integral dimension");
    if (!d.get_num().fits_slong_p()) throw std::overflow_error("oracle: dimension overflow");
    return d.get_num().get_si();
}

namespace {

LaurentPoly binomial_of(int rank, const Weight& a) {
    LaurentPoly r(rank);
    r.add_term(Weight::zero(rank), Rat(1));
    r.add_term(a, Rat(-1));
    return r;
}

}  // namespace

RationalSumK rational_sum_k(const std::vector<LaurentPoly>& values,
                            const std::vector<std::vector<Weight>>& denoms) {
    if (values.empty() || values.size() != denoms.size())
        throw std::invalid_argument("oracle: mismatched rational sum input");
    const int rank = values.front().rank();
    LaurentPoly den = LaurentPoly::constant(rank, Rat(1));
    for (const auto& d : denoms)
        for (const Weight& a : d) den = den * binomial_of(rank, a);
    LaurentPoly num(rank);
    for (std::size_t v = 0; v < values.size(); ++v) {
        LaurentPoly t = values[v];
        for (std::size_t u = 0; u < values.size(); ++u) {
            if (u == v) continue;
            for (const Weight& a : denoms[u]) t = t * binomial_of(rank, a);
        }
        num = num + t;
    }
    return {num, den};
}

RationalSumH rational_sum_h(const std::vector<Poly>& values,
                            const std::vector<std::vector<Weight>>& denoms) {
    if (values.empty() || values.size() != denoms.size())
        throw std::invalid_argument("oracle: mismatched rational sum input");
    const int rank = values.front().rank();
    Poly den = Poly::constant(rank, Rat(1));
    for (const auto& d : denoms)
        for (const Weight& a : d) den = den * Poly::linear_form(a);
    Poly num = Poly::zero(rank);
    for (std::size_t v = 0; v < values.size(); ++v) {
        Poly t = values[v];
        for (std::size_t u = 0; u < values.size(); ++u) {
            if (u == v) continue;
            for (const Weight& a : denoms[u]) t = t * Poly::linear_form(a);
        }
        num = num + t;
    }
    return {num, den};
}

}  // namespace gkmchar::oracles
