#include "gkmchar/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

#include "ratmat.hpp"

namespace gkmchar {

namespace {

[[noreturn]] void bad_type(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

CartanType CartanType::parse(const std::string& s) {
    if (s.empty()) bad_type("empty Cartan type");
    const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    Family f;
    switch (fam) {
        case 'A': f = Family::A; break;
        case 'B': f = Family::B; break;
        case 'C': f = Family::C; break;
        case 'D': f = Family::D; break;
        case 'G': f = Family::G2; break;
        default: bad_type("unknown Cartan family in '" + s + "'");
    }
    int rank = 0;
    if (s.size() == 1) {
        if (f == Family::G2) rank = 2;
        else bad_type("missing rank in Cartan type '" + s + "'");
    } else {
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                bad_type("malformed Cartan type '" + s + "'");
            rank = rank * 10 + (s[i] - '0');
            if (rank > 99) bad_type("rank out of range in '" + s + "'");
        }
    }
    return make(f, rank);
}

CartanType CartanType::make(Family f, int rank) {
    int min_rank = 1;
    switch (f) {
        case Family::A: min_rank = 1; break;
        case Family::B: min_rank = 2; break;
        case Family::C: min_rank = 2; break;
        case Family::D: min_rank = 3; break;
        case Family::G2:
            if (rank != 2) bad_type("G2 has rank 2");
            min_rank = 2;
            break;
    }
    if (rank < min_rank) bad_type("rank " + std::to_string(rank) + " too small for family");
    if (rank > 8) bad_type("rank " + std::to_string(rank) + " unsupported (max 8)");
    CartanType t;
    t.family = f;
    t.rank = rank;
    return t;
}

std::string CartanType::to_string() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(rank);
        case Family::B: return "B" + std::to_string(rank);
        case Family::C: return "C" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::G2: return "G2";
    }
    return "?";
}

namespace {

// Cartan matrix with the convention cartan.at(i, j) = <alpha_j, alpha_i^vee>,
// so column j holds the fundamental-weight coordinates of alpha_j.
IntMat cartan_matrix(const CartanType& t) {
    const int n = t.rank;
    IntMat a(n, n);
    for (int i = 0; i < n; ++i) a.at(i, i) = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            a.at(i, i + 1) = -1;
            a.at(i + 1, i) = -1;
        }
    };
    switch (t.family) {
        case Family::A:
            chain(n);
            break;
        case Family::B:
            chain(n);
            a.at(n - 1, n - 2) = -2;  // last simple root short
            break;
        case Family::C:
            chain(n);
            a.at(n - 2, n - 1) = -2;  // last simple root long
            break;
        case Family::D:
            chain(n - 1);
            a.at(n - 3, n - 1) = -1;
            a.at(n - 1, n - 3) = -1;
            break;
        case Family::G2:
            a.at(0, 1) = -3;  // alpha_1 short, alpha_2 long
            a.at(1, 0) = -1;
            break;
    }
    return a;
}

std::vector<std::int64_t> symmetrizer_for(const CartanType& t) {
    const int n = t.rank;
    std::vector<std::int64_t> d(n, 1);
    switch (t.family) {
        case Family::A:
        case Family::D:
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) d[i] = 2;  // long roots
            break;
        case Family::C:
            d[n - 1] = 2;  // long root
            break;
        case Family::G2:
            d[1] = 3;  // alpha_2 long
            break;
    }
    return d;
}

}  // namespace

bool RootSystem::is_simple() const {
    const int n = rank();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j)
            if (!seen[j] && cartan.at(i, j) != 0) {
                seen[j] = true;
                queue.push_back(j);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::optional<std::pair<std::size_t, int>> RootSystem::find_root(const Weight& w) const {
    auto it = root_index_.find(w.coords);
    if (it == root_index_.end()) return std::nullopt;
    return it->second;
}

int RootSystem::length_of(const IntMat& m) const {
    int count = 0;
    for (const Root& r : positive) {
        const Weight image(m.apply(r.weight.coords));
        auto hit = find_root(image);
        if (!hit) throw std::invalid_argument("length_of: matrix does not permute the roots");
        if (hit->second < 0) ++count;
    }
    return count;
}

WeylElement RootSystem::element_from_matrix(const IntMat& m) const {
    WeylElement w;
    w.matrix = m;
    const std::int64_t d = m.determinant();
    if (d != 1 && d != -1) throw std::invalid_argument("element_from_matrix: det not +-1");
    w.det = static_cast<int>(d);
    w.length = length_of(m);
    if (w.det != ((w.length % 2) ? -1 : 1))
        throw std::logic_error("element_from_matrix: det/length parity mismatch");
    return w;
}

WeylElement RootSystem::identity_element() const {
    WeylElement w;
    w.matrix = IntMat::identity(rank());
    w.det = 1;
    w.length = 0;
    return w;
}

WeylElement RootSystem::compose(const WeylElement& a, const WeylElement& b) const {
    return element_from_matrix(a.matrix * b.matrix);
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
    std::vector<int> word;
    IntMat m = w.matrix;
    int len = length_of(m);
    while (len > 0) {
        int chosen = -1;
        for (int i = 0; i < rank(); ++i) {
            // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0; test via the image
            // of alpha_i's negativity after left-multiplying by s_i.
            const IntMat cand = simple_reflections[i].matrix * m;
            if (length_of(cand) < len) {
                chosen = i;
                m = cand;
                --len;
                break;
            }
        }
        if (chosen < 0) throw std::logic_error("reduced_word: no descent found");
        word.push_back(chosen);
    }
    return word;
}

std::string RootSystem::word_string(const WeylElement& w) const {
    const std::vector<int> word = reduced_word(w);
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += " ";
        s += "s" + std::to_string(word[i] + 1);
    }
    return s;
}

Rat RootSystem::inner_product(const Weight& a, const Weight& b) const {
    const int n = rank();
    // (omega_i, omega_j) = (A^{-1})[j][i] * d_j; half-coordinates carry
    // an extra factor 1/4.
    detail::RatMat ar(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ar[i][j] = Rat(cartan.at(i, j));
    const detail::RatMat inv = detail::rat_inverse(ar);
    Rat acc(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            acc += Rat(a.coords[i]) * Rat(b.coords[j]) * inv[j][i] * Rat(symmetrizer[j]);
    return acc / 4;
}

RootSystem build_root_system(CartanType t) {
    RootSystem rs;
    rs.type = t;
    rs.cartan = cartan_matrix(t);
    rs.symmetrizer = symmetrizer_for(t);
    const int n = t.rank;

    // Sanity: integer symmetrizability d_i a_ij = d_j a_ji.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rs.symmetrizer[i] * rs.cartan.at(i, j) != rs.symmetrizer[j] * rs.cartan.at(j, i))
                throw std::logic_error("build_root_system: symmetrizer mismatch");

    // Simple reflection matrices on half-weight coordinates: column j of
    // s_i is e_j - a[j...]; only column i differs from the identity.
    rs.simple_reflections.resize(n);
    for (int i = 0; i < n; ++i) {
        IntMat m = IntMat::identity(n);
        for (int k = 0; k < n; ++k) m.at(k, i) -= rs.cartan.at(k, i);
        WeylElement w;
        w.matrix = m;
        w.det = -1;
        w.length = 1;
        rs.simple_reflections[i] = w;
    }

    // Orbit closure on (root, coroot) coordinate pairs.  The reflection
    // s_i changes only entry i on each side:
    //   root coords:    n_i' = n_i - sum_k a[i][k] n_k
    //   coroot coords:  m_i' = m_i - sum_k m_k a[k][i]
    using Pair = std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>;
    std::set<Pair> seen;
    std::deque<Pair> queue;
    for (int j = 0; j < n; ++j) {
        std::vector<std::int64_t> rc(n, 0), cc(n, 0);
        rc[j] = 1;
        cc[j] = 1;
        Pair p{rc, cc};
        seen.insert(p);
        queue.push_back(p);
    }
    while (!queue.empty()) {
        const Pair p = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            Pair q = p;
            std::int64_t pr = 0, pc = 0;
            for (int k = 0; k < n; ++k) {
                pr += rs.cartan.at(i, k) * p.first[k];
                pc += p.second[k] * rs.cartan.at(k, i);
            }
            q.first[i] -= pr;
            q.second[i] -= pc;
            if (seen.insert(q).second) queue.push_back(q);
        }
    }

    for (const Pair& p : seen) {
        const auto& rc = p.first;
        const bool nonneg = std::all_of(rc.begin(), rc.end(), [](std::int64_t c) { return c >= 0; });
        const bool nonpos = std::all_of(rc.begin(), rc.end(), [](std::int64_t c) { return c <= 0; });
        if (!nonneg && !nonpos)
            throw std::logic_error("build_root_system: mixed-sign root generated");
        if (!nonneg) continue;  // keep positives only
        Root r;
        r.simple_coords = rc;
        r.coroot = CorootVector(p.second);
        r.height = 0;
        for (auto c : rc) r.height += c;
        std::vector<std::int64_t> half(n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) half[i] += 2 * rs.cartan.at(i, k) * rc[k];
        r.weight = Weight(std::move(half));
        rs.positive.push_back(std::move(r));
    }

    std::sort(rs.positive.begin(), rs.positive.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.simple_coords < b.simple_coords;
    });

    for (std::size_t idx = 0; idx < rs.positive.size(); ++idx) {
        rs.root_index_[rs.positive[idx].weight.coords] = {idx, +1};
        rs.root_index_[(-rs.positive[idx].weight).coords] = {idx, -1};
    }

    Weight two_rho = Weight::zero(n);
    for (const Root& r : rs.positive) two_rho = two_rho + r.weight;
    rs.rho = two_rho.half();

    std::size_t best = 0;
    for (std::size_t idx = 1; idx < rs.positive.size(); ++idx)
        if (rs.positive[idx].height > rs.positive[best].height) best = idx;
    rs.highest_root_index = best;

    // Pairing consistency: <alpha_j, alpha_i^vee> through the stored
    // coordinates must reproduce the Cartan matrix.
    for (int i = 0; i < n; ++i) {
        const Root* simple_i = nullptr;
        for (const Root& r : rs.positive)
            if (r.height == 1 && r.simple_coords[i] == 1) simple_i = &r;
        if (!simple_i) throw std::logic_error("build_root_system: missing simple root");
        for (int j = 0; j < n; ++j) {
            const Root* simple_j = nullptr;
            for (const Root& r : rs.positive)
                if (r.height == 1 && r.simple_coords[j] == 1) simple_j = &r;
            if (pairing_times2(simple_j->weight, simple_i->coroot) != 2 * rs.cartan.at(i, j))
                throw std::logic_error("build_root_system: pairing/Cartan mismatch");
        }
    }

    return rs;
}

std::vector<WeylElement> weyl_group(const RootSystem& rs) {
    if (rs.rank() > 4)
        throw std::invalid_argument("weyl_group: rank > 4 enumeration not supported");
    struct Entry {
        IntMat m;
        int length;
    };
    std::set<IntMat> seen;
    std::deque<Entry> queue;
    std::vector<WeylElement> out;
    const IntMat id = IntMat::identity(rs.rank());
    seen.insert(id);
    queue.push_back({id, 0});
    while (!queue.empty()) {
        const Entry e = queue.front();
        queue.pop_front();
        WeylElement w;
        w.matrix = e.m;
        w.length = e.length;  // BFS layer = Coxeter length
        w.det = (e.length % 2) ? -1 : 1;
        out.push_back(w);
        for (const WeylElement& s : rs.simple_reflections) {
            IntMat next = s.matrix * e.m;
            if (seen.insert(next).second) queue.push_back({std::move(next), e.length + 1});
        }
    }
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.matrix < b.matrix;
    });
    return out;
}

std::int64_t weyl_order(const RootSystem& rs) {
    const int n = rs.rank();
    std::int64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    std::int64_t pow2 = 1;
    for (int i = 0; i < n; ++i) pow2 *= 2;
    switch (rs.type.family) {
        case Family::A: {
            std::int64_t f = 1;
            for (int i = 2; i <= n + 1; ++i) f *= i;
            return f;  // (n+1)!
        }
        case Family::B:
        case Family::C:
            return pow2 * fact;  // 2^n n!
        case Family::D:
            return pow2 / 2 * fact;  // 2^{n-1} n!
        case Family::G2:
            return 12;
    }
    throw std::logic_error("weyl_order: unknown family");
}

std::int64_t dual_coxeter_number(const RootSystem& rs) {
    if (!rs.is_simple()) throw std::invalid_argument("dual_coxeter_number: system not simple");
    const Root& theta = rs.highest_root();
    const Rat g = pairing(rs.rho, theta.coroot) + 1;
    return to_int64(g);
}

std::int64_t LevelForm::eval(const CorootVector& x, const CorootVector& y) const {
    std::int64_t acc = 0;
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j) acc += x.coords[i] * gram.at(i, j) * y.coords[j];
    return acc;
}

Weight LevelForm::sharp(const CorootVector& x) const {
    // pairing(sharp(x), y) = I(x, y) forces half-coords 2 * gram * x.
    std::vector<std::int64_t> c(gram.rows(), 0);
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j) c[i] += 2 * gram.at(i, j) * x.coords[j];
    return Weight(std::move(c));
}

std::int64_t LevelForm::phi(const CorootVector& x) const {
    const std::int64_t v = eval(x, x);
    if (v % 2 != 0) throw std::logic_error("LevelForm::phi: form not even");
    return v / 2;
}

LevelForm looijenga_form(const RootSystem& rs) {
    if (!rs.is_simple()) throw std::invalid_argument("looijenga_form: system not simple");
    const int n = rs.rank();
    // P[i][j] = sum over negative roots of <alpha, a_i^vee><alpha, a_j^vee>;
    // signs square away, so the sum over positive roots is identical.
    IntMat p(n, n);
    for (const Root& r : rs.positive) {
        // <alpha, a_i^vee> is the i-th fundamental coordinate of alpha.
        const Weight fc = r.weight.half();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p.at(i, j) += fc.coords[i] * fc.coords[j];
    }
    const std::int64_t g = dual_coxeter_number(rs);
    LevelForm form;
    form.dual_coxeter = g;
    form.gram = IntMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (p.at(i, j) % g != 0)
                throw std::logic_error("looijenga_form: Gram entry not divisible by g");
            form.gram.at(i, j) = p.at(i, j) / g;
        }
    for (int i = 0; i < n; ++i)
        if (form.gram.at(i, i) % 2 != 0) throw std::logic_error("looijenga_form: form not even");
    // W-invariance on generators: S^T G S = G with S the coroot-side
    // reflection matrix.
    for (const WeylElement& s : rs.simple_reflections) {
        const IntMat sc = s.matrix.inverse_unimodular().transpose();
        const IntMat conj = sc.transpose() * form.gram * sc;
        if (!(conj == form.gram)) throw std::logic_error("looijenga_form: not W-invariant");
    }
    return form;
}

IntMat reflection_matrix(const RootSystem& rs, std::size_t positive_index) {
    const Root& r = rs.positive[positive_index];
    const int n = rs.rank();
    const Weight a = r.weight.half();  // fundamental coords of alpha
    IntMat m = IntMat::identity(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) m.at(k, j) -= a.coords[k] * r.coroot.coords[j];
    return m;
}

EqualRankPair EqualRankPair::make(const RootSystem& rs, const std::vector<std::size_t>& sub) {
    EqualRankPair p;
    p.ambient = rs;
    p.sub_simple = sub;
    std::sort(p.sub_simple.begin(), p.sub_simple.end());
    for (std::size_t i = 0; i < p.sub_simple.size(); ++i) {
        if (p.sub_simple[i] >= rs.positive.size())
            throw std::invalid_argument("EqualRankPair: root index out of range");
        if (i > 0 && p.sub_simple[i] == p.sub_simple[i - 1])
            throw std::invalid_argument("EqualRankPair: duplicate root index");
    }
    // Simple-system condition: pairwise non-positive pairings.
    for (std::size_t i : p.sub_simple)
        for (std::size_t j : p.sub_simple) {
            if (i == j) continue;
            if (pairing_times2(rs.positive[i].weight, rs.positive[j].coroot) > 0)
                throw std::invalid_argument(
                    "EqualRankPair: chosen roots are not a simple system (positive pairing)");
        }

    // W_H = closure of the chosen reflections.
    std::set<IntMat> seen;
    std::deque<IntMat> queue;
    const IntMat id = IntMat::identity(rs.rank());
    seen.insert(id);
    queue.push_back(id);
    std::vector<IntMat> gens;
    for (std::size_t idx : p.sub_simple) gens.push_back(reflection_matrix(rs, idx));
    while (!queue.empty()) {
        const IntMat m = queue.front();
        queue.pop_front();
        for (const IntMat& gmat : gens) {
            IntMat next = gmat * m;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    for (const IntMat& m : seen) p.weyl_h.push_back(rs.element_from_matrix(m));
    std::sort(p.weyl_h.begin(), p.weyl_h.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.matrix < b.matrix;
    });

    // Roots of H: the W_H-orbit of the chosen simple system.
    p.h_root_mask_.assign(rs.positive.size(), false);
    for (const WeylElement& w : p.weyl_h)
        for (std::size_t idx : p.sub_simple) {
            const Weight image = w.apply(rs.positive[idx].weight);
            auto hit = rs.find_root(image);
            if (!hit) throw std::logic_error("EqualRankPair: H-orbit left the root system");
            p.h_root_mask_[hit->first] = true;
        }
    std::size_t h_count = 0;
    for (bool b : p.h_root_mask_)
        if (b) ++h_count;
    p.tangent_weights_count_ = rs.positive.size() - h_count;
    return p;
}

EqualRankPair EqualRankPair::from_simple_indices(const RootSystem& rs, const std::vector<int>& idx) {
    std::vector<std::size_t> sub;
    for (int j : idx) {
        if (j < 0 || j >= rs.rank())
            throw std::invalid_argument("EqualRankPair: simple-root index out of range");
        bool found = false;
        for (std::size_t t = 0; t < rs.positive.size(); ++t) {
            if (rs.positive[t].height != 1) continue;
            if (rs.positive[t].simple_coords[static_cast<std::size_t>(j)] == 1) {
                sub.push_back(t);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("EqualRankPair: simple root not found");
    }
    return make(rs, sub);
}

bool EqualRankPair::is_h_root(std::size_t positive_index) const {
    return h_root_mask_.at(positive_index);
}

std::vector<Weight> EqualRankPair::tangent_weights() const {
    // R = negative roots of G that are not roots of H, in the ambient
    // positive-root order.
    std::vector<Weight> out;
    for (std::size_t i = 0; i < ambient.positive.size(); ++i)
        if (!h_root_mask_[i]) out.push_back(-ambient.positive[i].weight);
    return out;
}

std::vector<WeylElement> coset_representatives(const EqualRankPair& p) {
    const std::vector<WeylElement> wg = weyl_group(p.ambient);
    std::set<std::vector<std::int64_t>> seen_cosets;
    std::vector<WeylElement> reps;
    for (const WeylElement& w : wg) {  // sorted by (length, matrix)
        // Canonical coset key: lexicographically least matrix in w W_H.
        std::vector<std::int64_t> key;
        bool first = true;
        for (const WeylElement& h : p.weyl_h) {
            const IntMat prod = w.matrix * h.matrix;
            if (first || prod.flat() < key) {
                key = prod.flat();
                first = false;
            }
        }
        if (seen_cosets.insert(key).second) reps.push_back(w);
    }
    return reps;
}

}  // namespace gkmchar
