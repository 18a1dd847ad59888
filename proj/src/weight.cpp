#include "gkmchar/weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkmchar {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMat: dimension mismatch in product");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const std::int64_t aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

std::vector<std::int64_t> IntMat::apply(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("IntMat: dimension mismatch in apply");
    std::vector<std::int64_t> r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

std::int64_t det_recursive(const IntMat& m, std::vector<int> cols, int row) {
    const int n = static_cast<int>(cols.size());
    if (n == 1) return m.at(row, cols[0]);
    std::int64_t acc = 0;
    std::int64_t sign = 1;
    for (int j = 0; j < n; ++j) {
        std::vector<int> rest;
        rest.reserve(n - 1);
        for (int t = 0; t < n; ++t)
            if (t != j) rest.push_back(cols[t]);
        acc += sign * m.at(row, cols[j]) * det_recursive(m, rest, row + 1);
        sign = -sign;
    }
    return acc;
}

}  // namespace

std::int64_t IntMat::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMat: determinant of non-square matrix");
    if (rows_ == 0) return 1;
    std::vector<int> cols(rows_);
    for (int i = 0; i < rows_; ++i) cols[i] = i;
    return det_recursive(*this, cols, 0);
}

IntMat IntMat::transpose() const {
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMat IntMat::inverse_unimodular() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMat: inverse of non-square matrix");
    const std::int64_t d = determinant();
    if (d != 1 && d != -1) throw std::invalid_argument("IntMat: inverse requires det = +-1");
    const int n = rows_;
    IntMat inv(n, n);
    if (n == 1) {
        inv.at(0, 0) = d;  // 1/d = d for d = +-1
        return inv;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // Cofactor C_ji for the adjugate.
            std::vector<int> cols;
            cols.reserve(n - 1);
            for (int t = 0; t < n; ++t)
                if (t != i) cols.push_back(t);
            // Minor of (j, i): delete row j and column i.
            IntMat sub(n - 1, n - 1);
            int sr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0; c < n - 1; ++c) sub.at(sr, c) = at(r, cols[c]);
                ++sr;
            }
            const std::int64_t cof = (((i + j) % 2) ? -1 : 1) * sub.determinant();
            inv.at(i, j) = cof * d;  // adjugate / det with det = +-1
        }
    return inv;
}

Weight Weight::from_fundamental(const std::vector<std::int64_t>& fw) {
    std::vector<std::int64_t> c(fw.size());
    for (std::size_t i = 0; i < fw.size(); ++i) c[i] = 2 * fw[i];
    return Weight(std::move(c));
}

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

bool Weight::is_integral() const {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c % 2 == 0; });
}

namespace {
void check_same_rank(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": rank mismatch");
}
}  // namespace

Weight Weight::operator+(const Weight& o) const {
    check_same_rank(coords.size(), o.coords.size(), "Weight::operator+");
    Weight r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    check_same_rank(coords.size(), o.coords.size(), "Weight::operator-");
    Weight r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

Weight Weight::operator*(std::int64_t k) const {
    Weight r = *this;
    for (auto& c : r.coords) c *= k;
    return r;
}

Weight Weight::half() const {
    Weight r = *this;
    for (auto& c : r.coords) {
        if (c % 2 != 0) throw std::invalid_argument("Weight::half: odd coordinate " + to_string());
        c /= 2;
    }
    return r;
}

std::string Weight::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(coords[i]);
    }
    s += ")/2";
    return s;
}

bool CorootVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

CorootVector CorootVector::operator+(const CorootVector& o) const {
    check_same_rank(coords.size(), o.coords.size(), "CorootVector::operator+");
    CorootVector r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

CorootVector CorootVector::operator-() const {
    CorootVector r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

Rat pairing(const Weight& lambda, const CorootVector& x) {
    Rat r = make_rat(pairing_times2(lambda, x), 2);
    return r;
}

std::int64_t pairing_times2(const Weight& lambda, const CorootVector& x) {
    check_same_rank(lambda.coords.size(), x.coords.size(), "pairing");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < lambda.coords.size(); ++i) acc += lambda.coords[i] * x.coords[i];
    return acc;
}

bool WeylElement::is_identity() const { return matrix == IntMat::identity(matrix.rows()); }

CorootVector WeylElement::apply(const CorootVector& x) const {
    // The coroot-side action is the inverse transpose of the weight-side
    // matrix, so that pairings are preserved.
    return CorootVector(matrix.inverse_unimodular().transpose().apply(x.coords));
}

WeylElement WeylElement::inverse() const {
    WeylElement r;
    r.matrix = matrix.inverse_unimodular();
    r.det = det;
    r.length = length;
    return r;
}

}  // namespace gkmchar
