#pragma once

// Internal helpers: exact dense rational linear algebra for the tiny
// matrices (rank <= 4) that show up in level forms and lattice bounds.

#include <stdexcept>
#include <vector>

#include "gkmchar/rational.hpp"

namespace gkmchar::detail {

using RatMat = std::vector<std::vector<Rat>>;

inline RatMat rat_identity(int n) {
    RatMat m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

// Exact inverse by Gauss-Jordan elimination; throws on singular input.
inline RatMat rat_inverse(RatMat a) {
    const int n = static_cast<int>(a.size());
    RatMat inv = rat_identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("rat_inverse: singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Rat p = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// LDL^T decomposition of a symmetric positive-definite rational matrix:
// A = L D L^T with L unit lower triangular.  Throws if some pivot is not
// positive (input not positive definite).
struct LDL {
    RatMat l;              // unit lower triangular
    std::vector<Rat> d;    // positive pivots
};

inline LDL rat_ldl(const RatMat& a) {
    const int n = static_cast<int>(a.size());
    LDL out;
    out.l = rat_identity(n);
    out.d.assign(n, Rat(0));
    for (int j = 0; j < n; ++j) {
        Rat dj = a[j][j];
        for (int k = 0; k < j; ++k) dj -= out.l[j][k] * out.l[j][k] * out.d[k];
        if (!(dj > 0)) throw std::invalid_argument("rat_ldl: matrix not positive definite");
        out.d[j] = dj;
        for (int i = j + 1; i < n; ++i) {
            Rat v = a[i][j];
            for (int k = 0; k < j; ++k) v -= out.l[i][k] * out.l[j][k] * out.d[k];
            out.l[i][j] = v / dj;
        }
    }
    return out;
}

}  // namespace gkmchar::detail
