#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkmchar/rational.hpp"

namespace gkmchar {

// Small dense integer matrix, row-major.  Used for Cartan matrices and
// Weyl-group elements; ranks are tiny so nothing here is optimized.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    std::int64_t at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMat operator*(const IntMat& o) const;
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

    bool operator==(const IntMat& o) const = default;
    // Lexicographic order on the flattened entries; used only to make
    // enumerations deterministic.
    bool operator<(const IntMat& o) const { return a_ < o.a_; }

    std::int64_t determinant() const;
    IntMat transpose() const;
    // Exact inverse; requires det = +-1 (throws otherwise).
    IntMat inverse_unimodular() const;

    const std::vector<std::int64_t>& flat() const { return a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> a_;
};

// A point of the half-weight lattice.  coords[i] counts multiples of
// omega_i / 2 (omega_i the i-th fundamental weight), so the weight is
// (1/2) * sum coords[i] * omega_i.  Genuine weights are exactly the
// vectors with all coordinates even; the doubled basis exists so that
// half-roots like alpha/2 have integer coordinates too.
struct Weight {
    std::vector<std::int64_t> coords;

    Weight() = default;
    explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }
    // From fundamental-weight coordinates (integral weight).
    static Weight from_fundamental(const std::vector<std::int64_t>& fw);

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;
    // True iff the weight lies in the weight lattice (all coords even).
    bool is_integral() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(std::int64_t k) const;
    // Exact halving; throws if some coordinate is odd.
    Weight half() const;

    bool operator==(const Weight& o) const = default;
    bool operator<(const Weight& o) const { return coords < o.coords; }

    std::string to_string() const;  // e.g. "(3, -1)/2" style debug form
};

// An element of the coroot lattice, in the basis of simple coroots.
struct CorootVector {
    std::vector<std::int64_t> coords;

    CorootVector() = default;
    explicit CorootVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    static CorootVector zero(int rank) { return CorootVector(std::vector<std::int64_t>(rank, 0)); }

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    CorootVector operator+(const CorootVector& o) const;
    CorootVector operator-() const;

    bool operator==(const CorootVector& o) const = default;
    bool operator<(const CorootVector& o) const { return coords < o.coords; }
};

// <lambda, x> for lambda in the half-weight lattice and x in the coroot
// lattice.  Always a half-integer; an integer when lambda is integral.
Rat pairing(const Weight& lambda, const CorootVector& x);
// 2 * <lambda, x>, always an integer.
std::int64_t pairing_times2(const Weight& lambda, const CorootVector& x);

// A Weyl-group element, stored as its action on half-weight coordinates.
struct WeylElement {
    IntMat matrix;       // acts on Weight::coords
    int det = 1;         // +-1
    int length = 0;      // Coxeter length

    bool is_identity() const;
    Weight apply(const Weight& w) const { return Weight(matrix.apply(w.coords)); }
    // Action on the coroot lattice (inverse transpose in the dual bases).
    CorootVector apply(const CorootVector& x) const;

    WeylElement inverse() const;

    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    bool operator<(const WeylElement& o) const { return matrix < o.matrix; }
};

}  // namespace gkmchar
