#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkmchar/weight.hpp"

namespace gkmchar {

// Supported Cartan families.  A/B/C/D cover the classical types; ranks
// above 4 are constructible but Weyl-group enumeration is guarded.
enum class Family { A, B, C, D, G2 };

struct CartanType {
    Family family = Family::A;
    int rank = 1;

    // Accepts "A2", "G2", "B 3" is not accepted; family letter + decimal rank.
    static CartanType parse(const std::string& s);
    static CartanType make(Family f, int rank);  // validates
    std::string to_string() const;

    bool operator==(const CartanType&) const = default;
};

// One positive root, carried in three coordinate systems at once:
// half-weight coords (for characters), simple-root coords (for
// positivity and subsystem tests) and the coroot in simple-coroot
// coords (for pairings).
struct Root {
    Weight weight;
    CorootVector coroot;
    std::vector<std::int64_t> simple_coords;
    std::int64_t height = 0;
};

class RootSystem {
public:
    CartanType type;
    IntMat cartan;                       // cartan.at(i,j) = <alpha_j, alpha_i^vee>
    std::vector<std::int64_t> symmetrizer;  // d_i with (alpha_i, alpha_i) = 2 d_i
    std::vector<Root> positive;          // sorted by (height, simple_coords)
    std::vector<WeylElement> simple_reflections;
    std::size_t highest_root_index = 0;
    Weight rho;                          // half-sum of positive roots

    int rank() const { return type.rank; }
    std::size_t num_positive_roots() const { return positive.size(); }
    const Root& highest_root() const { return positive[highest_root_index]; }
    bool is_simple() const;              // Dynkin diagram connected

    // Signed root lookup by half-weight coords: (index into positive, sign).
    std::optional<std::pair<std::size_t, int>> find_root(const Weight& w) const;
    bool is_root(const Weight& w) const { return find_root(w).has_value(); }

    // Coxeter length of the matrix action = #{alpha > 0 : w(alpha) < 0}.
    int length_of(const IntMat& m) const;
    WeylElement element_from_matrix(const IntMat& m) const;  // fills det + length
    WeylElement identity_element() const;
    WeylElement compose(const WeylElement& a, const WeylElement& b) const;

    // Reduced word as 0-based generator indices (greedy left descents).
    std::vector<int> reduced_word(const WeylElement& w) const;
    std::string word_string(const WeylElement& w) const;  // "s1 s2", "e"

    // W-invariant inner product with (alpha_i, alpha_i) = 2 d_i, on
    // half-weight coordinates (exact rational).
    Rat inner_product(const Weight& a, const Weight& b) const;

private:
    std::map<std::vector<std::int64_t>, std::pair<std::size_t, int>> root_index_;
    friend RootSystem build_root_system(CartanType t);
};

RootSystem build_root_system(CartanType t);

// Full duplicate-free enumeration of W, sorted by (length, matrix).
// Guarded to rank <= 4.
std::vector<WeylElement> weyl_group(const RootSystem& rs);

// |W| by the closed-form product per family; works at any supported rank.
std::int64_t weyl_order(const RootSystem& rs);

// g = <rho, theta^vee> + 1 for the highest root theta.  Simple systems only.
std::int64_t dual_coxeter_number(const RootSystem& rs);

// The minimal even W-invariant positive-definite form on the coroot
// lattice, together with the dual Coxeter number.
struct LevelForm {
    IntMat gram;                  // values of the form on simple coroots
    std::int64_t dual_coxeter = 0;

    std::int64_t eval(const CorootVector& x, const CorootVector& y) const;
    // I#(x): the weight <I(x, .)>, in half-weight coordinates.
    Weight sharp(const CorootVector& x) const;
    // phi(x) = I(x,x)/2, an integer by evenness.
    std::int64_t phi(const CorootVector& x) const;
};

// Computes sum_{alpha<0} alpha (x) alpha on the coroot lattice, divides by
// the dual Coxeter number (exactness is checked) and verifies evenness
// and W-invariance of the result.
LevelForm looijenga_form(const RootSystem& rs);

// An equal-rank pair H < G: the ambient system plus a simple system for H
// drawn from the positive roots of G.
class EqualRankPair {
public:
    RootSystem ambient;
    std::vector<std::size_t> sub_simple;     // indices into ambient.positive
    std::vector<WeylElement> weyl_h;         // all of W_H, sorted

    // sub = indices into ambient.positive forming the simple roots of H
    // (pairwise non-positive pairings are required).  Empty sub = torus.
    static EqualRankPair make(const RootSystem& rs, const std::vector<std::size_t>& sub);
    // Convenience: pick out simple roots of G by 0-based index.
    static EqualRankPair from_simple_indices(const RootSystem& rs, const std::vector<int>& idx);

    bool is_torus() const { return sub_simple.empty(); }
    // Is the given signed root (by positive index) a root of H?
    bool is_h_root(std::size_t positive_index) const;
    // The multiset R = R_-^G \ R_-^H of tangent weights at the base point.
    std::vector<Weight> tangent_weights() const;
    std::size_t flag_dimension() const { return tangent_weights_count_; }

private:
    std::vector<bool> h_root_mask_;          // over positive roots of G
    std::size_t tangent_weights_count_ = 0;
};

// One minimal-length representative per coset w W_H, sorted by
// (length, matrix); count = |W_G| / |W_H|.
std::vector<WeylElement> coset_representatives(const EqualRankPair& p);

// The reflection s_alpha in the given positive root, as its matrix on
// half-weight coordinates: s_alpha(x) = x - <x, alpha^vee> alpha.
IntMat reflection_matrix(const RootSystem& rs, std::size_t positive_index);

}  // namespace gkmchar
