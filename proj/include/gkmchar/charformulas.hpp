#pragma once

#include <cstdint>

#include "gkmchar/localize.hpp"
#include "gkmchar/theta.hpp"

namespace gkmchar {

// Character of the holomorphically induced representation, computed from
// the closed fixed-point formula
//   sum over cosets [w] of  w(chi) / prod_{alpha in R} (1 - z^{w(alpha)}),
// assembled over the full (uncollapsed) product of all vertex Euler
// classes and cancelled exactly.  Independent of the pushforward_k code
// path, which collapses the denominator first; the two must agree.
// chi must be W_H-invariant.  Guarded to small vertex/factor counts;
// larger inputs go through pushforward_k.
LaurentPoly weyl_ind(const EqualRankPair& p, const LaurentPoly& chi,
                     ExecMode mode = default_exec_mode());

// The cohomological analogue.  For H = T this is the classical
//   (sum over W of det(w) * w(f)) / prod_{alpha in R} linear form of alpha,
// valid because W permutes R up to det(w) signs.  A proper H does not
// permute R, so there the sum is assembled over the full product of the
// per-vertex Euler classes, exactly as in weyl_ind.  Either way the
// quotient drops the degree by |R|.
Poly cohomology_pushforward(const EqualRankPair& p, const Poly& f,
                            ExecMode mode = default_exec_mode());

// The elliptic induction map on q-series (H = T only):
//   ind(f) = sum_{w in W} det(w) w(f)
//            / prod_{alpha in R} -(z^{alpha/2}-z^{-alpha/2}) prod_n (1-q^n z^alpha)(1-q^n z^-alpha)
// with R the negative roots.  The signed-sum shape relies on W permuting
// R up to signs, which fails for a proper subgroup, so those inputs are
// rejected.  The result is computed through every q-order the truncation
// of f determines, then cut at target_order if that is lower.
QSeries kac_ind(const EqualRankPair& p, const QSeries& f, std::int64_t target_order,
                ExecMode mode = default_exec_mode());

struct KacCharacter {
    QSeries series;
    std::int64_t level = 0;  // level of the result: input level minus g
    Weight rho_shift;        // reported bookkeeping shift, not applied
};

// Level-(k+g) basis theta function pushed through kac_ind (H = T):
//   ind(theta_{k+g,lambda}), a level-k series.  Internal truncations are
// padded so the output is complete through target_order.
KacCharacter kac_basis_ind(const EqualRankPair& p, std::int64_t k, const Weight& lambda,
                           const LevelForm& form, std::int64_t target_order,
                           ExecMode mode = default_exec_mode());

// Both sides of the classical denominator identity
//   sum_{w in W} det(w) z^{w(rho)} = prod_{alpha>0} (z^{alpha/2} - z^{-alpha/2}).
LaurentPoly weyl_denominator_sum(const RootSystem& rs);
LaurentPoly weyl_denominator_product(const RootSystem& rs);

}  // namespace gkmchar
