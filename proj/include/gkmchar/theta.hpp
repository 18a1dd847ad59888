#pragma once

#include <cstdint>
#include <vector>

#include "gkmchar/parallel.hpp"
#include "gkmchar/qseries.hpp"
#include "gkmchar/rootdata.hpp"

namespace gkmchar {

// Index (k, lambda) of a level-k theta function; lambda integral.
struct ThetaIndex {
    std::int64_t level = 1;
    Weight lambda;
};

// theta_{k,lambda} = sum over the coroot lattice of
//   q^{k phi(x) + lambda(x)} z^{k I#(x) + lambda},
// summed over every x with exponent <= order.  The enumeration completes
// the square exactly and expands outward per coordinate, so completeness
// is a monotonicity argument, not a float bound.  min_order of the
// result can be negative.
QSeries theta_series(const ThetaIndex& idx, const LevelForm& form, std::int64_t order,
                     ExecMode mode = default_exec_mode());

// A lower bound for the exponent k phi(x) + lambda(x) over the whole
// lattice (the completed square's constant term, floored).
std::int64_t theta_min_order_bound(const ThetaIndex& idx, const LevelForm& form);

// Representatives of the integral weights modulo k * I#(coroot lattice),
// the index set of the level-k theta basis; deterministic order.  Count
// equals det(k * gram).
std::vector<Weight> theta_representatives(const LevelForm& form, std::int64_t k);

// Reduce lambda into the representative box used by theta_representatives.
Weight reduce_theta_weight(const LevelForm& form, std::int64_t k, const Weight& lambda);

// Checks the level-k translation law
//   f(q^x z) = q^{-k phi(x)} z^{-k I#(x)} f(z)
// on all coefficient pairs the truncation determines: the law equates the
// coefficient at (m, mu) with the one at (m + mu(x) + k phi(x), mu + k I#(x)),
// and each stored term is compared with both its partners whenever the
// partner's order is at or below the truncation.  Throws EmptyWindowError
// if the truncation determines no pair at all; k = 0 is vacuously true.
bool quasi_periodicity_check(const QSeries& f, std::int64_t k, const CorootVector& x,
                             const LevelForm& form);

}  // namespace gkmchar
