#pragma once

#include <cstddef>
#include <vector>

#include "gkmchar/momentgraph.hpp"
#include "gkmchar/qseries.hpp"

namespace gkmchar {

// Factored Euler classes of the tangent spaces at the fixed points: at
// vertex [w] the factors are {w(alpha) : alpha in R} with R the negative
// roots of G that are not roots of H.
struct EulerData {
    Theory theory = Theory::ktheory;
    std::vector<std::vector<Weight>> factors;  // per vertex, sorted per vertex
};

EulerData euler_data(const MomentGraph& g, Theory theory);

// Expanded Euler class at one vertex.
LaurentPoly euler_class_k(const EulerData& e, std::size_t vertex);            // prod (1 - z^w(a))
Poly euler_class_h(const EulerData& e, std::size_t vertex);                    // prod of linear forms
QSeries euler_class_ell(const EulerData& e, std::size_t vertex, std::int64_t order,
                        ExecMode mode = default_exec_mode());

// Push-forward along G/H -> point by summing restriction / Euler class
// over the fixed points.  The summands are assembled over one collapsed
// common denominator (each sign-canonicalized factor kept once) and the
// denominator is then cancelled factor by factor; a division failure
// means the section was not the restriction of a genuine class and
// surfaces as NotDivisibleError.  With validate = true an explicit
// check_gkm runs first and a failing section raises InvalidSectionError.
LaurentPoly pushforward_k(const MomentGraph& g, const GKMSection& s, const EulerData& e,
                          bool validate = true, ExecMode mode = default_exec_mode());
Poly pushforward_h(const MomentGraph& g, const GKMSection& s, const EulerData& e,
                   bool validate = true, ExecMode mode = default_exec_mode());

}  // namespace gkmchar
