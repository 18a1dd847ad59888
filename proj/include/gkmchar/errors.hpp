#pragma once

#include <stdexcept>
#include <string>
#include <vector>
#include <cstdint>

namespace gkmchar {

// Exact division by a binomial (1 - z^a), a linear form, or a q-series
// failed.  Carries enough of a witness to point at the offending data:
// for Laurent division the fiber key and its (nonzero) sum, for series
// division the q-order at which the per-order division broke down.
class NotDivisibleError : public std::runtime_error {
public:
    explicit NotDivisibleError(std::string msg,
                               std::vector<std::int64_t> witness = {},
                               int series_order = 0)
        : std::runtime_error(std::move(msg)),
          witness_coords(std::move(witness)),
          order(series_order) {}

    std::vector<std::int64_t> witness_coords;  // fiber key / exponent data
    int order = 0;                             // q-order, when applicable
};

// A push-forward was asked to integrate a tuple of fixed-point values that
// is not the restriction of a genuine equivariant class.
class InvalidSectionError : public std::runtime_error {
public:
    explicit InvalidSectionError(std::string msg, int edge = -1)
        : std::runtime_error(std::move(msg)), failing_edge(edge) {}

    int failing_edge;
};

// Quasi-periodicity check: the truncation order is too small for the
// requested lattice vector, leaving no orders to compare.
class EmptyWindowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gkmchar
