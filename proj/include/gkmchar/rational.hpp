#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gkmchar {

// Exact rational coefficients.  All ring arithmetic in the library is
// over Rat; no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// r must be integral; converts to int64 (throws on overflow).
std::int64_t to_int64(const Rat& r);

// Mathematical floor of num/den for int64 operands, den != 0.
std::int64_t floor_div(std::int64_t num, std::int64_t den);

std::string rat_to_string(const Rat& r);

}  // namespace gkmchar
