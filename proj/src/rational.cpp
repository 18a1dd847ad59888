#include "gkmchar/rational.hpp"

#include <stdexcept>

namespace gkmchar {

std::int64_t to_int64(const Rat& r) {
    if (!is_integer(r)) throw std::invalid_argument("to_int64: not an integer: " + rat_to_string(r));
    const mpz_class num = r.get_num();
    if (!num.fits_slong_p()) throw std::overflow_error("to_int64: out of range");
    return static_cast<std::int64_t>(num.get_si());
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    if (b == 0) throw std::invalid_argument("floor_div: zero divisor");
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

}  // namespace gkmchar
