#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace symexp {

// Exact arbitrary-precision rational. BCH denominators grow like lcm's of
// factorials, so fixed-width types are not an option.
using Rational = mpq_class;

inline std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: '" + s + "'");
    r.canonicalize();
    if (r.get_den() <= 0)
        throw std::invalid_argument("bad rational denominator: '" + s + "'");
    return r;
}

} // namespace symexp
