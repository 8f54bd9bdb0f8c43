#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace oforge {

using BigInt = mpz_class;

// Exact rational; mpq_class keeps denominators positive and fractions reduced
// once canonicalize() has run, which the helpers below always do.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// accepts "3", "-3", "1/2", "-7/4"
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string format_rat(const Rat& r) { return r.get_str(); }

} // namespace oforge
