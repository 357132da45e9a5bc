#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace homquiver {

// Exact rational scalar. All arithmetic assumes canonical form; mpq_class
// keeps canonicity under +,-,*,/ but NOT under the (num,den) constructor,
// so fractions must be built through ratio() or parse_rational().
using Rat = mpq_class;

inline Rat ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "3", "-3", "2/5", "-2/5".
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace homquiver
