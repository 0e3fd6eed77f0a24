#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qcores {

// Exact rational scalar. All coefficient arithmetic in the library is exact;
// no floating point appears anywhere in the computational core.
using Rat = mpq_class;

inline Rat ratio(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1 / base);
    unsigned long n = e > 0 ? e : -e;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace qcores
