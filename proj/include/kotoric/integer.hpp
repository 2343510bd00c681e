#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kotoric {

// Exact arbitrary-precision integer used for every coefficient and matrix
// entry in the library. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;

// Floor division and matching remainder (operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline int mod4(int s) { return ((s % 4) + 4) % 4; }

inline bool odd(int s) { return s % 2 != 0; }

}  // namespace kotoric
